"""Exact subspaces of a module: joint eigenspaces and ``g_M``-highest vectors."""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.linalg import EchelonBasis, SparseOp, add_scaled, nullspace
from twyang.exceptions.common import ShapeMismatch, SubspaceNotInvariant
from twyang.reps.base import LieRep

log = logging.getLogger(__name__)

type Vector = dict[int, MPQ]


def _echelon(vectors: Iterable[Mapping[int, MPQ]]) -> EchelonBasis[int]:
    basis: EchelonBasis[int] = EchelonBasis()
    for vec in vectors:
        basis.add(vec)
    return basis


@dataclass(frozen=True, slots=True)
class Subspace:
    """A subspace of ``rep`` spanned by a fully reduced echelon basis."""

    rep: LieRep
    basis: tuple[Vector, ...]
    _echelon: EchelonBasis[int] = field(repr=False, compare=False)

    @classmethod
    def span(cls, rep: LieRep, vectors: Iterable[Mapping[int, MPQ]]) -> 'Subspace':
        echelon = _echelon(vectors)
        return cls(rep, tuple(dict(v) for v in echelon.vectors), echelon)

    @classmethod
    def whole(cls, rep: LieRep) -> 'Subspace':
        return cls.span(rep, ({i: QQ.one} for i in range(rep.dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Mapping[int, MPQ]) -> bool:
        return self._echelon.contains(vec)

    def coordinates(self, vec: Mapping[int, MPQ]) -> list[MPQ]:
        return self._echelon.coordinates(vec)

    def vector(self, coords: Sequence[MPQ]) -> Vector:
        if len(coords) != self.dim:
            msg = 'Coordinate count differs from the dimension.'
            raise ShapeMismatch(msg, self.dim, len(coords))
        result: Vector = {}
        for coeff, vec in zip(coords, self.basis, strict=True):
            add_scaled(result, vec, coeff)
        return result

    def restrict(self, op: SparseOp[MPQ]) -> SparseOp[MPQ]:
        """Matrix of ``op`` in the subspace basis."""
        cols: dict[int, dict[int, MPQ]] = {}
        for k, vec in enumerate(self.basis):
            image = op.apply(vec)
            if not self.contains(image):
                msg = f'Operator maps basis vector {k} out of the subspace.'
                raise SubspaceNotInvariant(msg)
            cols[k] = dict(enumerate(self.coordinates(image)))
        return SparseOp.from_columns(self.dim, cols)

    def intersect_kernel(self, ops: Iterable[SparseOp[MPQ]]) -> 'Subspace':
        """``{v in self : op v = 0 for every op}``."""
        rows: dict[tuple[int, int], dict[int, MPQ]] = {}
        for t, op in enumerate(ops):
            for k, vec in enumerate(self.basis):
                for i, value in op.apply(vec).items():
                    rows.setdefault((t, i), {})[k] = value
        if not rows:
            return self
        kernel = nullspace([rows[key] for key in sorted(rows)], self.dim)
        log.debug('intersect_kernel: %d equations, dim %d -> %d', len(rows), self.dim, len(kernel))
        return Subspace.span(self.rep, (self.vector(coords) for coords in kernel))


def _shifted(op: SparseOp[MPQ], value: MPQ) -> SparseOp[MPQ]:
    return op - SparseOp.identity(op.dim, QQ.one).scale(value)


def weight_space(
    rep: LieRep,
    cartan_indices: Sequence[int],
    target: Sequence[MPQ | int],
) -> Subspace:
    """Joint eigenspace of the ``F_ii`` with ``i`` in ``cartan_indices`` for ``target``."""
    if len(set(cartan_indices)) != len(cartan_indices):
        msg = 'Cartan indices must be distinct.'
        raise ValueError(msg)
    if len(cartan_indices) != len(target):
        msg = 'One eigenvalue per Cartan index.'
        raise ShapeMismatch(msg, len(cartan_indices), len(target))
    ops = [
        _shifted(rep.cartan(i), QQ.convert(value))
        for i, value in zip(cartan_indices, target, strict=True)
    ]
    return Subspace.whole(rep).intersect_kernel(ops)


def skew_subspace(rep: LieRep, mu: Sequence[MPQ | int], m: int) -> Subspace:
    """``V(λ)^+_μ``: vectors killed by ``F_ij`` (``-m <= i < j <= m``) with ``F_ii = μ_i``."""
    if len(mu) != m:
        msg = 'The weight μ must have m entries.'
        raise ShapeMismatch(msg, m, len(mu))
    inner = rep.scheme.inner(m)
    ops = [rep.gen(i, j) for i in inner.indices for j in inner.indices if i < j]
    ops += [_shifted(rep.cartan(i), QQ.convert(mu[i - 1])) for i in range(1, m + 1)]
    space = Subspace.whole(rep).intersect_kernel(ops)
    log.debug('skew_subspace: mu=%s, m=%d, dim %d', tuple(mu), m, space.dim)
    return space
