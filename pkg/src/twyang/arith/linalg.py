"""Sparse operators over duck-typed fields and exact linear algebra over ``QQ``."""

import logging
from collections.abc import Callable, Hashable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from sympy import QQ
from sympy.external.gmpy import MPQ
from sympy.polys.matrices import DomainMatrix

from twyang.exceptions.common import ShapeMismatch, SubspaceNotInvariant

log = logging.getLogger(__name__)

type Vector[K] = dict[int, K]


def add_scaled[K](acc: dict[Any, K], vec: Mapping[Any, K], coeff: Any = None) -> None:
    """``acc += coeff * vec`` in place, dropping entries that cancel."""
    for key, value in vec.items():
        term = value if coeff is None else value * coeff
        if not term:
            continue
        current = acc.get(key)
        if current is None:
            acc[key] = term
            continue
        total = current + term
        if total:
            acc[key] = total
        else:
            del acc[key]


def scale_vector[K](vec: Mapping[Any, K], coeff: Any) -> dict[Any, K]:
    if not coeff:
        return {}
    return {key: value * coeff for key, value in vec.items()}


@dataclass(frozen=True, slots=True, eq=False)
class SparseOp[K]:
    """Square operator stored by columns: ``cols[j][i]`` is the ``(i, j)`` entry."""

    dim: int
    cols: Mapping[int, Mapping[int, K]] = field(default_factory=dict)

    @classmethod
    def zero(cls, dim: int) -> 'SparseOp[K]':
        return cls(dim, {})

    @classmethod
    def identity(cls, dim: int, one: K) -> 'SparseOp[K]':
        return cls(dim, {j: {j: one} for j in range(dim)})

    @classmethod
    def from_columns(cls, dim: int, columns: Mapping[int, Mapping[int, K]]) -> 'SparseOp[K]':
        cleaned = {}
        for j, col in columns.items():
            kept = {i: v for i, v in col.items() if v}
            if kept:
                cleaned[j] = kept
        return cls(dim, cleaned)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[K]]) -> 'SparseOp[K]':
        dim = len(rows)
        cols: dict[int, dict[int, K]] = {}
        for i, row in enumerate(rows):
            if len(row) != dim:
                msg = 'Operator rows must form a square matrix.'
                raise ShapeMismatch(msg, expected=dim, actual=len(row))
            for j, value in enumerate(row):
                if value:
                    cols.setdefault(j, {})[i] = value
        return cls(dim, cols)

    def column(self, j: int) -> Mapping[int, K]:
        return self.cols.get(j, {})

    def entry(self, i: int, j: int, zero: Any = 0) -> K | Any:
        return self.cols.get(j, {}).get(i, zero)

    def entries(self) -> Iterator[tuple[int, int, K]]:
        for j in sorted(self.cols):
            col = self.cols[j]
            for i in sorted(col):
                yield i, j, col[i]

    def apply(self, vec: Mapping[int, K]) -> dict[int, K]:
        result: dict[int, K] = {}
        for j, coeff in vec.items():
            col = self.cols.get(j)
            if col:
                add_scaled(result, col, coeff)
        return result

    def _check(self, other: 'SparseOp[Any]') -> None:
        if other.dim != self.dim:
            msg = 'Operators act on spaces of different dimension.'
            raise ShapeMismatch(msg, expected=self.dim, actual=other.dim)

    def __matmul__(self, other: 'SparseOp[K]') -> 'SparseOp[K]':
        self._check(other)
        cols = {j: self.apply(col) for j, col in other.cols.items()}
        return SparseOp(self.dim, {j: col for j, col in cols.items() if col})

    def __add__(self, other: 'SparseOp[K]') -> 'SparseOp[K]':
        self._check(other)
        cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            target = cols.setdefault(j, {})
            add_scaled(target, col)
        return SparseOp(self.dim, {j: col for j, col in cols.items() if col})

    def __neg__(self) -> 'SparseOp[K]':
        cols = {j: {i: -v for i, v in col.items()} for j, col in self.cols.items()}
        return SparseOp(self.dim, cols)

    def __sub__(self, other: 'SparseOp[K]') -> 'SparseOp[K]':
        return self + (-other)

    def scale(self, coeff: Any) -> 'SparseOp[K]':
        if not coeff:
            return SparseOp(self.dim, {})
        return SparseOp(
            self.dim,
            {j: {i: v * coeff for i, v in col.items()} for j, col in self.cols.items()},
        )

    def __mul__(self, coeff: Any) -> 'SparseOp[K]':
        return self.scale(coeff)

    __rmul__ = __mul__

    def map[T](self, fn: Callable[[K], T]) -> 'SparseOp[T]':
        return SparseOp.from_columns(
            self.dim,
            {j: {i: fn(v) for i, v in col.items()} for j, col in self.cols.items()},
        )

    def transpose(self) -> 'SparseOp[K]':
        cols: dict[int, dict[int, K]] = {}
        for i, j, value in self.entries():
            cols.setdefault(i, {})[j] = value
        return SparseOp(self.dim, cols)

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def scalar_value(self, zero: Any = 0) -> K | Any | None:
        """The scalar ``c`` if the operator equals ``c * Id``, otherwise ``None``."""
        if self.is_zero():
            return zero
        diagonal = None
        for j in range(self.dim):
            col = self.cols.get(j, {})
            if len(col) != 1 or j not in col:
                return None
            if diagonal is None:
                diagonal = col[j]
            elif col[j] != diagonal:
                return None
        return diagonal

    def to_rows(self, zero: Any = 0) -> list[list[K | Any]]:
        rows: list[list[Any]] = [[zero] * self.dim for _ in range(self.dim)]
        for i, j, value in self.entries():
            rows[i][j] = value
        return rows

    def first_difference(self, other: 'SparseOp[K]') -> tuple[int, int] | None:
        for i, j, _ in (self - other).entries():
            return i, j
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseOp):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]


def commutator[K](a: SparseOp[K], b: SparseOp[K]) -> SparseOp[K]:
    return a @ b - b @ a


def _domain_matrix(rows: Sequence[Mapping[int, MPQ]], ncols: int) -> DomainMatrix:
    data = {i: {j: QQ.convert(v) for j, v in row.items() if v} for i, row in enumerate(rows)}
    return DomainMatrix({i: row for i, row in data.items() if row}, (len(rows), ncols), QQ)


def rref_rows(rows: Sequence[Mapping[int, MPQ]], ncols: int) -> tuple[list[list[MPQ]], list[int]]:
    """Reduced row echelon form (non-zero rows only) and the pivot columns."""
    if not rows:
        return [], []
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    dense = reduced.to_list()
    return [list(dense[r]) for r in range(len(pivots))], list(pivots)


def nullspace(rows: Sequence[Mapping[int, MPQ]], ncols: int) -> list[list[MPQ]]:
    """Basis of ``{x : A x = 0}`` in reduced echelon form.

    Rows are sparse mappings ``column -> value``; the returned basis is
    deterministic, its first vector is the lexicographically first echelon row.
    """
    if not any(rows):
        return [[QQ.one if i == j else QQ.zero for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    kernel = reduced.nullspace_from_rref(pivots).to_list()
    if not kernel:
        return []
    basis, _ = rref_rows([dict(enumerate(vec)) for vec in kernel], ncols)
    log.debug('nullspace: %d equations, %d unknowns, kernel %d', len(rows), ncols, len(basis))
    return basis


def rank(rows: Sequence[Mapping[int, MPQ]], ncols: int) -> int:
    return len(rref_rows(rows, ncols)[1])


def gauss_inverse[K](matrix: Sequence[Sequence[K]], one: K, zero: K) -> list[list[K]]:
    """Gauss-Jordan inverse over any exact field (rationals or rational functions)."""
    size = len(matrix)
    work = [
        list(row) + [one if i == j else zero for j in range(size)] for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            msg = 'Matrix is singular.'
            raise ZeroDivisionError(msg)
        work[col], work[pivot] = work[pivot], work[col]
        inv = one / work[col][col]
        work[col] = [v * inv if v else zero for v in work[col]]
        for r in range(size):
            factor = work[r][col]
            if r == col or not factor:
                continue
            work[r] = [a - factor * b if b else a for a, b in zip(work[r], work[col], strict=True)]
    return [row[size:] for row in work]


class EchelonBasis[Key: Hashable]:
    """Incrementally built, fully reduced basis of sparse rational vectors.

    Each stored row has coefficient 1 at its pivot (its smallest key) and 0 at
    every other pivot, so coordinates of a vector in the span are read off at
    the pivots.
    """

    def __init__(self) -> None:
        self._rows: dict[Key, dict[Key, MPQ]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[Key]:
        return sorted(self._rows)  # type: ignore[type-var]

    @property
    def vectors(self) -> list[dict[Key, MPQ]]:
        return [self._rows[p] for p in self.pivots]

    def reduce(self, vec: Mapping[Key, MPQ]) -> dict[Key, MPQ]:
        residual = {k: v for k, v in vec.items() if v}
        for pivot, row in self._rows.items():
            coeff = residual.get(pivot)
            if coeff:
                add_scaled(residual, row, -coeff)
        return residual

    def add(self, vec: Mapping[Key, MPQ]) -> bool:
        residual = self.reduce(vec)
        if not residual:
            return False
        pivot = min(residual)  # type: ignore[type-var]
        lead = residual[pivot]
        row = {k: v / lead for k, v in residual.items()}
        for other in self._rows.values():
            coeff = other.get(pivot)
            if coeff:
                add_scaled(other, row, -coeff)
        self._rows[pivot] = row
        return True

    def contains(self, vec: Mapping[Key, MPQ]) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: Mapping[Key, MPQ]) -> list[MPQ]:
        if not self.contains(vec):
            msg = 'Vector leaves the span of the basis.'
            raise SubspaceNotInvariant(msg)
        return [vec.get(p, QQ.zero) for p in self.pivots]
