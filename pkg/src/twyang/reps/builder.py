"""Concrete ``g_N``-modules: the vector representation, tensor powers and ``V(λ)``."""

import itertools
import logging
from collections import deque
from collections.abc import Mapping, Sequence

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.linalg import EchelonBasis, SparseOp, add_scaled, nullspace
from twyang.arith.rational import floor, is_integer
from twyang.core.scheme import IndexScheme, sign
from twyang.core.tensor import TensorKey
from twyang.exceptions.common import NoHighestVector, RelationCheckFailed, SizeLimitExceeded
from twyang.reps.base import LieRep, trivial_rep
from twyang.reps.config import DEFAULT_SIZE_LIMIT, RepConfig, env_size_limit
from twyang.utils.validation import as_highest_weight, check_highest_weight

log = logging.getLogger(__name__)

type TensorState = dict[TensorKey, MPQ]


def vector_images(scheme: IndexScheme, i: int, j: int, c: int) -> list[tuple[int, MPQ]]:
    """``F_ij e_c = δ_jc e_i - θ_ij δ_{-i,c} e_{-j}`` as ``(index, coefficient)`` pairs."""
    images: list[tuple[int, MPQ]] = []
    if c == j:
        images.append((i, QQ.one))
    if c == -i:
        images.append((-j, QQ(-scheme.theta(i, j))))
    return images


class TensorPower:
    """``(C^N)^{⊗d}`` with vectors stored sparsely by their index tuples."""

    def __init__(self, scheme: IndexScheme, d: int) -> None:
        self.scheme = scheme
        self.d = d

    def apply(self, i: int, j: int, vec: Mapping[TensorKey, MPQ]) -> TensorState:
        result: TensorState = {}
        for key, coeff in vec.items():
            for slot, c in enumerate(key):
                for out, factor in vector_images(self.scheme, i, j, c):
                    image = (*key[:slot], out, *key[slot + 1 :])
                    value = result.get(image, QQ.zero) + coeff * factor
                    if value:
                        result[image] = value
                    else:
                        result.pop(image, None)
        return result

    def weight_vectors(self, weight: Sequence[MPQ]) -> list[TensorKey]:
        """Basis tensors of weight ``λ`` when ``d = Σ |λ_i|``, in lexicographic order."""
        letters: list[int] = []
        for r, value in enumerate(weight, start=1):
            letters += [sign(floor(value)) * self.scheme.label(r)] * abs(floor(value))
        return sorted(set(itertools.permutations(letters)))


class RepBuilder:
    """Builds modules for one index scheme, honoring the size guard."""

    size_limit: int = DEFAULT_SIZE_LIMIT
    verify_brackets: bool = True

    def __init__(self, scheme: IndexScheme, *, config: RepConfig | None = None) -> None:
        self.scheme = scheme
        self.size_limit = env_size_limit()
        if config is None:
            return
        if config.size_limit is not None:
            self.size_limit = config.size_limit
        if config.verify_brackets is not None:
            self.verify_brackets = config.verify_brackets

    def _guard(self, size: int) -> None:
        if size > self.size_limit:
            msg = f'{size} basis states exceed the limit {self.size_limit}.'
            raise SizeLimitExceeded(msg, size=size, limit=self.size_limit)

    def _verified(self, rep: LieRep) -> LieRep:
        if not self.verify_brackets:
            return rep
        failure = rep.symmetry_failure()
        if failure is not None:
            msg = 'F_ij = -θ_ij F_{-j,-i} fails.'
            raise RelationCheckFailed(msg, witness=f'F{failure}')
        bracket = rep.bracket_failure()
        if bracket is not None:
            msg = 'Generator brackets differ from the structure constants of g_N.'
            raise RelationCheckFailed(msg, witness=f'[F{bracket[0]}, F{bracket[1]}]')
        return rep

    def vector(self) -> LieRep:
        positions = {c: p for p, c in enumerate(self.scheme.indices)}
        gens: dict[tuple[int, int], SparseOp[MPQ]] = {}
        for i, j in self.scheme.pairs():
            cols: dict[int, dict[int, MPQ]] = {}
            for c in self.scheme.indices:
                col = cols.setdefault(positions[c], {})
                for out, v in vector_images(self.scheme, i, j, c):
                    add_scaled(col, {positions[out]: v})
            gens[i, j] = SparseOp.from_columns(self.scheme.N, cols)
        return self._verified(LieRep(self.scheme, self.scheme.N, gens))

    def tensor(self, base: LieRep, d: int) -> LieRep:
        """``base^{⊗d}`` with ``F_ij`` acting as the sum over the slots."""
        if d < 1:
            msg = 'Tensor power must be at least 1.'
            raise ValueError(msg)
        if d == 1:
            return base
        size = base.dim**d
        self._guard(size)
        strides = [base.dim ** (d - 1 - s) for s in range(d)]
        gens: dict[tuple[int, int], SparseOp[MPQ]] = {}
        for i, j in self.scheme.pairs():
            local = base.gen(i, j)
            cols: dict[int, dict[int, MPQ]] = {}
            for t, digits in enumerate(itertools.product(range(base.dim), repeat=d)):
                col: dict[int, MPQ] = {}
                for slot, digit in enumerate(digits):
                    for out, value in local.column(digit).items():
                        target = t + (out - digit) * strides[slot]
                        col[target] = col.get(target, QQ.zero) + value
                cols[t] = col
            gens[i, j] = SparseOp.from_columns(size, cols)
        log.debug('tensor: dim %d^%d = %d', base.dim, d, size)
        return self._verified(LieRep(self.scheme, size, gens))

    def highest_vector(self, weight: Sequence[MPQ], power: TensorPower) -> TensorState:
        """First echelon kernel vector of ``F_ij ξ = 0`` (``i < j``) of weight ``λ``."""
        candidates = power.weight_vectors(weight)
        column = {key: k for k, key in enumerate(candidates)}
        raising = [(i, j) for i, j in self.scheme.pairs() if i < j]
        rows: dict[tuple[int, TensorKey], dict[int, MPQ]] = {}
        for g, (i, j) in enumerate(raising):
            for key in candidates:
                for out, value in power.apply(i, j, {key: QQ.one}).items():
                    rows.setdefault((g, out), {})[column[key]] = value
        kernel = nullspace([rows[key] for key in sorted(rows)], len(candidates))
        if not kernel:
            shown = tuple(str(x) for x in weight)
            msg = f'No highest vector of weight {shown} in degree {power.d}.'
            raise NoHighestVector(msg, weight=weight)
        log.debug('highest_vector: %d candidates, kernel %d', len(candidates), len(kernel))
        return {candidates[k]: v for k, v in enumerate(kernel[0]) if v}

    def irrep(self, weight: Sequence[MPQ | int]) -> LieRep:
        """``V(λ)``: cyclic span of a highest vector in ``(C^N)^{⊗d}``, ``d = Σ|λ_i|``."""
        lam = as_highest_weight(weight)
        check_highest_weight(lam, self.scheme.case, self.scheme.N)
        if not all(is_integer(x) for x in lam):
            msg = 'Half-integer weights are spin modules, which are not tensor representations.'
            raise ValueError(msg)
        d = sum(abs(floor(x)) for x in lam)
        if d == 0:
            return trivial_rep(self.scheme)
        self._guard(self.scheme.N**d)
        power = TensorPower(self.scheme, d)
        highest = self.highest_vector(lam, power)

        lowering = [(i, j) for i, j in self.scheme.pairs() if i > j]
        basis: EchelonBasis[TensorKey] = EchelonBasis()
        basis.add(highest)
        queue = deque([highest])
        while queue:
            vec = queue.popleft()
            for i, j in lowering:
                image = power.apply(i, j, vec)
                if image and basis.add(image):
                    queue.append(image)

        vectors = basis.vectors
        gens: dict[tuple[int, int], SparseOp[MPQ]] = {}
        for i, j in self.scheme.pairs():
            cols = {
                k: dict(enumerate(basis.coordinates(power.apply(i, j, vec))))
                for k, vec in enumerate(vectors)
            }
            gens[i, j] = SparseOp.from_columns(len(vectors), cols)
        log.debug('irrep: weight %s, degree %d, dim %d', lam, d, len(vectors))
        return self._verified(LieRep(self.scheme, len(vectors), gens))


def vector_rep(scheme: IndexScheme) -> LieRep:
    return RepBuilder(scheme).vector()


def tensor_rep(base: LieRep, d: int, config: RepConfig | None = None) -> LieRep:
    return RepBuilder(base.scheme, config=config).tensor(base, d)


def extract_irrep(
    weight: Sequence[MPQ | int],
    scheme: IndexScheme,
    config: RepConfig | None = None,
) -> LieRep:
    return RepBuilder(scheme, config=config).irrep(weight)
