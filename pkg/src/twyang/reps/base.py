import itertools
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.linalg import SparseOp, commutator
from twyang.core.scheme import IndexScheme
from twyang.exceptions.common import InvalidIndex

log = logging.getLogger(__name__)

type Generators = Mapping[tuple[int, int], SparseOp[MPQ]]


@dataclass(frozen=True, slots=True)
class LieRep:
    """A ``g_N``-module given by the matrices of all generators ``F_ij``.

    ``F_ij = E_ij - θ_ij E_{-j,-i}`` in the vector representation; every module here
    is a subquotient of its tensor powers, so ``F_ij = -θ_ij F_{-j,-i}`` holds throughout.
    """

    scheme: IndexScheme
    dim: int
    gens: Generators = field(repr=False)

    def gen(self, i: int, j: int) -> SparseOp[MPQ]:
        self.scheme.check(i, j)
        return self.gens.get((i, j)) or SparseOp.zero(self.dim)

    def apply(self, i: int, j: int, vec: Mapping[int, MPQ]) -> dict[int, MPQ]:
        return self.gen(i, j).apply(vec)

    def expected_bracket(self, i: int, j: int, k: int, l: int) -> SparseOp[MPQ]:  # noqa: E741
        """``[F_ij, F_kl]`` from the structure constants of ``g_N``."""
        s = self.scheme
        result = SparseOp.zero(self.dim)
        if k == j:
            result = result + self.gen(i, l)
        if i == l:
            result = result - self.gen(k, j)
        if k == -i:
            result = result - self.gen(-j, l).scale(s.theta(i, j))
        if l == -j:
            result = result + self.gen(k, -i).scale(s.theta(i, j))
        return result

    def bracket_failure(
        self,
        pairs: Iterable[tuple[tuple[int, int], tuple[int, int]]] | None = None,
    ) -> tuple[tuple[int, int], tuple[int, int]] | None:
        """The first generator pair whose commutator differs from the structure constants."""
        if pairs is None:
            pairs = self.spanning_pairs()
        for (i, j), (k, l) in pairs:  # noqa: E741
            actual = commutator(self.gen(i, j), self.gen(k, l))
            if actual != self.expected_bracket(i, j, k, l):
                return (i, j), (k, l)
        return None

    def spanning_pairs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Generator pairs covering every bracket up to ``F_ij = -θ_ij F_{-j,-i}``."""
        gens = [(i, j) for i, j in self.scheme.pairs() if i + j <= 0]
        return list(itertools.product(gens, gens))

    def symmetry_failure(self) -> tuple[int, int] | None:
        for i, j in self.scheme.pairs():
            if self.gen(i, j) != self.gen(-j, -i).scale(-self.scheme.theta(i, j)):
                return i, j
        return None

    def cartan(self, i: int) -> SparseOp[MPQ]:
        if i <= 0:
            msg = 'Cartan generators are indexed by positive indices.'
            raise InvalidIndex(msg, index=i)
        return self.gen(i, i)

    def with_generator(self, i: int, j: int, op: SparseOp[MPQ]) -> 'LieRep':
        gens = dict(self.gens)
        gens[i, j] = op
        return LieRep(self.scheme, self.dim, gens)


def trivial_rep(scheme: IndexScheme) -> LieRep:
    """The one-dimensional module on which every ``F_ij`` vanishes."""
    return LieRep(scheme, 1, {})


def basis_vector(index: int) -> dict[int, MPQ]:
    return {index: QQ.one}
