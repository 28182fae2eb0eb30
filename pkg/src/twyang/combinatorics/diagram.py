"""Infinite row diagrams, their shifted intersections and the Drinfeld diagram rule."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.poly import Poly, format_factored, poly_from_roots
from twyang.exceptions.common import InfiniteIntersection
from twyang.types import ExtInt
from twyang.utils.validation import check_symplectic_weight

log = logging.getLogger(__name__)

type Cell = tuple[int, int]
type Interval = tuple[ExtInt, ExtInt]


@dataclass(frozen=True, slots=True)
class DrinfeldData:
    """Monic polynomials ``P_1..P_r`` kept as sorted root multisets."""

    roots: tuple[tuple[MPQ, ...], ...]

    @classmethod
    def from_roots(cls, roots: Sequence[Sequence[MPQ]]) -> 'DrinfeldData':
        return cls(tuple(tuple(sorted(QQ.convert(r) for r in group)) for group in roots))

    def __len__(self) -> int:
        return len(self.roots)

    def polys(self) -> list[Poly]:
        return [poly_from_roots(group) for group in self.roots]

    def first_is_palindromic(self) -> bool:
        """``P_1(u) = P_1(-u + 1)``, i.e. the roots of ``P_1`` are symmetric about ``1/2``."""
        if not self.roots:
            return True
        first = self.roots[0]
        return tuple(sorted(1 - r for r in first)) == first

    def to_text(self) -> list[str]:
        return [f'P_{k} = {format_factored(group)}' for k, group in enumerate(self.roots, start=1)]


@dataclass(frozen=True, slots=True)
class Diagram:
    """``Γ(λ)``: row ``i`` holds the cells ``(i, j)`` with ``ext(i) <= j < ext(i - 1)``.

    The extension is ``ext(0) = 0``, ``ext(-k) = -λ_k``, ``ext(k) = -inf`` for ``k > n``
    and ``ext(k) = +inf`` for ``k < -n``; only rows ``-n..n+1`` are non-empty.
    """

    weight: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.weight)

    def ext(self, k: int) -> ExtInt:
        if k == 0:
            return 0
        if k > self.n:
            return -math.inf
        if k < -self.n:
            return math.inf
        if k > 0:
            return self.weight[k - 1]
        return -self.weight[-k - 1]

    def row(self, i: int) -> Interval:
        lo, hi = self.ext(i), self.ext(i - 1)
        return (lo, hi) if lo < hi else (0, 0)

    @property
    def rows(self) -> dict[int, Interval]:
        rows = {i: self.row(i) for i in range(-self.n, self.n + 2)}
        return {i: (lo, hi) for i, (lo, hi) in rows.items() if lo < hi}

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        lo, hi = self.row(i)
        return lo <= j < hi

    def shifted(self, p: int) -> 'ShiftedDiagram':
        return ShiftedDiagram(self, p)


@dataclass(frozen=True, slots=True)
class ShiftedDiagram:
    """``Γ^{(p)}``: every cell of the base diagram lifted ``p`` rows up."""

    base: Diagram
    p: int

    def row(self, i: int) -> Interval:
        return self.base.row(i + self.p)

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return (i + self.p, j) in self.base


def diagram(weight: Sequence[int]) -> Diagram:
    check_symplectic_weight(weight)
    return Diagram(tuple(weight))


def content(cell: Cell) -> int:
    i, j = cell
    return j - i


def intersect_shifted(mu_diag: Diagram, lambda_diag: Diagram, k: int) -> list[Cell]:
    """The finite cell set ``Γ(μ) ∩ Γ(λ)^{(k-1)}``, sorted by row then column."""
    shifted = lambda_diag.shifted(k - 1)
    low = min(-mu_diag.n, -lambda_diag.n - k + 1)
    high = max(mu_diag.n + 1, lambda_diag.n - k + 2)
    cells: list[Cell] = []
    for i in range(low, high + 1):
        lo1, hi1 = mu_diag.row(i)
        lo2, hi2 = shifted.row(i)
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo >= hi:
            continue
        if math.isinf(lo) or math.isinf(hi):
            msg = f'Row {i} of the intersection is infinite.'
            raise InfiniteIntersection(msg, row=i)
        cells.extend((i, j) for j in range(int(lo), int(hi)))
    return cells


def drinfeld_diagram(lam: Sequence[int], mu: Sequence[int]) -> DrinfeldData:
    """``P_k(u) = prod (u + c(α) + 1/2)`` over ``Γ(μ) ∩ Γ(λ)^{(k-1)}``, ``k = 1..n-m``."""
    n, m = len(lam), len(mu)
    if m >= n:
        msg = 'The diagram rule needs m < n.'
        raise ValueError(msg)
    lam_diag, mu_diag = diagram(lam), diagram(mu)
    roots = []
    for k in range(1, n - m + 1):
        cells = intersect_shifted(mu_diag, lam_diag, k)
        roots.append([-(QQ(content(cell)) + QQ(1, 2)) for cell in cells])
        log.debug('diagram rule: P_%d from %d cells', k, len(cells))
    return DrinfeldData.from_roots(roots)
