"""Concrete operator families: evaluation modules and the maps built from their minors."""

import logging
from collections.abc import Sequence
from typing import Any

from sympy import QQ

from twyang.arith.linalg import SparseOp, gauss_inverse
from twyang.arith.ratfunc import U_FUNC, RatFunc, reciprocal
from twyang.core.scheme import IndexScheme
from twyang.enums.base import Case, ComatrixMethod, MinorMethod
from twyang.exceptions.common import PoleError
from twyang.reps.base import LieRep
from twyang.sklyanin.base import BaseFamily
from twyang.sklyanin.config import FamilyConfig
from twyang.sklyanin.operators import Point, alpha, one_like, scaled, zero_like

log = logging.getLogger(__name__)


def chain_weight(order: int, entry_weight: int) -> int:
    """Degree bound of an order-``k`` minor: ``k`` entries and ``k(k-1)/2`` ``R^t`` factors."""
    return order * entry_weight + order * (order - 1) // 2


class EvalSMatrix(BaseFamily):
    """``s_ij(u) = δ_ij + F_ij (u ± 1/2)^{-1}`` on a ``g_N``-module (upper sign orthogonal)."""

    def __init__(self, rep: LieRep, *, config: FamilyConfig | None = None) -> None:
        super().__init__(rep.scheme, rep.dim, 1, config=config)
        self.rep = rep
        self.shift = rep.scheme.evaluation_shift

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        denominator = w + self.shift
        if not denominator:
            raise PoleError(point=str(w))
        coeff = reciprocal(denominator)
        op = scaled(self.rep.gen(i, j), coeff)
        if i == j:
            op = op + self.identity(w)
        return op


class ScaledFamily(BaseFamily):
    """``factor(u) · S(u)`` for a scalar rational function ``factor``."""

    def __init__(
        self,
        base: BaseFamily,
        factor: RatFunc,
        *,
        formula_ready: bool | None = None,
        config: FamilyConfig | None = None,
    ) -> None:
        super().__init__(base.scheme, base.dim, base.weight + factor.degree_bound, config=config)
        self.base = base
        self.factor = factor
        self.formula_ready = base.formula_ready if formula_ready is None else formula_ready

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        return scaled(self.base.entry(i, j, w), self.factor.at(w))


class SubFamily(BaseFamily):
    """The submatrix ``S_BB`` on a symmetric sub-scheme, with its own ``Q`` and ``θ``."""

    def __init__(
        self,
        base: BaseFamily,
        scheme: IndexScheme,
        *,
        config: FamilyConfig | None = None,
    ) -> None:
        base.scheme.check(*scheme.indices)
        super().__init__(scheme, base.dim, base.weight, config=config)
        self.base = base
        self.formula_ready = base.formula_ready

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        return self.base.entry(i, j, w)


class SharpFamily(BaseFamily):
    """``s♯_ab(u) = s^{-m..m, a}_{-m..m, b}(u + M/2)`` for ``a, b`` outside ``{-m..m}``.

    Without the factor ``α_{-m}(u)`` this is a family of the extended algebra only.
    """

    formula_ready = False

    def __init__(self, base: BaseFamily, m: int, *, config: FamilyConfig | None = None) -> None:
        if not 0 <= m < base.scheme.n:
            msg = f'm must lie in 0..{base.scheme.n - 1}.'
            raise ValueError(msg)
        inner = base.scheme.inner(m)
        order = inner.N + 1
        super().__init__(
            base.scheme.outer(m),
            base.dim,
            chain_weight(order, base.weight),
            config=config,
        )
        self.base = base
        self.m = m
        self.inner = inner
        self.shift = QQ(inner.N, 2)

    @property
    def M(self) -> int:
        return self.inner.N

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        block = self.inner.indices
        return self.base.minor((*block, i), (*block, j), w + self.shift)


class VarpiFamily(BaseFamily):
    """``ϖ_N(S)(u) = S^{-1}(-u - N/2)``, inverting the ``N·dim`` block matrix at each point."""

    formula_ready = False

    def __init__(self, base: BaseFamily, *, config: FamilyConfig | None = None) -> None:
        size = base.scheme.N * base.dim
        super().__init__(base.scheme, base.dim, size * base.weight, config=config)
        self.base = base
        self._inverses: dict[Any, list[list[Any]]] = {}

    def _inverse(self, w: Point) -> list[list[Any]]:
        cached = self._inverses.get(w) if not isinstance(w, RatFunc) else None
        if cached is not None:
            return cached
        point = -w - QQ(self.scheme.N, 2)
        dim = self.dim
        indices = self.scheme.indices
        zero, one = zero_like(w), one_like(w)
        size = len(indices) * dim
        dense: list[list[Any]] = [[zero] * size for _ in range(size)]
        for p, i in enumerate(indices):
            for q, j in enumerate(indices):
                for r, c, value in self.base.entry(i, j, point).entries():
                    dense[p * dim + r][q * dim + c] = value
        try:
            inverse = gauss_inverse(dense, one, zero)
        except ZeroDivisionError:
            msg = f'S(u) is singular at {point}.'
            raise PoleError(msg, point=str(point)) from None
        if not isinstance(w, RatFunc):
            self._inverses[w] = inverse
        return inverse

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        inverse = self._inverse(w)
        p, q, dim = self.scheme.position(i), self.scheme.position(j), self.dim
        rows = [row[q * dim : (q + 1) * dim] for row in inverse[p * dim : (p + 1) * dim]]
        return SparseOp.from_rows(rows)


class DualSylvesterFamily(BaseFamily):
    """``s_ij ↦ α_{m-n}(u) · s^{-n..-m-1, i, m+1..n}_{-n..-m-1, j, m+1..n}(u + n - m)``.

    Indices run over ``{-m..m}``; ``alpha_factor=False`` drops the scalar factor.
    """

    def __init__(
        self,
        base: BaseFamily,
        m: int,
        *,
        alpha_factor: bool = True,
        config: FamilyConfig | None = None,
    ) -> None:
        n = base.scheme.n
        if not 0 < m < n:
            msg = f'm must lie in 1..{n - 1}.'
            raise ValueError(msg)
        outer = base.scheme.outer(m)
        order = outer.N + 1
        weight = chain_weight(order, base.weight) + int(alpha_factor)
        super().__init__(base.scheme.inner(m), base.dim, weight, config=config)
        self.base = base
        self.m = m
        self.negatives = tuple(i for i in outer.indices if i < 0)
        self.positives = tuple(i for i in outer.indices if i > 0)
        self.shift = n - m
        self.factor = alpha(m - n, base.scheme.case) if alpha_factor else RatFunc.const(1)
        self.formula_ready = alpha_factor and base.formula_ready

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        upper = (*self.negatives, i, *self.positives)
        lower = (*self.negatives, j, *self.positives)
        return scaled(self.base.minor(upper, lower, w + self.shift), self.factor.at(w))


class CoRhoFamily(BaseFamily):
    """``s_ab ↦ α_n(u) · ŝ_ab(-u + n - 1)`` for ``a, b`` outside ``{-m..m}`` (symplectic)."""

    def __init__(self, base: BaseFamily, m: int, *, config: FamilyConfig | None = None) -> None:
        if base.scheme.case is not Case.SYMPLECTIC:
            msg = 'The comatrix centralizer map is defined in the symplectic case only.'
            raise ValueError(msg)
        n = base.scheme.n
        if not 0 <= m < n:
            msg = f'm must lie in 0..{n - 1}.'
            raise ValueError(msg)
        weight = chain_weight(base.scheme.N - 1, base.weight) + 2
        super().__init__(base.scheme.outer(m), base.dim, weight, config=config)
        self.base = base
        self.m = m
        self.n = n
        self.factor = alpha(n, base.scheme.case)

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        value = self.base.comatrix_entry(i, j, -w + self.n - 1)
        return scaled(value, self.factor.at(w))


def evaluation_family(rep: LieRep, config: FamilyConfig | None = None) -> EvalSMatrix:
    return EvalSMatrix(rep, config=config)


def sylvester_sharp(
    family: BaseFamily, m: int, config: FamilyConfig | None = None
) -> ScaledFamily:
    """``α_{-m}(u) · S♯(u)``, a family of the twisted Yangian of rank ``n - m``."""
    sharp = SharpFamily(family, m, config=config)
    return ScaledFamily(sharp, alpha(-m, family.scheme.case), formula_ready=True, config=config)


def varpi_image(family: BaseFamily, config: FamilyConfig | None = None) -> VarpiFamily:
    return VarpiFamily(family, config=config)


def _point(u_shift: Any, at: Any | None) -> Point:
    shift = QQ.convert(u_shift)
    return U_FUNC + shift if at is None else QQ.convert(at) + shift


def sklyanin_minor(
    family: BaseFamily,
    upper: Sequence[int],
    lower: Sequence[int],
    u_shift: Any = 0,
    *,
    at: Any | None = None,
    method: MinorMethod | None = None,
) -> SparseOp[Any]:
    """The minor at ``u + u_shift``: symbolic in ``u`` unless a point ``at`` is given."""
    return family.minor(upper, lower, _point(u_shift, at), method=method)


def sklyanin_minor_formula(
    family: BaseFamily,
    a: Sequence[int],
    b_last: int,
    u_shift: Any = 0,
    *,
    at: Any | None = None,
) -> SparseOp[Any]:
    """``s^{-a_1..-a_M}_{a_1..a_{M-1}, b_M}`` by the explicit formula."""
    upper = [-x for x in a]
    lower = [*a[:-1], b_last]
    return family.formula_minor(upper, lower, _point(u_shift, at))


def sdet(family: BaseFamily, u_shift: Any = 0, *, at: Any | None = None) -> SparseOp[Any]:
    return family.sdet(_point(u_shift, at))


def auxiliary_minor(
    family: BaseFamily,
    upper: Sequence[int],
    lower: Sequence[int],
    c: int,
    u_shift: Any = 0,
    *,
    at: Any | None = None,
) -> SparseOp[Any]:
    return family.auxiliary_minor(upper, lower, c, _point(u_shift, at))


def comatrix_entry(
    family: BaseFamily,
    i: int,
    j: int,
    *,
    at: Any | None = None,
    method: ComatrixMethod | None = None,
) -> SparseOp[Any]:
    return family.comatrix_entry(i, j, _point(0, at), method=method)
