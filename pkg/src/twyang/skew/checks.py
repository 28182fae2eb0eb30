"""Exact checks on skew modules: highest weight identities, irreducibility, restriction."""

import logging
from collections.abc import Mapping, Sequence
from typing import Any

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.interpolate import interpolate
from twyang.arith.linalg import EchelonBasis, SparseOp, add_scaled, rank, scale_vector
from twyang.arith.ratfunc import U_FUNC, RatFunc
from twyang.arith.rational import sample_points
from twyang.combinatorics.diagram import DrinfeldData
from twyang.enums.base import DrinfeldMethod, HwMethod
from twyang.skew.closed_form import closed_highest_weight, hw_closed_form, mbr_closed_form
from twyang.skew.drinfeld import drinfeld_routes
from twyang.skew.highest import YangianHW, extract_hw, find_highest_vector, require_symplectic
from twyang.skew.module import SkewModule
from twyang.sklyanin.families import chain_weight
from twyang.sklyanin.operators import alpha
from twyang.sklyanin.relations import (
    CheckOutcome,
    Points,
    fmt,
    operator_witness,
    outcome_of,
    resolve_points,
    sdet_degree,
)

log = logging.getLogger(__name__)

type FlatOp = dict[tuple[int, int], MPQ]


def _vector_witness(lhs: Mapping[int, Any], rhs: Mapping[int, Any]) -> str | None:
    diff = dict(lhs)
    add_scaled(diff, rhs, -1)
    for k in sorted(diff):
        return f'coordinate {k}: {fmt(lhs.get(k, 0))} != {fmt(rhs.get(k, 0))}'
    return None


def _points(sm: SkewModule, points: Points, degree: int) -> list[MPQ]:
    return resolve_points(sm.sampling if points is None else points, degree)


def check_sdet_eigen(
    sm: SkewModule,
    hw: YangianHW | None = None,
    points: Points = None,
) -> CheckOutcome:
    """``sdet S(u)`` acts as ``α_n(u) Π_i μ_i(-u + n - i) μ_i(u - n - i + 1)``.

    ``μ_k`` is the weight read off the nested minor on ``-k+1..k`` as in :func:`check_sklmu`.
    """
    hw = hw if hw is not None else extract_hw(sm)
    size = len(hw)
    degree = sdet_degree(sm.family) + 1 + 2 * sum(mu.degree_bound for mu in hw)
    values = _points(sm, points, degree)
    factor = alpha(size, sm.scheme.case)
    for u in values:
        expected = factor(u)
        for i in range(1, size + 1):
            expected *= hw[i](-u + size - i) * hw[i](u - size - i + 1)
        actual = sm.family.sdet(u).scalar_value()
        if actual != expected:
            shown = 'not scalar' if actual is None else fmt(actual)
            witness = f'u={fmt(u)}: {shown} != {fmt(expected)}'
            return outcome_of('sdetav', 'Sklyanin determinant eigenvalue', witness, len(values))
    return outcome_of('sdetav', 'Sklyanin determinant eigenvalue', None, len(values))


def _labels(sm: SkewModule, low: int, high: int) -> list[int]:
    return [sm.outer.label(r) for r in range(low, high + 1) if r or not sm.is_symplectic]


def check_sklmu(
    sm: SkewModule,
    hw: YangianHW | None = None,
    points: Points = None,
) -> CheckOutcome:
    """``s^{-k+1..k}(u) ξ = μ_k(u - 2k + 2) · s^{-k+1..k-1}(u) ξ`` on the highest vector."""
    require_symplectic(sm)
    hw = hw if hw is not None else extract_hw(sm)
    xi = find_highest_vector(sm)
    weight = sm.family.weight
    degree = max(
        chain_weight(len(_labels(sm, -k + 1, k)), weight)
        + chain_weight(len(_labels(sm, -k + 1, k - 1)), weight)
        + hw[k].degree_bound
        for k in range(1, len(hw) + 1)
    )
    values = _points(sm, points, degree)
    for u in values:
        for k in range(1, len(hw) + 1):
            big = _labels(sm, -k + 1, k)
            lhs = sm.family.minor(big, big, u).apply(xi)
            small = _labels(sm, -k + 1, k - 1)
            rhs = sm.family.minor(small, small, u).apply(xi) if small else dict(xi)
            coeff = hw[k](u - 2 * k + 2)
            witness = _vector_witness(lhs, scale_vector(rhs, coeff))
            if witness is not None:
                witness = f'k={k}, u={fmt(u)}: {witness}'
                return outcome_of('sklmu', 'minors on the highest vector', witness, len(values))
    return outcome_of('sklmu', 'minors on the highest vector', None, len(values))


def _flatten(op: SparseOp[MPQ]) -> FlatOp:
    return {(i, j): value for i, j, value in op.entries()}


def _commutant_rows(ops: Sequence[FlatOp], dim: int) -> list[dict[int, MPQ]]:
    """Linear equations in ``X`` (unknown ``X_pq`` at ``p * dim + q``) for ``XA = AX``."""
    rows: dict[tuple[int, int, int], dict[int, MPQ]] = {}
    for t, op in enumerate(ops):
        for (k, j), value in op.items():
            for i in range(dim):
                row = rows.setdefault((t, i, j), {})
                row[i * dim + k] = row.get(i * dim + k, QQ.zero) + value
        for (i, k), value in op.items():
            for j in range(dim):
                row = rows.setdefault((t, i, j), {})
                row[k * dim + j] = row.get(k * dim + j, QQ.zero) - value
    return [row for row in rows.values() if any(row.values())]


def spanned_operators(sm: SkewModule) -> list[FlatOp]:
    """A basis of the span of every ``ρ(s_ab(u))``, sampled in doubling batches.

    Sampling stops once two consecutive batches leave the span unchanged.
    """
    span: EchelonBasis[tuple[int, int]] = EchelonBasis()
    batch, start, previous, stable = sm.irreducibility_batch, 0, -1, 0
    while stable < 2:  # noqa: PLR2004
        for u in sample_points(batch, start):
            for a, b in sm.outer.pairs():
                span.add(_flatten(sm.action(a, b, u)))
        start += batch
        batch *= 2
        stable = stable + 1 if len(span) == previous else 0
        previous = len(span)
    log.debug('%r: action spans %d operators after %d samples', sm, len(span), start)
    return span.vectors


def commutant_dimension(sm: SkewModule) -> int:
    """Dimension of the space of operators commuting with the whole action."""
    dim = sm.dim
    if dim == 1:
        return 1
    rows = _commutant_rows(spanned_operators(sm), dim)
    result = dim * dim - rank(rows, dim * dim)
    log.info('%r: commutant dimension %d', sm, result)
    return result


def check_irreducible(sm: SkewModule) -> bool:
    require_symplectic(sm)
    return commutant_dimension(sm) == 1


def _first_coefficient(value: Any) -> MPQ:
    return RatFunc.coerce(value).coefficients_at_infinity(1)[0]


def degree_one_part(
    sm: SkewModule,
    a: int,
    b: int,
    method: HwMethod | None = None,
) -> SparseOp[MPQ]:
    """The ``u^{-1}`` coefficient of ``ρ(s_ab(u))`` as an operator on the subspace."""
    method = method or sm.hw_method
    if method is HwMethod.SYMBOLIC:
        return sm.action(a, b, U_FUNC).map(_first_coefficient)
    degree = sm.family.weight
    points = sample_points(2 * degree + 1 + sm.verify_samples)
    ops = [sm.action(a, b, u) for u in points]
    keys = sorted({(i, j) for op in ops for i, j, _ in op.entries()})
    cols: dict[int, dict[int, MPQ]] = {}
    for i, j in keys:
        samples = [(u, op.entry(i, j, QQ.zero)) for u, op in zip(points, ops, strict=True)]
        value = interpolate(samples, degree, degree)
        cols.setdefault(j, {})[i] = _first_coefficient(value)
    return SparseOp.from_columns(sm.dim, cols)


def check_restriction(sm: SkewModule, method: HwMethod | None = None) -> CheckOutcome:
    """The ``u^{-1}`` coefficient of ``ρ(s_ab(u))`` acts as ``F_ab`` on ``V(λ)^+_μ``."""
    for a, b in sm.outer.pairs():
        expected = sm.space.restrict(sm.rep.gen(a, b))
        witness = operator_witness(degree_one_part(sm, a, b, method), expected)
        if witness is not None:
            witness = f'(a, b)=({a}, {b}): {witness}'
            return outcome_of('restriction', 'degree one coefficients', witness, 0)
    return outcome_of('restriction', 'degree one coefficients', None, 0)


def check_closed_form(sm: SkewModule, hw: YangianHW | None = None) -> CheckOutcome:
    """The extracted highest weight agrees with the closed form, component by component."""
    hw = hw if hw is not None else extract_hw(sm)
    closed = closed_highest_weight(sm.lam, sm.mu)
    for k, (found, expected) in enumerate(zip(hw, closed, strict=True), start=1):
        if found != expected:
            witness = f'mu_{k}: {found} != {expected}'
            return outcome_of('closed form', 'highest weight formula', witness, 0)
    return outcome_of('closed form', 'highest weight formula', None, 0)


def check_mbr(sm: SkewModule, hw: YangianHW | None = None) -> CheckOutcome:
    """For ``m = n - 1`` the two-product formula, the general formula and extraction agree."""
    hw = hw if hw is not None else extract_hw(sm)
    product = mbr_closed_form(sm.lam, sm.mu)
    general = hw_closed_form(sm.lam, sm.mu, sm.n)
    witness = None
    if product != general:
        witness = f'two-product {product} != general {general}'
    elif hw[1] != product:
        witness = f'extracted {hw[1]} != {product}'
    return outcome_of('mbr', 'rank-two highest weight', witness, 0)


def route_outcomes(routes: Mapping[DrinfeldMethod, DrinfeldData]) -> list[CheckOutcome]:
    """Cross-route equality (when more than one route ran) and palindromy of ``P_1``."""
    items = list(routes.items())
    first_method, first = items[0]
    witness = None
    for method, data in items[1:]:
        if data != first:
            witness = f'{method}: {data.to_text()} != {first_method}: {first.to_text()}'
            break
    outcomes = []
    if len(items) > 1:
        equal = outcome_of('drinfeld routes', 'three-route Drinfeld equality', witness, 0)
        outcomes.append(equal)
    palindrome = next(
        (f'{m}: {d.to_text()[0]}' for m, d in items if not d.first_is_palindromic()), None
    )
    outcomes.append(outcome_of('palindromy', 'P_1(u) = P_1(-u + 1)', palindrome, 0))
    return outcomes


def check_drinfeld_routes(sm: SkewModule) -> list[CheckOutcome]:
    """Diagram rule, closed form and extraction agree, and ``P_1`` is palindromic."""
    return route_outcomes(drinfeld_routes(sm.lam, sm.mu, module=sm))
