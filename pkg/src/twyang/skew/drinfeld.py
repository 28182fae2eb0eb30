"""Drinfeld polynomials from a highest weight ``(μ_1(u), ..., μ_r(u))``."""

import logging
from collections import defaultdict
from collections.abc import Sequence

from sympy.external.gmpy import MPQ

from twyang.arith.ratfunc import RatFunc
from twyang.arith.rational import floor, format_rational, is_integer
from twyang.combinatorics.diagram import DrinfeldData, drinfeld_diagram
from twyang.enums.base import DrinfeldMethod
from twyang.exceptions.common import NonLinearFactor, UnpairableRoots
from twyang.skew.closed_form import closed_highest_weight
from twyang.skew.config import SkewConfig
from twyang.skew.highest import YangianHW, extract_hw
from twyang.skew.module import SkewModule, build_skew

log = logging.getLogger(__name__)


def _residue(value: MPQ) -> MPQ:
    return value - floor(value)


def _unpairable(message: str, num: Sequence[MPQ], den: Sequence[MPQ]) -> UnpairableRoots:
    return UnpairableRoots(
        message,
        numerator_roots=[format_rational(r) for r in num],
        denominator_roots=[format_rational(r) for r in den],
    )


def solve_ratio(ratio: RatFunc) -> list[MPQ]:  # noqa: C901
    """Roots of the monic ``P`` with ``P(u + 1) / P(u) = ratio``.

    Writing the numerator roots as ``-α_j`` and the denominator roots as ``-β_j``, the
    roots are paired in sorted order inside each class modulo ``1``; every pair must
    have ``α_j - β_j`` a positive integer and contributes ``u + β_j, ..., u + α_j - 1``.
    """
    try:
        num, den = ratio.numerator_roots(), ratio.denominator_roots()
    except NonLinearFactor as exc:
        msg = f'The ratio {ratio} does not split into linear factors.'
        raise UnpairableRoots(msg) from exc
    if ratio.value_at_infinity() != 1:
        msg = f'The ratio {ratio} does not tend to 1 at infinity.'
        raise _unpairable(msg, num, den)
    alphas: defaultdict[MPQ, list[MPQ]] = defaultdict(list)
    betas: defaultdict[MPQ, list[MPQ]] = defaultdict(list)
    for root in num:
        alphas[_residue(-root)].append(-root)
    for root in den:
        betas[_residue(-root)].append(-root)
    if set(alphas) != set(betas) or any(len(alphas[c]) != len(betas[c]) for c in alphas):
        msg = f'The roots of {ratio} do not pair up modulo 1.'
        raise _unpairable(msg, num, den)
    roots: list[MPQ] = []
    for residue in sorted(alphas):
        for a, b in zip(sorted(alphas[residue]), sorted(betas[residue]), strict=True):
            gap = a - b
            if gap <= 0 or not is_integer(gap):
                msg = f'Roots α={format_rational(a)}, β={format_rational(b)} differ by {gap}.'
                raise _unpairable(msg, num, den)
            roots.extend(-b - t for t in range(floor(gap)))
    return roots


def drinfeld_from_hw(hw: YangianHW) -> DrinfeldData:
    """``P_1`` from ``μ_1(-u) / μ_1(u)`` and ``P_i`` from ``μ_{i-1}(u) / μ_i(u)``.

    Components are numbered as for the smaller twisted Yangian: ``hw[1]`` is the first.
    """
    if not len(hw):
        return DrinfeldData.from_roots([])
    ratios = [hw[1].reflected(0) / hw[1]]
    ratios += [hw[i - 1] / hw[i] for i in range(2, len(hw) + 1)]
    roots = [solve_ratio(ratio) for ratio in ratios]
    log.debug('Drinfeld data from the highest weight: degrees %s', [len(r) for r in roots])
    return DrinfeldData.from_roots(roots)


ROUTES = (DrinfeldMethod.DIAGRAM, DrinfeldMethod.CLOSED_FORM, DrinfeldMethod.ORACLE)


def drinfeld_by(
    lam: Sequence[int],
    mu: Sequence[int],
    method: DrinfeldMethod,
    *,
    module: SkewModule | None = None,
    config: SkewConfig | None = None,
) -> DrinfeldData:
    """Drinfeld data of ``V(λ)^+_μ`` along one route.

    The oracle route builds the module (or reuses ``module``) and extracts its highest
    weight; the other two routes are purely combinatorial.
    """
    if method is DrinfeldMethod.DIAGRAM:
        return drinfeld_diagram(lam, mu)
    if method is DrinfeldMethod.CLOSED_FORM:
        return drinfeld_from_hw(closed_highest_weight(lam, mu))
    if method is DrinfeldMethod.ORACLE:
        sm = module if module is not None else build_skew(lam, mu, config=config)
        return drinfeld_from_hw(extract_hw(sm))
    msg = f'{method} is not a single Drinfeld route.'
    raise ValueError(msg)


def drinfeld_routes(
    lam: Sequence[int],
    mu: Sequence[int],
    *,
    methods: Sequence[DrinfeldMethod] = ROUTES,
    module: SkewModule | None = None,
    config: SkewConfig | None = None,
) -> dict[DrinfeldMethod, DrinfeldData]:
    routes = {}
    for method in methods:
        routes[method] = drinfeld_by(lam, mu, method, module=module, config=config)
    return routes
