"""Relation checkers for operator families, evaluated exactly at rational sample points.

Two rational functions whose degree bounds sum to ``d`` agree everywhere once they agree
at ``d + 1`` points. Each one-variable check derives ``d`` from ``family.weight``; the
two-variable relations are checked at sample pairs.
"""

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from typing import Any

from sympy.external.gmpy import MPQ

from twyang.arith.linalg import SparseOp, commutator
from twyang.arith.ratfunc import RatFunc
from twyang.arith.rational import format_rational, sample_pairs, sample_points
from twyang.core.tensor import r_slots, rt_slots
from twyang.enums.base import MinorMethod
from twyang.sklyanin.base import BaseFamily
from twyang.sklyanin.families import VarpiFamily, chain_weight
from twyang.sklyanin.operators import OpTensor, alpha, scaled

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CheckOutcome:
    name: str
    anchor: str
    passed: bool
    witness: str | None = None
    samples: int = 0


def fmt(value: Any) -> str:
    if isinstance(value, int | RatFunc):
        return str(value)
    return format_rational(value)


def operator_witness(lhs: SparseOp[Any], rhs: SparseOp[Any]) -> str | None:
    """``None`` when equal, otherwise the first differing matrix entry."""
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    r, c = diff
    return f'entry ({r}, {c}): {fmt(lhs.entry(r, c))} != {fmt(rhs.entry(r, c))}'


def tensor_witness(lhs: OpTensor, rhs: OpTensor) -> str | None:
    for key in sorted(set(lhs) | set(rhs)):
        left, right = lhs.get(key, {}), rhs.get(key, {})
        for entry in sorted(set(left) | set(right)):
            a, b = left.get(entry, 0), right.get(entry, 0)
            if a != b:
                return f'component {key}, entry {entry}: {fmt(a)} != {fmt(b)}'
    return None


@dataclass(frozen=True, slots=True)
class Sampling:
    """At least ``floor`` points, starting ``start`` steps into the sample sequence."""

    floor: int = 0
    start: int = 0

    def points(self, degree: int) -> list[MPQ]:
        return sample_points(max(degree + 1, self.floor), self.start)


type Points = Sequence[MPQ] | Sampling | None


def resolve_points(points: Points, degree: int) -> list[MPQ]:
    """Explicit points as given; otherwise ``degree + 1`` points, raised to the floor."""
    if points is None:
        points = Sampling()
    if isinstance(points, Sampling):
        return points.points(degree)
    return list(points)


def sdet_degree(family: BaseFamily) -> int:
    return chain_weight(family.scheme.N, family.weight)


def comatrix_degree(family: BaseFamily) -> int:
    return chain_weight(family.scheme.N - 1, family.weight)


def outcome_of(name: str, anchor: str, witness: str | None, samples: int) -> CheckOutcome:
    log.debug('%s: %s over %d samples', name, 'pass' if witness is None else 'FAIL', samples)
    return CheckOutcome(name, anchor, witness is None, witness, samples)


def check_quaternary(
    family: BaseFamily,
    samples: Sequence[tuple[MPQ, MPQ]] | None = None,
) -> CheckOutcome:
    """``R(u-v) S_1(u) R^t(-u-v) S_2(v) = S_2(v) R^t(-u-v) S_1(u) R(u-v)``."""
    pairs = list(samples) if samples is not None else sample_pairs(3)
    scheme = family.scheme
    for u, v in pairs:
        for c, d in itertools.product(scheme.indices, repeat=2):
            lhs = family.start((c, d), u)
            lhs = family.apply_slot(lhs, 1, v)
            lhs = rt_slots(lhs, 0, 1, -u - v, scheme)
            lhs = family.apply_slot(lhs, 0, u)
            lhs = r_slots(lhs, 0, 1, u - v)
            rhs = family.start((c, d), u)
            rhs = r_slots(rhs, 0, 1, u - v)
            rhs = family.apply_slot(rhs, 0, u)
            rhs = rt_slots(rhs, 0, 1, -u - v, scheme)
            rhs = family.apply_slot(rhs, 1, v)
            witness = tensor_witness(lhs, rhs)
            if witness is not None:
                witness = f'u={fmt(u)}, v={fmt(v)}, input e_{c}⊗e_{d}: {witness}'
                return outcome_of('quaternary', 'quaternary relation', witness, len(pairs))
    return outcome_of('quaternary', 'quaternary relation', None, len(pairs))


def check_symmetry(family: BaseFamily, points: Points = None) -> CheckOutcome:
    """``θ_ij s_{-j,-i}(-u) = s_ij(u) ± (s_ij(u) - s_ij(-u)) / (2u)``, upper sign orthogonal."""
    values = resolve_points(points, 4 * family.weight + 1)
    scheme = family.scheme
    for u in values:
        for i, j in scheme.pairs():
            lhs = scaled(family.entry(-j, -i, -u), scheme.theta(i, j))
            here, there = family.entry(i, j, u), family.entry(i, j, -u)
            rhs = here + scaled(here - there, scheme.pm / (2 * u))
            witness = operator_witness(lhs, rhs)
            if witness is not None:
                witness = f'u={fmt(u)}, (i, j)=({i}, {j}): {witness}'
                return outcome_of('symmetry', 'symmetry relation', witness, len(values))
    return outcome_of('symmetry', 'symmetry relation', None, len(values))


def centrality_pairs(upper: Sequence[int], lower: Sequence[int]) -> list[tuple[int, int]]:
    """Entries ``(a_i, b_j)`` with ``a_i = -b_l`` and ``b_j = -a_m`` for some ``l, m``."""
    return sorted(
        {(a, b) for a in upper for b in lower if -a in lower and -b in upper},
    )


def check_centrality(
    family: BaseFamily,
    upper: Sequence[int],
    lower: Sequence[int],
    samples: Sequence[tuple[MPQ, MPQ]] | None = None,
) -> CheckOutcome:
    pairs = list(samples) if samples is not None else sample_pairs(3)
    entries = centrality_pairs(upper, lower)
    for u, v in pairs:
        minor = family.minor(upper, lower, v)
        for a, b in entries:
            bracket = commutator(family.entry(a, b, u), minor)
            if not bracket.is_zero():
                witness = f'u={fmt(u)}, v={fmt(v)}, [s_({a},{b}), minor] != 0'
                return outcome_of('centrality', 'commuting minors', witness, len(pairs))
    return outcome_of('centrality', 'commuting minors', None, len(pairs))


def check_sdet_central(
    family: BaseFamily,
    samples: Sequence[tuple[MPQ, MPQ]] | None = None,
) -> CheckOutcome:
    indices = family.scheme.indices
    outcome = check_centrality(family, indices, indices, samples)
    return replace(outcome, name='sdet central', anchor='central determinant')


def check_route_equivalence(
    family: BaseFamily,
    upper: Sequence[int],
    lower: Sequence[int],
    points: Points = None,
) -> CheckOutcome:
    """The explicit formula and the antisymmetrizer chain give the same minor."""
    values = resolve_points(points, 2 * chain_weight(len(upper), family.weight))
    for u in values:
        chain = family.minor(upper, lower, u, method=MinorMethod.CHAIN)
        formula = family.minor(upper, lower, u, method=MinorMethod.FORMULA)
        witness = operator_witness(formula, chain)
        if witness is not None:
            witness = f'u={fmt(u)}, minor {tuple(upper)}/{tuple(lower)}: {witness}'
            return outcome_of('minor routes', 'explicit minor formula', witness, len(values))
    return outcome_of('minor routes', 'explicit minor formula', None, len(values))


def check_auxiliary_expansion(
    family: BaseFamily,
    upper: Sequence[int],
    lower: Sequence[int],
    points: Points = None,
) -> CheckOutcome:
    """``s^a_b(u) = Σ_c ǎ^a_{b_1..b_{k-1}, c}(u) s_{c b_k}(u - k + 1)``."""
    k = len(upper)
    values = resolve_points(points, 2 * chain_weight(k, family.weight) + family.weight)
    for u in values:
        total = SparseOp.zero(family.dim)
        for c in family.scheme.indices:
            aux = family.auxiliary_minor(upper, lower[:-1], c, u)
            if not aux.is_zero():
                total = total + aux @ family.entry(c, lower[-1], u - k + 1)
        witness = operator_witness(total, family.minor(upper, lower, u, method=MinorMethod.CHAIN))
        if witness is not None:
            witness = f'u={fmt(u)}: {witness}'
            break
    else:
        witness = None
    return outcome_of('auxiliary expansion', 'auxiliary minor expansion', witness, len(values))


def check_comatrix(family: BaseFamily, points: Points = None) -> CheckOutcome:
    """``Ŝ(u) S(u - N + 1) = sdet S(u)``."""
    degree = comatrix_degree(family) + family.weight + sdet_degree(family)
    values = resolve_points(points, degree)
    scheme = family.scheme
    size = scheme.N
    for u in values:
        det = family.sdet(u)
        co = family.comatrix(u)
        for a, b in scheme.pairs():
            total = SparseOp.zero(family.dim)
            for c in scheme.indices:
                total = total + co[a, c] @ family.entry(c, b, u - size + 1)
            expected = det if a == b else SparseOp.zero(family.dim)
            witness = operator_witness(total, expected)
            if witness is not None:
                witness = f'u={fmt(u)}, (a, b)=({a}, {b}): {witness}'
                return outcome_of('comatrix', 'comatrix identity', witness, len(values))
    return outcome_of('comatrix', 'comatrix identity', None, len(values))


def check_sdet_symmetry(family: BaseFamily, points: Points = None) -> CheckOutcome:
    """``α_n(u)^{-1} sdet S(u) = α_n(-u + N - 1)^{-1} sdet S(-u + N - 1)``."""
    values = resolve_points(points, 2 * (sdet_degree(family) + 1))
    scheme = family.scheme
    factor = alpha(scheme.n, scheme.case)
    for u in values:
        mirror = -u + scheme.N - 1
        lhs = scaled(family.sdet(u), 1 / factor(u))
        rhs = scaled(family.sdet(mirror), 1 / factor(mirror))
        witness = operator_witness(lhs, rhs)
        if witness is not None:
            witness = f'u={fmt(u)}: {witness}'
            return outcome_of('sdet symmetry', 'determinant symmetry', witness, len(values))
    return outcome_of('sdet symmetry', 'determinant symmetry', None, len(values))


def check_varpi_involution(family: BaseFamily, points: Points = None) -> CheckOutcome:
    twice = VarpiFamily(VarpiFamily(family))
    values = resolve_points(points, twice.weight + family.weight)
    for u in values:
        for i, j in family.scheme.pairs():
            witness = operator_witness(twice.entry(i, j, u), family.entry(i, j, u))
            if witness is not None:
                witness = f'u={fmt(u)}, (i, j)=({i}, {j}): {witness}'
                return outcome_of('varpi involution', 'involution', witness, len(values))
    return outcome_of('varpi involution', 'involution', None, len(values))


SDETCIRC_MAX_N = 4
SDETCIRC_MAX_SIZE = 24


def check_sdetcirc(family: BaseFamily, points: Points = None) -> CheckOutcome:
    """``sdet S(u) · ϖ(sdet S(-u + N/2 - 1)) = 1``, on the chain route."""
    scheme = family.scheme
    if scheme.N > SDETCIRC_MAX_N:
        msg = f'The determinant inversion check is offered for N <= {SDETCIRC_MAX_N}.'
        raise ValueError(msg)
    varpi = VarpiFamily(family)
    values = resolve_points(points, sdet_degree(family) + sdet_degree(varpi))
    for u in values:
        det = family.sdet(u)
        inverse = varpi.sdet(-u + MPQ(scheme.N, 2) - 1)
        witness = operator_witness(det @ inverse, family.identity(u))
        if witness is not None:
            witness = f'u={fmt(u)}: {witness}'
            return outcome_of('sdetcirc', 'determinant inversion', witness, len(values))
    return outcome_of('sdetcirc', 'determinant inversion', None, len(values))


def first_failure(outcomes: Iterable[CheckOutcome]) -> CheckOutcome | None:
    return next((o for o in outcomes if not o.passed), None)
