"""Checks of the quantum Sylvester theorem and of the maps built from it."""

import logging
from collections.abc import Sequence
from dataclasses import replace
from typing import Any

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.linalg import SparseOp, commutator
from twyang.core.scheme import sign
from twyang.enums.base import Case
from twyang.reps.base import LieRep
from twyang.sklyanin.base import BaseFamily
from twyang.sklyanin.families import (
    CoRhoFamily,
    DualSylvesterFamily,
    SharpFamily,
    SubFamily,
    chain_weight,
    sylvester_sharp,
)
from twyang.sklyanin.operators import alpha, scaled
from twyang.sklyanin.relations import (
    CheckOutcome,
    Points,
    check_quaternary,
    check_symmetry,
    comatrix_degree,
    fmt,
    operator_witness,
    outcome_of,
    resolve_points,
    sdet_degree,
)

log = logging.getLogger(__name__)


def _block_sdets(family: BaseFamily, m: int, w: Any, count: int) -> SparseOp[Any]:
    """``sdet S_BB(w - 1) ⋯ sdet S_BB(w - count)``; the empty block contributes ``1``."""
    inner = family.scheme.inner(m)
    result = family.identity(w)
    if not inner.N:
        return result
    block = SubFamily(family, inner)
    for j in range(1, count + 1):
        result = result @ block.sdet(w - j)
    return result


def _block_degree(family: BaseFamily, m: int) -> int:
    return chain_weight(family.scheme.inner(m).N, family.weight)


def check_sylvester_x(
    family: BaseFamily,
    m: int,
    points: Points = None,
) -> CheckOutcome:
    """``sdet S♯(u) = sdet S(u + M/2) · Π_{j=1}^{N-M-1} sdet S_BB(u + M/2 - j)``."""
    sharp = SharpFamily(family, m)
    half = QQ(sharp.M, 2)
    count = family.scheme.N - sharp.M - 1
    degree = sdet_degree(sharp) + sdet_degree(family) + count * _block_degree(family, m)
    values = resolve_points(points, degree)
    for u in values:
        lhs = sharp.sdet(u)
        rhs = family.sdet(u + half) @ _block_sdets(family, m, u + half, count)
        witness = operator_witness(lhs, rhs)
        if witness is not None:
            witness = f'm={m}, u={fmt(u)}: {witness}'
            return outcome_of('sylvester X', 'Sylvester theorem, extended', witness, len(values))
    return outcome_of('sylvester X', 'Sylvester theorem, extended', None, len(values))


def sylvester_alpha(m: int, size: int, case: Case, u: MPQ) -> MPQ:
    """``α(u) = α_{-m}(u) α_{-m}(u - 1) ⋯ α_{-m}(u - size + 1)``."""
    factor = alpha(-m, case)
    result = QQ.one
    for j in range(size):
        result *= factor(u - j)
    return result


def check_sylvester_twisted(
    family: BaseFamily,
    m: int,
    points: Points = None,
) -> CheckOutcome:
    """``sdet[α_{-m}(u) S♯(u)] = α(u) sdet S(u + M/2) · Π sdet S_BB(u + M/2 - j)``."""
    image = sylvester_sharp(family, m)
    inner = family.scheme.inner(m)
    half = QQ(inner.N, 2)
    size = family.scheme.N - inner.N
    block = (size - 1) * _block_degree(family, m) + size
    values = resolve_points(points, sdet_degree(image) + sdet_degree(family) + block)
    for u in values:
        lhs = image.sdet(u)
        rhs = family.sdet(u + half) @ _block_sdets(family, m, u + half, size - 1)
        rhs = scaled(rhs, sylvester_alpha(m, size, family.scheme.case, u))
        witness = operator_witness(lhs, rhs)
        if witness is not None:
            witness = f'm={m}, u={fmt(u)}: {witness}'
            return outcome_of('sylvester', 'Sylvester theorem', witness, len(values))
    return outcome_of('sylvester', 'Sylvester theorem', None, len(values))


def check_nnentry(
    family: BaseFamily,
    m: int,
    points: Points = None,
) -> CheckOutcome:
    """``σ̂_ab(u) = ŝ_ab(u + M/2) · Π_{j=1}^{N-M-2} sdet S_BB(u + M/2 - j)``.

    ``σ̂`` is the comatrix of the un-scaled ``S♯``, taken through auxiliary minors.
    """
    sharp = SharpFamily(family, m)
    half = QQ(sharp.M, 2)
    count = family.scheme.N - sharp.M - 2
    degree = comatrix_degree(sharp) + comatrix_degree(family)
    values = resolve_points(points, degree + max(count, 0) * _block_degree(family, m))
    for u in values:
        blocks = _block_sdets(family, m, u + half, count)
        for a, b in sharp.scheme.pairs():
            lhs = sharp.comatrix_entry(a, b, u)
            rhs = family.comatrix_entry(a, b, u + half) @ blocks
            witness = operator_witness(lhs, rhs)
            if witness is not None:
                witness = f'm={m}, u={fmt(u)}, (a, b)=({a}, {b}): {witness}'
                return outcome_of('nnentry', 'Sylvester comatrix', witness, len(values))
    return outcome_of('nnentry', 'Sylvester comatrix', None, len(values))


def check_homcoin(family: BaseFamily, points: Points = None) -> CheckOutcome:
    """For ``m = n - 1``: ``α_{-m}(u) s♯_ab(u) = ε_ab α_n(u) ŝ_ab(-u + N/2 - 1)``.

    ``ε_ab = 1`` in the symplectic case and ``sgn a · sgn b`` in the orthogonal case.
    """
    scheme = family.scheme
    image = sylvester_sharp(family, scheme.n - 1)
    values = resolve_points(points, image.weight + comatrix_degree(family) + 1)
    factor = alpha(scheme.n, scheme.case)
    for u in values:
        for a, b in image.scheme.pairs():
            eps = 1 if scheme.is_symplectic else sign(a) * sign(b)
            point = -u + QQ(scheme.N, 2) - 1
            rhs = scaled(family.comatrix_entry(a, b, point), factor(u) * eps)
            witness = operator_witness(image.entry(a, b, u), rhs)
            if witness is not None:
                witness = f'u={fmt(u)}, (a, b)=({a}, {b}): {witness}'
                return outcome_of('homcoin', 'rank-two coincidence', witness, len(values))
    return outcome_of('homcoin', 'rank-two coincidence', None, len(values))


def check_commutes_with(
    family: BaseFamily,
    rep: LieRep,
    indices: Sequence[int],
    points: Points = None,
) -> CheckOutcome:
    """Every entry of ``family`` commutes with ``F_ij`` for ``i, j`` in ``indices``."""
    values = resolve_points(points, family.weight)
    gens = [(i, j, rep.gen(i, j)) for i in indices for j in indices if i + j <= 0]
    for u in values:
        for a, b in family.scheme.pairs():
            value = family.entry(a, b, u)
            for i, j, gen in gens:
                if not commutator(gen, value).is_zero():
                    witness = f'u={fmt(u)}, [F_({i},{j}), s_({a},{b})] != 0'
                    return outcome_of('centralizer', 'commutes with g_M', witness, len(values))
    return outcome_of('centralizer', 'commutes with g_M', None, len(values))


def check_dual_sylvester(
    family: BaseFamily,
    m: int,
    *,
    alpha_factor: bool = True,
) -> list[CheckOutcome]:
    """The dual image satisfies the quaternary relation, and the symmetry relation with ``α``."""
    image = DualSylvesterFamily(family, m, alpha_factor=alpha_factor)
    outcomes = [_renamed(check_quaternary(image), f'dual m={m} quaternary')]
    if alpha_factor:
        outcomes.append(_renamed(check_symmetry(image), f'dual m={m} symmetry'))
    return outcomes


def check_corho(family: BaseFamily, rep: LieRep, m: int) -> list[CheckOutcome]:
    """``s_ab ↦ α_n(u) ŝ_ab(-u + n - 1)`` is symmetric and centralizes ``g_M``."""
    image = CoRhoFamily(family, m)
    return [
        _renamed(check_symmetry(image), f'corho m={m} symmetry'),
        _renamed(
            check_commutes_with(image, rep, family.scheme.inner(m).indices),
            f'corho m={m} centralizer',
        ),
    ]


def check_sharp_image(family: BaseFamily, rep: LieRep, m: int) -> list[CheckOutcome]:
    """``α_{-m} S♯`` satisfies the relations of rank ``n - m`` and commutes with ``g_M``."""
    image = sylvester_sharp(family, m)
    return [
        _renamed(check_symmetry(image), f'sharp m={m} symmetry'),
        _renamed(check_quaternary(image), f'sharp m={m} quaternary'),
        _renamed(
            check_commutes_with(image, rep, family.scheme.inner(m).indices),
            f'sharp m={m} centralizer',
        ),
    ]


def _renamed(outcome: CheckOutcome, name: str) -> CheckOutcome:
    log.info('%s: %s', name, 'pass' if outcome.passed else 'FAIL')
    return replace(outcome, name=name)
