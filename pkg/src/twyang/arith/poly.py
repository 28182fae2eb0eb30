"""Univariate polynomials over ``QQ`` in the spectral variable ``u``."""

import logging
from collections.abc import Iterable, Sequence
from typing import Any

from sympy import QQ, integer_nthroot
from sympy.external.gmpy import MPQ
from sympy.polys.rings import PolyElement, ring

from twyang.arith.rational import floor, format_rational
from twyang.exceptions.common import NonLinearFactor

log = logging.getLogger(__name__)

POLY_RING, U = ring('u', QQ)

type Poly = PolyElement


def poly(coefficients: Sequence[MPQ | int]) -> Poly:
    """Build a polynomial from coefficients listed lowest degree first."""
    result = POLY_RING.zero
    for power, coefficient in enumerate(coefficients):
        if coefficient:
            result += POLY_RING(QQ.convert(coefficient)) * U**power
    return result


def coefficients(p: Poly) -> list[MPQ]:
    """Coefficients lowest degree first; the zero polynomial gives ``[]``."""
    if not p:
        return []
    return [QQ.convert(c) for c in reversed(p.to_dense())]


def degree(p: Poly) -> int:
    return -1 if not p else int(p.degree())


def poly_from_roots(roots: Iterable[MPQ]) -> Poly:
    result = POLY_RING.one
    for root in roots:
        result *= U - root
    return result


def _root_bound(p: Poly) -> int:
    """An integer ``B`` with ``|r| <= B`` for every root ``r`` of the monic ``p``.

    Fujiwara's bound ``2 max_i |a_{d-i}|^(1/i)``, rounded up through exact integer roots.
    """
    coeffs = coefficients(p)
    d = len(coeffs) - 1
    bound = 0
    for i in range(1, d + 1):
        c = abs(coeffs[d - i])
        if c:
            root, exact = integer_nthroot(-floor(-c), i)
            bound = max(bound, root if exact else root + 1)
    return 2 * bound + 1


def _strip_half_integer_roots(p: Poly) -> tuple[list[MPQ], Poly]:
    roots: list[MPQ] = []
    bound = _root_bound(p)
    for twice in range(-2 * bound, 2 * bound + 1):
        if degree(p) <= 0:
            break
        candidate = QQ(twice, 2)
        while degree(p) > 0 and not p(candidate):
            roots.append(candidate)
            p = p.quo(U - candidate)
    return roots, p


def factor_linear(p: Poly) -> list[MPQ]:
    """Rational roots of a monic polynomial with multiplicity, sorted ascending.

    Half-integer candidates inside the root bound are tried first, the remaining
    cofactor goes through sympy's factorization over ``QQ``.
    """
    if not p or p.LC != QQ.one:
        msg = 'factor_linear expects a monic polynomial.'
        raise ValueError(msg)
    roots, rest = _strip_half_integer_roots(p)
    if degree(rest) > 0:
        _, factors = rest.factor_list()
        for factor, multiplicity in factors:
            if degree(factor) != 1:
                msg = f'Polynomial has the non-linear factor {factor.as_expr()}.'
                raise NonLinearFactor(msg, factor=factor)
            roots.extend([-factor.coeff(1) / factor.LC] * multiplicity)
    roots.sort()
    if poly_from_roots(roots) != p:
        msg = 'Root reconstruction does not reproduce the polynomial.'
        raise NonLinearFactor(msg, factor=p)
    log.debug('factor_linear: degree %d split into %d roots', degree(p), len(roots))
    return roots


def splits(p: Poly) -> bool:
    try:
        factor_linear(p)
    except (NonLinearFactor, ValueError):
        return False
    return True


def poly_to_json(p: Poly) -> dict[str, Any]:
    is_monic = bool(p) and p.LC == QQ.one
    if is_monic:
        try:
            roots = factor_linear(p)
        except NonLinearFactor:
            pass
        else:
            return {'monic': True, 'roots': [format_rational(r) for r in roots]}
    return {'monic': is_monic, 'coefficients': [format_rational(c) for c in coefficients(p)]}


def format_factored(roots: Sequence[MPQ]) -> str:
    if not roots:
        return '1'
    parts = []
    for root in roots:
        sign = '-' if root > 0 else '+'
        parts.append(f'(u{sign}{format_rational(abs(root))})' if root else 'u')
    return ''.join(parts)
