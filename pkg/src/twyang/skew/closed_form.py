"""Closed-form highest weights and Drinfeld data of skew and evaluation modules."""

import logging
from collections.abc import Sequence

from sympy import QQ

from twyang.arith.ratfunc import RatFunc
from twyang.arith.rational import HALF
from twyang.combinatorics.diagram import DrinfeldData
from twyang.combinatorics.patterns import extended_entry
from twyang.exceptions.common import InvalidIndex
from twyang.skew.highest import YangianHW
from twyang.utils.validation import check_symplectic_weight

log = logging.getLogger(__name__)


def _ratio(num_shift: object, den_shift: object) -> RatFunc:
    """``(u + num_shift) / (u + den_shift)``."""
    return RatFunc.linear(-QQ.convert(num_shift)) / RatFunc.linear(-QQ.convert(den_shift))


def _check_pair(lam: Sequence[int], mu: Sequence[int]) -> None:
    check_symplectic_weight(lam)
    check_symplectic_weight(mu)
    if len(mu) >= len(lam):
        msg = 'Closed forms need m < n.'
        raise ValueError(msg)


def nu(mu: Sequence[int]) -> RatFunc:
    """``ν(u) = Π_{i=1}^m (u+μ_i-i+1/2)(u-μ_i+i+1/2) / ((u-i+1/2)(u+i+1/2))``."""
    result = RatFunc.const(1)
    for i, value in enumerate(mu, start=1):
        result *= _ratio(value - i + HALF, -i + HALF)
        result *= _ratio(-value + i + HALF, i + HALF)
    return result


def hw_closed_form(lam: Sequence[int], mu: Sequence[int], k: int) -> RatFunc:
    """The component ``μ_k(u)``, ``k = m+1..n``, of the highest weight of ``V(λ)^+_μ``.

    ``μ_i`` is read as ``0`` for ``i <= 0`` and ``-inf`` for ``i > m``.
    """
    _check_pair(lam, mu)
    n, m = len(lam), len(mu)
    if not m < k <= n:
        msg = f'Component index {k} is outside {m + 1}..{n}.'
        raise InvalidIndex(msg, index=k)

    result = nu(mu)
    for i in range(1, k):
        lam_i = lam[i - 1]
        lower = extended_entry(mu, i + k - m - 1)
        if lam_i < lower:
            top = max(lam_i, extended_entry(mu, i + k - m))
            result *= _ratio(-top + k - m + i - HALF, -lower + k - m + i - HALF)
        upper = extended_entry(mu, i + m - k + 1)
        if lam_i > upper:
            bottom = min(lam_i, extended_entry(mu, i + m - k))
            result *= _ratio(bottom + k - m - i - HALF, upper + k - m - i - HALF)
    last = min(lam[k - 1], extended_entry(mu, m))
    result *= _ratio(last - m - HALF, -m - HALF)
    return result


def closed_highest_weight(lam: Sequence[int], mu: Sequence[int]) -> YangianHW:
    n, m = len(lam), len(mu)
    return YangianHW(tuple(hw_closed_form(lam, mu, k) for k in range(m + 1, n + 1)))


def mbr_closed_form(lam: Sequence[int], mu: Sequence[int]) -> RatFunc:
    """The single highest weight component for ``m = n - 1``, written as two products."""
    _check_pair(lam, mu)
    n, m = len(lam), len(mu)
    if m != n - 1:
        msg = 'This closed form is stated for m = n - 1.'
        raise ValueError(msg)
    result = RatFunc.const(1)
    for i in range(2, n + 1):
        low = min(lam[i - 2], mu[i - 2])
        result *= _ratio(-low + i - HALF, i - HALF)
    for i in range(1, n + 1):
        high = max(lam[i - 1], extended_entry(mu, i))
        result *= _ratio(high - i + HALF, -i + HALF)
    return result


def evaluation_highest_weight(lam: Sequence[int]) -> YangianHW:
    """``μ_i(u) = (u + λ_i - 1/2) / (u - 1/2)`` for the evaluation module ``V(λ)``."""
    check_symplectic_weight(lam)
    return YangianHW(tuple(_ratio(value - HALF, -HALF) for value in lam))


def evaluation_drinfeld(lam: Sequence[int]) -> DrinfeldData:
    """Drinfeld polynomials of the evaluation module ``V(λ)``; empty ranges give ``1``."""
    check_symplectic_weight(lam)
    first = [HALF - t for t in range(lam[0], 0)]
    first += [-s - HALF for s in range(-lam[0])]
    roots = [first]
    for k in range(2, len(lam) + 1):
        roots.append([HALF - t for t in range(lam[k - 1], lam[k - 2])])
    log.debug('evaluation Drinfeld data for %s: degrees %s', tuple(lam), [len(r) for r in roots])
    return DrinfeldData.from_roots(roots)
