import logging
from collections.abc import Sequence

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.linalg import nullspace
from twyang.arith.poly import poly
from twyang.arith.ratfunc import RatFunc
from twyang.arith.rational import format_rational
from twyang.exceptions.common import InconsistentSamples, PoleError

log = logging.getLogger(__name__)


def interpolate(
    points: Sequence[tuple[MPQ, MPQ]],
    deg_num: int,
    deg_den: int,
) -> RatFunc:
    """Rational function with ``deg num <= deg_num``, ``deg den <= deg_den`` through ``points``.

    Solves the linearized system ``num(x) - y * den(x) = 0`` exactly, reduces the
    first kernel vector and re-checks every point against the reduced function.
    """
    xs = [QQ.convert(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        msg = 'Interpolation abscissae must be distinct.'
        raise ValueError(msg)
    if len(points) < deg_num + deg_den + 1:
        msg = 'Not enough points for the requested degrees.'
        raise ValueError(msg)

    width = deg_num + deg_den + 2
    rows = []
    for x, y in points:
        row = {i: QQ.convert(x) ** i for i in range(deg_num + 1)}
        for j in range(deg_den + 1):
            row[deg_num + 1 + j] = -QQ.convert(y) * QQ.convert(x) ** j
        rows.append(row)
    kernel = nullspace(rows, width)
    if not kernel:
        msg = 'No rational function of the given degrees fits.'
        raise InconsistentSamples(msg, points)

    vec = kernel[0]
    den = poly(vec[deg_num + 1 :])
    if not den:
        msg = 'Samples force a zero denominator.'
        raise InconsistentSamples(msg, points)
    result = RatFunc.from_parts(poly(vec[: deg_num + 1]), den)
    for x, y in points:
        try:
            value = result(x)
        except PoleError:
            value = None
        if value != y:
            msg = f'Reduced interpolant misses the sample at {format_rational(QQ.convert(x))}.'
            raise InconsistentSamples(msg, points)
    log.debug('interpolate: %d points, degrees (%d, %d)', len(points), deg_num, deg_den)
    return result
