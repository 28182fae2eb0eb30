from fractions import Fraction

from sympy import QQ
from sympy.external.gmpy import MPQ

type Rational = MPQ

ZERO: MPQ = QQ.zero
ONE: MPQ = QQ.one
HALF: MPQ = QQ(1, 2)
SAMPLE_BASE: MPQ = QQ(17, 3)


def rational(value: int | str | MPQ | Fraction, denominator: int = 1) -> MPQ:
    """Convert ``value`` (optionally over ``denominator``) into a ``QQ`` element.

    Strings use the ``"p/q"`` or ``"p"`` notation of the reports.
    """
    if isinstance(value, str):
        parsed = Fraction(value.strip())
        return QQ(parsed.numerator, parsed.denominator * denominator)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator * denominator)
    if isinstance(value, int):
        return QQ(value, denominator)
    return QQ.convert(value) / denominator


def format_rational(value: MPQ) -> str:
    numerator, denominator = QQ.numer(value), QQ.denom(value)
    if denominator == 1:
        return str(numerator)
    return f'{numerator}/{denominator}'


def is_integer(value: MPQ) -> bool:
    return QQ.denom(value) == 1


def is_half_integer(value: MPQ) -> bool:
    return QQ.denom(value) == 2  # noqa: PLR2004


def floor(value: MPQ) -> int:
    return int(QQ.numer(value)) // int(QQ.denom(value))


def sample_points(count: int, start: int = 0) -> list[MPQ]:
    """Deterministic points ``17/3 + t`` used for identity checks.

    They stay off the half-integer pole lattice and remain off it after the
    integer and half-integer shifts and reflections the algebra applies.
    """
    return [SAMPLE_BASE + t for t in range(start, start + count)]


def sample_pairs(count: int, start: int = 0) -> list[tuple[MPQ, MPQ]]:
    points = sample_points(2 * count, start)
    return [(points[2 * t], points[2 * t + 1] + QQ(1, 7)) for t in range(count)]
