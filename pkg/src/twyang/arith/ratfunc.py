"""Reduced rational functions in the spectral variable ``u``."""

from dataclasses import dataclass
from typing import Any

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.poly import POLY_RING, U, Poly, coefficients, degree, factor_linear
from twyang.arith.rational import format_rational
from twyang.exceptions.common import PoleError


@dataclass(frozen=True, slots=True)
class RatFunc:
    """``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic.

    The constructor trusts its arguments; use :meth:`from_parts` for anything
    that still has to be normalized.
    """

    num: Poly
    den: Poly

    @classmethod
    def from_parts(cls, num: Poly, den: Poly) -> 'RatFunc':
        if not den:
            msg = 'Rational function with zero denominator.'
            raise ZeroDivisionError(msg)
        if not num:
            return cls(POLY_RING.zero, POLY_RING.one)
        common = num.gcd(den)
        if common != POLY_RING.one:
            num, den = num.quo(common), den.quo(common)
        lead = den.LC
        if lead != QQ.one:
            num, den = num.quo_ground(lead), den.quo_ground(lead)
        return cls(num, den)

    @classmethod
    def const(cls, value: MPQ | int) -> 'RatFunc':
        return cls(POLY_RING(QQ.convert(value)), POLY_RING.one)

    @classmethod
    def variable(cls) -> 'RatFunc':
        return cls(U, POLY_RING.one)

    @classmethod
    def linear(cls, root: MPQ | int) -> 'RatFunc':
        """The polynomial ``u - root``."""
        return cls(U - QQ.convert(root), POLY_RING.one)

    @classmethod
    def coerce(cls, value: 'RatFunc | MPQ | int') -> 'RatFunc':
        if isinstance(value, RatFunc):
            return value
        return cls.const(value)

    @property
    def is_constant(self) -> bool:
        return degree(self.num) <= 0 and degree(self.den) == 0

    @property
    def degree_bound(self) -> int:
        return max(degree(self.num), degree(self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> 'RatFunc':
        return RatFunc(-self.num, self.den)

    def __add__(self, other: Any) -> 'RatFunc':
        if isinstance(other, RatFunc):
            if self.den == other.den:
                return RatFunc.from_parts(self.num + other.num, self.den)
            return RatFunc.from_parts(
                self.num * other.den + other.num * self.den,
                self.den * other.den,
            )
        if isinstance(other, int) or QQ.of_type(other):
            return RatFunc(self.num + self.den * QQ.convert(other), self.den)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'RatFunc':
        if isinstance(other, RatFunc | int) or QQ.of_type(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> 'RatFunc':
        return (-self) + other

    def __mul__(self, other: Any) -> 'RatFunc':
        if isinstance(other, RatFunc):
            return RatFunc.from_parts(self.num * other.num, self.den * other.den)
        if isinstance(other, int) or QQ.of_type(other):
            value = QQ.convert(other)
            if not value:
                return RatFunc.const(0)
            return RatFunc(self.num * value, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> 'RatFunc':
        if not self:
            msg = 'Division by the zero rational function.'
            raise ZeroDivisionError(msg)
        return RatFunc.from_parts(self.den, self.num)

    def __truediv__(self, other: Any) -> 'RatFunc':
        if isinstance(other, RatFunc):
            return self * other.inverse()
        if isinstance(other, int) or QQ.of_type(other):
            value = QQ.convert(other)
            if not value:
                msg = 'Division by zero.'
                raise ZeroDivisionError(msg)
            return RatFunc(self.num.quo_ground(value), self.den)
        return NotImplemented

    def __rtruediv__(self, other: Any) -> 'RatFunc':
        return self.inverse() * other

    def __pow__(self, exponent: int) -> 'RatFunc':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.num**exponent, self.den**exponent)

    def __call__(self, point: MPQ | int) -> MPQ:
        value = QQ.convert(point)
        den_value = self.den(value)
        if not den_value:
            raise PoleError(point=format_rational(value))
        return self.num(value) / den_value

    def shifted(self, offset: MPQ | int) -> 'RatFunc':
        """``f(u + offset)``; shifting keeps the normal form."""
        c = QQ.convert(offset)
        if not c:
            return self
        return RatFunc(self.num.shift(c), self.den.shift(c))

    def reflected(self, offset: MPQ | int = 0) -> 'RatFunc':
        """``f(-u + offset)``."""
        target = -U + QQ.convert(offset)
        return RatFunc.from_parts(self.num.compose(U, target), self.den.compose(U, target))

    def compose(self, inner: 'RatFunc') -> 'RatFunc':
        """``f(inner(u))`` by Horner evaluation of numerator and denominator."""

        def horner(p: Poly) -> RatFunc:
            result = RatFunc.const(0)
            for c in reversed(coefficients(p)):
                result = result * inner + c
            return result

        return horner(self.num) / horner(self.den)

    def at(self, point: 'RatFunc | MPQ | int') -> 'RatFunc | MPQ':
        """Evaluate at a rational point or substitute a rational function."""
        if isinstance(point, RatFunc):
            return self.compose(point)
        return self(point)

    def coefficients_at_infinity(self, order: int) -> list[MPQ]:
        """Coefficients ``c_1..c_order`` of ``u^-1..u^-order`` in the expansion at infinity."""
        _, remainder = divmod(self.num, self.den)
        rem = coefficients(remainder)
        den = coefficients(self.den)
        top = len(den) - 1
        result: list[MPQ] = []
        for k in range(1, order + 1):
            value = rem[top - k] if 0 <= top - k < len(rem) else QQ.zero
            for j in range(1, k):
                if top - j >= 0:
                    value -= den[top - j] * result[k - j - 1]
            result.append(value)
        return result

    def value_at_infinity(self) -> MPQ:
        if degree(self.num) > degree(self.den):
            raise PoleError(point='infinity')
        if degree(self.num) < degree(self.den):
            return QQ.zero
        return self.num.LC

    def numerator_roots(self) -> list[MPQ]:
        return factor_linear(self.num.monic()) if degree(self.num) > 0 else []

    def denominator_roots(self) -> list[MPQ]:
        return factor_linear(self.den) if degree(self.den) > 0 else []

    def __str__(self) -> str:
        num = self.num.as_expr()
        if self.den == POLY_RING.one:
            return str(num)
        return f'({num})/({self.den.as_expr()})'


def reciprocal(value: RatFunc | MPQ | int) -> RatFunc | MPQ:
    if isinstance(value, RatFunc):
        return value.inverse()
    return QQ.one / QQ.convert(value)


U_FUNC = RatFunc.variable()
