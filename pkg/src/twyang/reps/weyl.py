import itertools
from collections.abc import Iterator, Sequence
from functools import reduce
from operator import mul

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.core.scheme import IndexScheme
from twyang.utils.validation import as_highest_weight, check_highest_weight

type Root = tuple[int, ...]


def _unit(n: int, i: int, value: int = 1) -> list[int]:
    vec = [0] * n
    vec[i] = value
    return vec


def positive_roots(scheme: IndexScheme) -> Iterator[Root]:
    """Positive roots of type B, C or D in the ``ε`` basis."""
    n = scheme.n
    for i, j in itertools.combinations(range(n), 2):
        yield tuple(a - b for a, b in zip(_unit(n, i), _unit(n, j), strict=True))
        yield tuple(a + b for a, b in zip(_unit(n, i), _unit(n, j), strict=True))
    if scheme.is_symplectic:
        for i in range(n):
            yield tuple(_unit(n, i, 2))
    elif scheme.N % 2:
        for i in range(n):
            yield tuple(_unit(n, i))


def weyl_vector(scheme: IndexScheme) -> tuple[MPQ, ...]:
    n = scheme.n
    if scheme.is_symplectic:
        return tuple(QQ(n - i) for i in range(n))
    if scheme.N % 2:
        return tuple(QQ(2 * (n - i) - 1, 2) for i in range(n))
    return tuple(QQ(n - 1 - i) for i in range(n))


def weyl_dimension(weight: Sequence[MPQ | int], scheme: IndexScheme) -> int:
    """Dimension of ``V(λ)`` by the Weyl product formula.

    The module's highest weight is read in the dominant convention as
    ``l_i = -λ_{n+1-i}``.
    """
    lam = as_highest_weight(weight)
    check_highest_weight(lam, scheme.case, scheme.N)
    n = scheme.n
    if n == 0:
        return 1
    dominant = [-QQ.convert(lam[n - 1 - i]) for i in range(n)]
    rho = weyl_vector(scheme)
    shifted = [a + b for a, b in zip(dominant, rho, strict=True)]

    def pairing(vec: Sequence[MPQ], root: Root) -> MPQ:
        return sum((v * r for v, r in zip(vec, root, strict=True)), QQ.zero)

    roots = list(positive_roots(scheme))
    value = reduce(mul, (pairing(shifted, r) / pairing(rho, r) for r in roots), QQ.one)
    if QQ.denom(value) != 1:
        msg = f'Weyl formula gave a non-integer value {value} for {tuple(weight)}.'
        raise ArithmeticError(msg)
    return int(QQ.numer(value))
