from collections.abc import Sequence

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.rational import is_integer, rational
from twyang.enums.base import Case


def parse_weight(text: str) -> tuple[int, ...]:
    """Parses a comma-separated list of integers; the empty string is the empty weight.

    Args:
        text: The raw command-line value, e.g. ``"-2,-8,-10"``.

    Returns:
        The parsed entries in the order given.

    """
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        return tuple(int(part) for part in stripped.split(','))
    except ValueError:
        msg = f'Weight must be a comma-separated list of integers, got {text!r}.'
        raise ValueError(msg) from None


def from_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Converts a partition ``p_1 >= ... >= p_n >= 0`` into the weight ``(-p_n, ..., -p_1)``."""
    if any(p < 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        msg = 'A partition must be a weakly decreasing sequence of non-negative integers.'
        raise ValueError(msg)
    return tuple(-p for p in reversed(parts))


def check_symplectic_weight(weight: Sequence[int]) -> None:
    """Validates a weight in the non-positive convention: ``0 >= λ_1 >= ... >= λ_n``.

    Raises a ValueError otherwise.
    """
    if any(not isinstance(x, int) for x in weight):
        msg = 'Weight entries must be integers.'
        raise ValueError(msg)
    if any(x > 0 for x in weight):
        msg = f'Weight entries must be non-positive, got {tuple(weight)}.'
        raise ValueError(msg)
    if any(a < b for a, b in zip(weight, weight[1:], strict=False)):
        msg = f'Weight entries must be weakly decreasing, got {tuple(weight)}.'
        raise ValueError(msg)


def as_highest_weight(weight: Sequence[int | MPQ | str]) -> tuple[MPQ, ...]:
    return tuple(rational(x) if not QQ.of_type(x) else x for x in weight)


def check_highest_weight(weight: Sequence[MPQ], case: Case, size: int) -> None:
    """Validates a dominance condition for ``g_N`` with ``N = size``.

    Entries must satisfy ``λ_i - λ_{i+1} ∈ Z_+`` together with the case condition
    ``-λ_1 ∈ Z_+`` (symplectic), ``-2λ_1 ∈ Z_+`` (odd orthogonal) or
    ``-λ_1 - λ_2 ∈ Z_+`` (even orthogonal).

    Raises a ValueError otherwise.
    """
    n = size // 2
    if len(weight) != n:
        msg = f'A highest weight for N={size} has {n} entries, got {len(weight)}.'
        raise ValueError(msg)
    for a, b in zip(weight, weight[1:], strict=False):
        if not is_integer(a - b) or a < b:
            msg = f'Consecutive differences must be non-negative integers, got {a} and {b}.'
            raise ValueError(msg)
    if not weight:
        return
    first = weight[0]
    if case is Case.SYMPLECTIC:
        bad = not is_integer(first) or first > 0
    elif size % 2:
        bad = not is_integer(2 * first) or first > 0
    elif n == 1:
        bad = not is_integer(first)
    else:
        bad = not is_integer(first + weight[1]) or first + weight[1] > 0
    if bad:
        msg = f'{tuple(str(x) for x in weight)} is not a dominant weight for this case.'
        raise ValueError(msg)
