"""Trapezium patterns between ``λ`` (top row) and ``μ`` (bottom row)."""

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cache

from twyang.exceptions.common import EmptySkewSpace
from twyang.types import ExtInt
from twyang.utils.validation import check_symplectic_weight

log = logging.getLogger(__name__)

type Row = tuple[int, ...]


def extended_entry(mu: Sequence[int], j: int) -> ExtInt:
    """``μ_j`` with ``μ_j = 0`` for ``j <= 0`` and ``μ_j = -inf`` for ``j > m``."""
    if j <= 0:
        return 0
    if j > len(mu):
        return -math.inf
    return mu[j - 1]


def mid(a: ExtInt, b: ExtInt, c: ExtInt) -> ExtInt:
    """The middle value; a ``-inf`` argument makes it the minimum of the other two."""
    values = [a, b, c]
    if -math.inf in values:
        values.remove(-math.inf)
        return min(values)
    return sorted(values)[1]


@dataclass(frozen=True, slots=True)
class TrapPattern:
    """``rows[t]`` is ``λ_{n-t, ·}`` (so ``rows[0] = λ`` and ``rows[-1] = μ``).

    ``primed[t]`` is ``λ'_{n-t, ·}``.
    """

    rows: tuple[Row, ...]
    primed: tuple[Row, ...]

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def m(self) -> int:
        return len(self.rows[-1])

    @property
    def top(self) -> Row:
        return self.rows[0]

    @property
    def bottom(self) -> Row:
        return self.rows[-1]

    def row(self, k: int) -> Row:
        return self.rows[self.n - k]

    def primed_row(self, k: int) -> Row:
        return self.primed[self.n - k]

    def is_valid(self) -> bool:
        for k in range(self.m + 1, self.n + 1):
            row, primed, below = self.row(k), self.primed_row(k), self.row(k - 1)
            upper: list[int] = [0, *row]
            for i in range(k):
                if not row[i] <= primed[i] <= upper[i]:
                    return False
            for i in range(k - 1):
                if not primed[i + 1] <= below[i] <= primed[i]:
                    return False
        return True

    def weight(self) -> tuple[int, ...]:
        return pattern_weight(self)


def pattern_weight(pattern: TrapPattern) -> tuple[int, ...]:
    """``w_k = 2 Σ λ'_{ki} - Σ λ_{ki} - Σ λ_{k-1,i}`` for ``k = m+1..n``."""
    return tuple(
        2 * sum(pattern.primed_row(k)) - sum(pattern.row(k)) - sum(pattern.row(k - 1))
        for k in range(pattern.m + 1, pattern.n + 1)
    )


def nonempty_violation(lam: Sequence[int], mu: Sequence[int]) -> str | None:
    """The first failing inequality among ``μ_i >= λ_{i+n-m}`` and ``λ_i >= μ_{i+n-m}``."""
    n, m = len(lam), len(mu)
    for i in range(1, m + 1):
        if mu[i - 1] < lam[i + n - m - 1]:
            return f'mu_{i} >= lambda_{i + n - m} ({mu[i - 1]} < {lam[i + n - m - 1]})'
    for i in range(1, n + 1):
        other = extended_entry(mu, i + n - m)
        if lam[i - 1] < other:
            return f'lambda_{i} >= mu_{i + n - m} ({lam[i - 1]} < {other})'
    return None


def _check_shapes(lam: Sequence[int], mu: Sequence[int]) -> None:
    check_symplectic_weight(lam)
    check_symplectic_weight(mu)
    if len(mu) >= len(lam):
        msg = 'Patterns need m < n.'
        raise ValueError(msg)


def _primed_choices(row: Row) -> Iterator[Row]:
    upper = [0, *row]
    ranges = [range(row[i], upper[i] + 1) for i in range(len(row))]
    for values in itertools.product(*ranges):
        yield tuple(values)


def _lower_choices(primed: Row) -> Iterator[Row]:
    ranges = [range(primed[i + 1], primed[i] + 1) for i in range(len(primed) - 1)]
    for values in itertools.product(*ranges):
        yield tuple(values)


def enumerate_patterns(lam: Sequence[int], mu: Sequence[int]) -> list[TrapPattern]:
    _check_shapes(lam, mu)
    bottom = tuple(mu)
    m = len(mu)
    result: list[TrapPattern] = []

    def descend(rows: list[Row], primed: list[Row]) -> None:
        current = rows[-1]
        if len(current) == m:
            if current == bottom:
                result.append(TrapPattern(tuple(rows), tuple(primed)))
            return
        for p in _primed_choices(current):
            for lower in _lower_choices(p):
                if len(lower) == m and lower != bottom:
                    continue
                descend([*rows, lower], [*primed, p])

    descend([tuple(lam)], [])
    log.debug('enumerate_patterns: %d patterns for %s / %s', len(result), lam, mu)
    return result


def count_patterns(lam: Sequence[int], mu: Sequence[int]) -> int:
    _check_shapes(lam, mu)
    bottom = tuple(mu)
    m = len(mu)

    @cache
    def count(row: Row) -> int:
        if len(row) == m:
            return int(row == bottom)
        total = 0
        for p in _primed_choices(row):
            for lower in _lower_choices(p):
                total += count(lower)
        return total

    return count(tuple(lam))


def lambda0(lam: Sequence[int], mu: Sequence[int]) -> TrapPattern:
    """The pattern of maximal weight, given entrywise by the ``mid`` formulas."""
    _check_shapes(lam, mu)
    violation = nonempty_violation(lam, mu)
    if violation is not None:
        raise EmptySkewSpace(inequality=violation)
    n, m = len(lam), len(mu)

    def entry(i: int, first: int, second: int) -> int:
        value = mid(lam[i - 1], extended_entry(mu, first), extended_entry(mu, second))
        return int(value)

    rows = [
        tuple(entry(i, i + k - m, i + m - k) for i in range(1, k + 1)) for k in range(n, m - 1, -1)
    ]
    primed = [
        tuple(entry(i, i + k - m - 1, i + m - k) for i in range(1, k + 1))
        for k in range(n, m, -1)
    ]
    pattern = TrapPattern(tuple(rows), tuple(primed))
    if not pattern.is_valid() or pattern.top != tuple(lam) or pattern.bottom != tuple(mu):
        msg = 'The mid formulas did not produce a pattern.'
        raise RuntimeError(msg)
    return pattern


def weight_precedes(w: Sequence[int], w_prime: Sequence[int]) -> bool:
    """``w ≼ w'``: ``w' - w`` is a non-negative sum of ``-2ε_k`` and ``±ε_i - ε_j``."""
    diff = [b - a for a, b in zip(w, w_prime, strict=True)]
    tail = 0
    for index in range(len(diff) - 1, -1, -1):
        tail += diff[index]
        if tail > 0:
            return False
    return tail % 2 == 0


def maximal_weights(patterns: Sequence[TrapPattern]) -> list[tuple[int, ...]]:
    weights = sorted({p.weight() for p in patterns})
    return [
        w
        for w in weights
        if not any(other != w and weight_precedes(w, other) for other in weights)
    ]
