from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cache
from typing import Any

from sympy.external.gmpy import MPQ

from twyang.arith.rational import HALF
from twyang.enums.base import Case
from twyang.exceptions.common import InvalidIndex, ShapeMismatch


def sign(i: int) -> int:
    return (i > 0) - (i < 0)


@cache
def _position_table(indices: tuple[int, ...]) -> dict[int, int]:
    return {index: pos for pos, index in enumerate(indices)}


@dataclass(frozen=True, slots=True)
class IndexScheme:
    """Signed index set ``{-n..n}`` (without 0 when the size is even).

    Sub-schemes such as ``{-n..-m-1, m+1..n}`` keep their original labels, so
    the sign ``theta`` and the transposition ``i -> -i`` stay meaningful.
    """

    case: Case
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.indices) != sorted(set(self.indices)):
            msg = 'Indices must be strictly increasing.'
            raise ValueError(msg)
        if {-i for i in self.indices} != set(self.indices):
            msg = 'Index set must be symmetric under i -> -i.'
            raise ValueError(msg)
        if self.case is Case.SYMPLECTIC and 0 in self.indices:
            msg = 'The symplectic index set cannot contain 0.'
            raise ValueError(msg)

    @classmethod
    def standard(cls, case: Case, size: int) -> 'IndexScheme':
        if size < 1:
            msg = 'Matrix size must be positive.'
            raise ValueError(msg)
        if case is Case.SYMPLECTIC and size % 2:
            msg = 'Symplectic matrix size must be even.'
            raise ValueError(msg)
        n = size // 2
        indices = [i for i in range(-n, n + 1) if i or size % 2]
        return cls(case, tuple(indices))

    @classmethod
    def of_rank(cls, case: Case, n: int, *, odd: bool = False) -> 'IndexScheme':
        return cls.standard(case, 2 * n + int(odd))

    @property
    def N(self) -> int:
        return len(self.indices)

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def is_symplectic(self) -> bool:
        return self.case is Case.SYMPLECTIC

    @property
    def pm(self) -> int:
        """The double sign: ``+1`` in the orthogonal case, ``-1`` in the symplectic case."""
        return -1 if self.is_symplectic else 1

    @property
    def evaluation_shift(self) -> MPQ:
        return HALF * self.pm

    @property
    def _positions(self) -> dict[int, int]:
        return _position_table(self.indices)

    def check(self, *indices: int) -> None:
        for i in indices:
            if i not in self._positions:
                msg = f'Index {i} is outside {self.indices}.'
                raise InvalidIndex(msg, index=i)

    def position(self, i: int) -> int:
        self.check(i)
        return self._positions[i]

    def positives(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if i > 0)

    def label(self, r: int) -> int:
        """Actual index for the canonical label ``r`` in ``{-n'..n'}``."""
        if r == 0:
            self.check(0)
            return 0
        positives = self.positives()
        if abs(r) > len(positives):
            msg = f'Label {r} is out of range.'
            raise InvalidIndex(msg, index=r)
        return sign(r) * positives[abs(r) - 1]

    def canonical(self, i: int) -> int:
        self.check(i)
        if i == 0:
            return 0
        return sign(i) * (self.positives().index(abs(i)) + 1)

    def sub(self, indices: Iterable[int]) -> 'IndexScheme':
        chosen = tuple(sorted(set(indices)))
        self.check(*chosen)
        return IndexScheme(self.case, chosen)

    def inner(self, m: int) -> 'IndexScheme':
        """The block ``B = {i : |i| <= m}``."""
        return self.sub(i for i in self.indices if abs(i) <= m)

    def outer(self, m: int) -> 'IndexScheme':
        """The block ``A = {i : |i| > m}``."""
        return self.sub(i for i in self.indices if abs(i) > m)

    def theta(self, i: int, j: int) -> int:
        self.check(i, j)
        if self.is_symplectic:
            return sign(i) * sign(j)
        return 1

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in self.indices for j in self.indices]


def theta(i: int, j: int, scheme: IndexScheme) -> int:
    return scheme.theta(i, j)


def transpose_t[K](
    matrix: Mapping[tuple[int, int], K], scheme: IndexScheme
) -> dict[tuple[int, int], K]:
    """``(A^t)_{ij} = theta_ij A_{-j,-i}``; missing entries are zero."""
    for i, j in matrix:
        if i not in scheme.indices or j not in scheme.indices:
            msg = 'Matrix entry lies outside the index scheme.'
            raise ShapeMismatch(msg, expected=scheme.indices, actual=(i, j))
    result: dict[tuple[int, int], Any] = {}
    for i, j in scheme.pairs():
        value = matrix.get((-j, -i))
        if value is not None and value:
            result[i, j] = value if scheme.theta(i, j) == 1 else -value
    return result
