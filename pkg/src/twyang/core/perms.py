"""Permutations of an explicit ground sequence and the pair-rewriting map omega."""

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cache

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Perm:
    """``images[k]`` is the image of ``ground[k]``; ``ground`` is strictly increasing."""

    ground: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(self.ground):
            msg = 'Images must be a rearrangement of the ground sequence.'
            raise ValueError(msg)

    @classmethod
    def identity(cls, ground: Sequence[int]) -> 'Perm':
        return cls(tuple(ground), tuple(ground))

    @property
    def size(self) -> int:
        return len(self.ground)

    def __call__(self, element: int) -> int:
        return self.images[self.ground.index(element)]

    @property
    def sign(self) -> int:
        positions = [self.ground.index(x) for x in self.images]
        pairs = itertools.combinations(range(len(positions)), 2)
        inversions = sum(1 for a, b in pairs if positions[a] > positions[b])
        return -1 if inversions % 2 else 1

    def compose(self, other: 'Perm') -> 'Perm':
        """``(self ∘ other)(x) = self(other(x))``."""
        if other.ground != self.ground:
            msg = 'Permutations act on different ground sequences.'
            raise ValueError(msg)
        return Perm(self.ground, tuple(self(other(x)) for x in self.ground))

    def inverse(self) -> 'Perm':
        mapping = dict(zip(self.images, self.ground, strict=True))
        return Perm(self.ground, tuple(mapping[x] for x in self.ground))


def all_perms(ground: Sequence[int]) -> Iterator[Perm]:
    base = tuple(ground)
    for images in itertools.permutations(base):
        yield Perm(base, images)


def _rewrite_pair(pair: tuple[int, int], current: Sequence[int]) -> tuple[int, int]:
    x, y = pair
    top, second = current[-1], current[-2]
    third = current[-3] if len(current) > 2 else None  # noqa: PLR2004
    if top not in pair:
        return y, x
    if y == top:
        return (second, third) if x == second else (second, x)  # type: ignore[return-value]
    return (second, third) if y == second else (y, second)  # type: ignore[return-value]


def omega(p: Perm) -> Perm:
    """The image ``p'`` of ``p`` under the inductive pair-rewriting map.

    The pair ``(p_i, p_{N+1-i})`` is rewritten on the ground set left after the
    previous pairs were removed, and fills positions ``i`` and ``N - i`` of
    ``p'``; the last ground element is always fixed.
    """
    size = p.size
    if size < 2:  # noqa: PLR2004
        msg = 'omega needs at least two ground elements.'
        raise ValueError(msg)
    images: list[int | None] = [None] * size
    images[-1] = p.ground[-1]
    current = list(p.ground)
    i = 0
    while len(current) > 2:  # noqa: PLR2004
        pair = (p.images[i], p.images[size - 1 - i])
        images[i], images[size - 2 - i] = _rewrite_pair(pair, current)
        current.remove(pair[0])
        current.remove(pair[1])
        i += 1
    if len(current) == 2:  # noqa: PLR2004
        images[i] = current[0]
    return Perm(p.ground, tuple(x for x in images if x is not None))


@cache
def omega_table(size: int) -> tuple[tuple[Perm, Perm], ...]:
    """All pairs ``(p, omega(p))`` over the positions ``1..size``."""
    return tuple((p, omega(p)) for p in all_perms(range(1, size + 1)))


def omega_quotient_bijective(size: int) -> bool:
    """Whether ``p -> p ∘ omega(p)^-1`` is injective on the symmetric group."""
    seen = set()
    for p, p_prime in omega_table(size):
        seen.add(p.compose(p_prime.inverse()).images)
    result = len(seen) == len(omega_table(size))
    log.debug('omega quotient map for N=%d: bijective=%s', size, result)
    return result
