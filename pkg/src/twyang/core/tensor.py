"""Sparse operators on ``(C^N)^{⊗k}`` and their action on module-valued tensors.

A module-valued tensor maps a tuple of scheme indices (one per tensor slot) to a
sparse vector of the module, or to a sparse operator keyed by ``(row, column)``;
the tensor operators act on the slots only.
"""

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from sympy import QQ

from twyang.arith.linalg import add_scaled
from twyang.arith.ratfunc import reciprocal
from twyang.core.perms import Perm
from twyang.core.scheme import IndexScheme
from twyang.exceptions.common import ShapeMismatch

type TensorKey = tuple[int, ...]
type TensorVector[K] = dict[TensorKey, dict[Any, K]]


def tensor_add[K](
    acc: TensorVector[K],
    key: TensorKey,
    vec: Mapping[Any, K],
    coeff: Any = None,
) -> None:
    target = acc.setdefault(key, {})
    add_scaled(target, vec, coeff)
    if not target:
        del acc[key]


def tensor_combine[K](*terms: tuple[TensorVector[K], Any]) -> TensorVector[K]:
    """``sum(coeff * tvec)`` over the given terms; a ``None`` coefficient means 1."""
    result: TensorVector[K] = {}
    for tvec, coeff in terms:
        if coeff is not None and not coeff:
            continue
        for key, vec in tvec.items():
            tensor_add(result, key, vec, coeff)
    return result


def flip_slots[K](tvec: TensorVector[K], i: int, j: int) -> TensorVector[K]:
    """The flip ``P_ij``."""
    result: TensorVector[K] = {}
    for key, vec in tvec.items():
        swapped = list(key)
        swapped[i], swapped[j] = key[j], key[i]
        tensor_add(result, tuple(swapped), vec)
    return result


def q_images(c: int, d: int, scheme: IndexScheme) -> list[tuple[int, int, int]]:
    """``Q (e_c ⊗ e_d)`` as ``(first, second, sign)`` triples."""
    if c != -d:
        return []
    return [(-b, b, scheme.theta(d, b)) for b in scheme.indices]


def q_slots[K](tvec: TensorVector[K], i: int, j: int, scheme: IndexScheme) -> TensorVector[K]:
    result: TensorVector[K] = {}
    for key, vec in tvec.items():
        for first, second, sign in q_images(key[i], key[j], scheme):
            image = list(key)
            image[i], image[j] = first, second
            tensor_add(result, tuple(image), vec, None if sign == 1 else -1)
    return result


def rt_slots[K](
    tvec: TensorVector[K],
    i: int,
    j: int,
    x: Any,
    scheme: IndexScheme,
) -> TensorVector[K]:
    """``R^t_ij(x) = 1 - Q_ij / x``."""
    if not x:
        msg = 'R^t(x) is undefined at x = 0.'
        raise ZeroDivisionError(msg)
    return tensor_combine((tvec, None), (q_slots(tvec, i, j, scheme), -reciprocal(x)))


def r_slots[K](tvec: TensorVector[K], i: int, j: int, x: Any) -> TensorVector[K]:
    """``R_ij(x) = 1 - P_ij / x``."""
    if not x:
        msg = 'R(x) is undefined at x = 0.'
        raise ZeroDivisionError(msg)
    return tensor_combine((tvec, None), (flip_slots(tvec, i, j), -reciprocal(x)))


def antisymmetrized_component[K](tvec: TensorVector[K], target: Sequence[int]) -> dict[Any, K]:
    """Component at ``e_{a_1} ⊗ ... ⊗ e_{a_k}`` of ``A_k`` applied to ``tvec``."""
    result: dict[Any, K] = {}
    ground = tuple(range(len(target)))
    for images in itertools.permutations(ground):
        vec = tvec.get(tuple(target[p] for p in images))
        if vec:
            add_scaled(result, vec, None if Perm(ground, images).sign == 1 else -1)
    return result


@dataclass(frozen=True, slots=True, eq=False)
class TensorOp[K]:
    """Operator on ``(C^N)^{⊗k}`` stored by columns ``cols[input][output]``."""

    scheme: IndexScheme
    k: int
    cols: Mapping[TensorKey, Mapping[TensorKey, K]]

    def basis(self) -> Iterable[TensorKey]:
        return itertools.product(self.scheme.indices, repeat=self.k)

    @classmethod
    def from_action(
        cls,
        scheme: IndexScheme,
        k: int,
        action: Any,
    ) -> 'TensorOp[K]':
        """Materialize a slot action ``TensorVector -> TensorVector`` column by column."""
        cols: dict[TensorKey, dict[TensorKey, K]] = {}
        for key in itertools.product(scheme.indices, repeat=k):
            image = action({key: {0: QQ.one}})
            column = {out: vec[0] for out, vec in image.items() if vec.get(0)}
            if column:
                cols[key] = column
        return cls(scheme, k, cols)

    @classmethod
    def identity(cls, scheme: IndexScheme, k: int) -> 'TensorOp[K]':
        return cls.from_action(scheme, k, lambda tvec: tvec)

    def _check(self, other: 'TensorOp[Any]') -> None:
        if other.k != self.k or other.scheme != self.scheme:
            msg = 'Tensor operators act on different spaces.'
            expected, actual = (self.scheme.N, self.k), (other.scheme.N, other.k)
            raise ShapeMismatch(msg, expected=expected, actual=actual)

    def apply(self, vec: Mapping[TensorKey, K]) -> dict[TensorKey, K]:
        result: dict[TensorKey, K] = {}
        for key, coeff in vec.items():
            col = self.cols.get(key)
            if col:
                add_scaled(result, col, coeff)
        return result

    def __matmul__(self, other: 'TensorOp[K]') -> 'TensorOp[K]':
        self._check(other)
        cols = {key: self.apply(col) for key, col in other.cols.items()}
        return TensorOp(self.scheme, self.k, {key: col for key, col in cols.items() if col})

    def __add__(self, other: 'TensorOp[K]') -> 'TensorOp[K]':
        self._check(other)
        cols = {key: dict(col) for key, col in self.cols.items()}
        for key, col in other.cols.items():
            add_scaled(cols.setdefault(key, {}), col)
        return TensorOp(self.scheme, self.k, {key: col for key, col in cols.items() if col})

    def scale(self, coeff: Any) -> 'TensorOp[K]':
        if not coeff:
            return TensorOp(self.scheme, self.k, {})
        return TensorOp(
            self.scheme,
            self.k,
            {key: {out: v * coeff for out, v in col.items()} for key, col in self.cols.items()},
        )

    def __neg__(self) -> 'TensorOp[K]':
        return self.scale(-1)

    def __sub__(self, other: 'TensorOp[K]') -> 'TensorOp[K]':
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOp):
            return NotImplemented
        return self.k == other.k and self.scheme == other.scheme and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]


def build_p(scheme: IndexScheme) -> TensorOp[Any]:
    return TensorOp.from_action(scheme, 2, lambda tvec: flip_slots(tvec, 0, 1))


def build_q(scheme: IndexScheme) -> TensorOp[Any]:
    return TensorOp.from_action(scheme, 2, lambda tvec: q_slots(tvec, 0, 1, scheme))


def build_rt(scheme: IndexScheme, x: Any) -> TensorOp[Any]:
    """``R^t(x) = 1 - Q / x``."""
    if not x:
        msg = 'R^t(x) is undefined at x = 0.'
        raise ValueError(msg)
    return TensorOp.identity(scheme, 2) - build_q(scheme).scale(reciprocal(x))


def build_r(scheme: IndexScheme, x: Any) -> TensorOp[Any]:
    """Yang's matrix ``R(x) = 1 - P / x``."""
    if not x:
        msg = 'R(x) is undefined at x = 0.'
        raise ValueError(msg)
    return TensorOp.identity(scheme, 2) - build_p(scheme).scale(reciprocal(x))


def perm_op(scheme: IndexScheme, images: Sequence[int]) -> TensorOp[Any]:
    """``P_σ`` moving the factor in slot ``s`` to slot ``images[s]``."""
    k = len(images)
    if sorted(images) != list(range(k)):
        msg = 'Slot images must be a permutation of the slots.'
        raise ValueError(msg)

    def action(tvec: TensorVector[Any]) -> TensorVector[Any]:
        result: TensorVector[Any] = {}
        for key, vec in tvec.items():
            image = [0] * k
            for slot, target in enumerate(images):
                image[target] = key[slot]
            tensor_add(result, tuple(image), vec)
        return result

    return TensorOp.from_action(scheme, k, action)


def antisymmetrizer(k: int, scheme: IndexScheme) -> TensorOp[Any]:
    """``A_k = sum_σ sgn σ · P_σ``; ``A_k^2 = k! A_k``."""
    if not 1 <= k <= scheme.N:
        msg = f'Antisymmetrizer order must lie in 1..{scheme.N}.'
        raise ValueError(msg)
    ground = tuple(range(k))
    result = TensorOp(scheme, k, {})
    for images in itertools.permutations(ground):
        term = perm_op(scheme, images)
        result = result + (term if Perm(ground, images).sign == 1 else -term)
    return result
