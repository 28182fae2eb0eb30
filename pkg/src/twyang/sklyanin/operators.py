"""Operator-valued tensors and the scalar factors ``α_p(u)``."""

from collections.abc import Mapping, Sequence
from typing import Any, Protocol

from sympy import QQ

from twyang.arith.linalg import SparseOp
from twyang.arith.ratfunc import RatFunc
from twyang.arith.rational import HALF
from twyang.core.scheme import IndexScheme
from twyang.core.tensor import TensorKey, TensorVector, tensor_add
from twyang.enums.base import Case, MinorMethod

type Point = Any
type OpEntries = dict[tuple[int, int], Any]
type OpTensor = TensorVector[Any]


def one_like(w: Point) -> Any:
    return RatFunc.const(1) if isinstance(w, RatFunc) else QQ.one


def zero_like(w: Point) -> Any:
    return RatFunc.const(0) if isinstance(w, RatFunc) else QQ.zero


def left_multiply(op: SparseOp[Any], mat: Mapping[tuple[int, int], Any]) -> OpEntries:
    """``op · mat`` where ``mat`` is stored by ``(row, column)``."""
    result: OpEntries = {}
    for (r, c), value in mat.items():
        for i, coeff in op.column(r).items():
            key = (i, c)
            total = result.get(key, 0) + coeff * value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
    return result


def identity_entries(dim: int, one: Any) -> OpEntries:
    return {(t, t): one for t in range(dim)}


def as_operator(dim: int, mat: Mapping[tuple[int, int], Any]) -> SparseOp[Any]:
    cols: dict[int, dict[int, Any]] = {}
    for (r, c), value in mat.items():
        cols.setdefault(c, {})[r] = value
    return SparseOp.from_columns(dim, cols)


def scaled(op: SparseOp[Any], coeff: Any) -> SparseOp[Any]:
    """``coeff · op`` with the scalar on the left, so rational functions absorb rationals."""
    if not coeff:
        return SparseOp.zero(op.dim)
    return op.map(lambda v: coeff * v)


def alpha(p: Any, case: Case) -> RatFunc:
    """``α_p(u)``: ``1`` in the orthogonal case, ``(u + 1/2)/(u - p + 1/2)`` otherwise."""
    if case is Case.ORTHOGONAL:
        return RatFunc.const(1)
    p = QQ.convert(p)
    return RatFunc.linear(-HALF) / RatFunc.linear(p - HALF)


class FamilyProtocol(Protocol):
    """What the minor and comatrix mixins expect from an operator family."""

    scheme: IndexScheme
    dim: int
    weight: int
    formula_ready: bool

    def entry(self, i: int, j: int, w: Point) -> SparseOp[Any]: ...

    def start(self, key: TensorKey, w: Point) -> OpTensor: ...

    def apply_slot(self, tvec: OpTensor, slot: int, w: Point) -> OpTensor: ...


def apply_entries(family: FamilyProtocol, tvec: OpTensor, slot: int, w: Point) -> OpTensor:
    """``S(w)`` acting on one tensor slot of an operator-valued tensor."""
    result: OpTensor = {}
    for key, mat in tvec.items():
        c = key[slot]
        for a in family.scheme.indices:
            entry = family.entry(a, c, w)
            if entry.is_zero():
                continue
            image = left_multiply(entry, mat)
            if image:
                tensor_add(result, (*key[:slot], a, *key[slot + 1 :]), image)
    return result


class MinorsProtocol(FamilyProtocol, Protocol):
    def minor(
        self,
        upper: Sequence[int],
        lower: Sequence[int],
        w: Point,
        *,
        method: MinorMethod | None = None,
    ) -> SparseOp[Any]: ...

    def auxiliary_minor(
        self, upper: Sequence[int], lower: Sequence[int], c: int, w: Point
    ) -> SparseOp[Any]: ...
