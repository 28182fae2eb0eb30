import logging
from collections.abc import Sequence
from typing import Any

from twyang.arith.linalg import SparseOp
from twyang.core.perms import Perm, omega_table
from twyang.core.tensor import antisymmetrized_component, rt_slots
from twyang.enums.base import MinorMethod
from twyang.exceptions.common import ShapeMismatch
from twyang.sklyanin.operators import (
    FamilyProtocol,
    OpTensor,
    Point,
    alpha,
    as_operator,
    scaled,
)

__all__ = ['MinorsMixin', 'formula_shape', 'reorder_sign']

log = logging.getLogger(__name__)

type FormulaShape = tuple[tuple[int, ...], tuple[int, ...], int]


def reorder_sign(source: Sequence[int], target: Sequence[int]) -> int:
    """Sign of the rearrangement taking ``source`` to ``target`` (distinct entries)."""
    positions = tuple(source.index(x) for x in target)
    return Perm(tuple(range(len(source))), positions).sign


def formula_shape(upper: Sequence[int], lower: Sequence[int]) -> FormulaShape | None:
    """Rewrite ``(upper, lower)`` as ``(-a_1..-a_M; a_1..a_{M-1}, b_M)`` up to a sign.

    Returns ``(a, lower_target, sign)`` or ``None`` when no such ``a`` exists.
    """
    size = len(upper)
    if len(set(upper)) < size or len(set(lower)) < size:
        return None
    negated = {-x for x in upper}
    common = [x for x in lower if x in negated]
    if len(common) == size:
        a_last = b_last = lower[-1]
    elif len(common) == size - 1:
        a_last = next(x for x in sorted(negated) if x not in lower)
        b_last = next(x for x in lower if x not in negated)
    else:
        return None
    rest = [x for x in lower if x != b_last]
    a = (*rest, a_last)
    target_lower = (*rest, b_last)
    sign = reorder_sign(upper, [-x for x in a]) * reorder_sign(lower, target_lower)
    return a, target_lower, sign


class MinorsMixin(FamilyProtocol):
    """Sklyanin minors, auxiliary minors and the Sklyanin determinant.

    The chain route applies ``A_k ⟨S_1, ..., S_k⟩`` to ``e_{b_1} ⊗ ... ⊗ e_{b_k}``
    with every module basis vector at once and reads the ``e_{a_1} ⊗ ... ⊗ e_{a_k}``
    component; the formula route sums over ``p`` and its image under ``omega``.
    """

    minor_method: MinorMethod = MinorMethod.AUTO

    def _check_minor(self, upper: Sequence[int], lower: Sequence[int]) -> None:
        if len(upper) != len(lower):
            msg = 'Upper and lower index lists differ in length.'
            raise ShapeMismatch(msg, expected=len(upper), actual=len(lower))
        if not 1 <= len(upper) <= self.scheme.N:
            msg = f'Minor order must lie in 1..{self.scheme.N}.'
            raise ShapeMismatch(msg, expected=self.scheme.N, actual=len(upper))
        self.scheme.check(*upper, *lower)

    def _chain(self, tvec: OpTensor, count: int, w: Point) -> OpTensor:
        """``⟨S_1, ..., S_count⟩`` on the first ``count`` slots, ``u_i = w - i + 1``."""
        points = [w - s for s in range(count)]
        tvec = self.apply_slot(tvec, count - 1, points[count - 1])
        for i in range(count - 2, -1, -1):
            for j in range(count - 1, i, -1):
                tvec = rt_slots(tvec, i, j, -(points[i] + points[j]), self.scheme)
            tvec = self.apply_slot(tvec, i, points[i])
        return tvec

    def resolve_method(
        self, upper: Sequence[int], lower: Sequence[int], method: MinorMethod | None = None
    ) -> MinorMethod:
        method = method or self.minor_method
        if method is not MinorMethod.AUTO:
            return method
        if self.formula_ready and formula_shape(upper, lower) is not None:
            return MinorMethod.FORMULA
        return MinorMethod.CHAIN

    def minor(
        self,
        upper: Sequence[int],
        lower: Sequence[int],
        w: Point,
        *,
        method: MinorMethod | None = None,
    ) -> SparseOp[Any]:
        """``s^{a_1..a_k}_{b_1..b_k}(w)``; repeated indices give the zero operator."""
        self._check_minor(upper, lower)
        if len(set(upper)) < len(upper) or len(set(lower)) < len(lower):
            return SparseOp.zero(self.dim)
        if self.resolve_method(upper, lower, method) is MinorMethod.FORMULA:
            return self.formula_minor(upper, lower, w)
        return self.chain_minor(upper, lower, w)

    def chain_minor(self, upper: Sequence[int], lower: Sequence[int], w: Point) -> SparseOp[Any]:
        self._check_minor(upper, lower)
        tvec = self._chain(self.start(tuple(lower), w), len(lower), w)
        return as_operator(self.dim, antisymmetrized_component(tvec, upper))

    def formula_minor(self, upper: Sequence[int], lower: Sequence[int], w: Point) -> SparseOp[Any]:
        """Determinant-like expansion valid for families satisfying the symmetry relation."""
        self._check_minor(upper, lower)
        shape = formula_shape(upper, lower)
        if shape is None:
            msg = 'Indices do not have the form (-a_1..-a_M; a_1..a_{M-1}, b_M).'
            raise ShapeMismatch(msg, expected='(-a; a, b)', actual=(tuple(upper), tuple(lower)))
        a, target_lower, sign = shape
        size = len(a)
        m = size // 2
        if size == 1:
            pairs: Sequence[tuple[Perm, Perm]] = [(Perm.identity((1,)), Perm.identity((1,)))]
        else:
            pairs = omega_table(size)
        total = SparseOp.zero(self.dim)
        for p, p_prime in pairs:
            product: SparseOp[Any] | None = None
            for i in range(1, size + 1):
                x = -a[p.images[i - 1] - 1]
                y = target_lower[p_prime.images[i - 1] - 1]
                if i <= m:
                    factor = scaled(self.entry(-y, -x, -w + i - 1), self.scheme.theta(x, y))
                else:
                    factor = self.entry(x, y, w - i + 1)
                product = factor if product is None else product @ factor
                if product.is_zero():
                    break
            if product is None or product.is_zero():
                continue
            term = product if p.sign * p_prime.sign == 1 else -product
            total = total + term
        return scaled(total, alpha(m, self.scheme.case).at(w) * sign)

    def auxiliary_minor(
        self,
        upper: Sequence[int],
        lower: Sequence[int],
        c: int,
        w: Point,
    ) -> SparseOp[Any]:
        """``ǎ^{a_1..a_k}_{b_1..b_{k-1}, c}(w)``.

        Read off ``A_k ⟨S_1..S_{k-1}⟩ R^t_{1k} ⋯ R^t_{k-1,k}`` applied to ``e_b ⊗ e_c``.
        """
        k = len(upper)
        if len(lower) != k - 1:
            msg = 'An auxiliary minor has one lower index fewer than upper indices.'
            raise ShapeMismatch(msg, expected=k - 1, actual=len(lower))
        self.scheme.check(*upper, *lower, c)
        points = [w - s for s in range(k)]
        tvec = self.start((*lower, c), w)
        for i in range(k - 2, -1, -1):
            tvec = rt_slots(tvec, i, k - 1, -(points[i] + points[k - 1]), self.scheme)
        if k > 1:
            tvec = self._chain(tvec, k - 1, w)
        return as_operator(self.dim, antisymmetrized_component(tvec, upper))

    def sdet(self, w: Point, *, method: MinorMethod | None = None) -> SparseOp[Any]:
        indices = self.scheme.indices
        operator = self.minor(indices, indices, w, method=method)
        log.debug('sdet: N=%d, dim %d', self.scheme.N, self.dim)
        return operator
