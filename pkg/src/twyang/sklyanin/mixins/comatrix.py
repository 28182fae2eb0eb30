from typing import Any

from twyang.arith.linalg import SparseOp
from twyang.enums.base import ComatrixMethod
from twyang.sklyanin.operators import MinorsProtocol, Point, alpha, scaled

__all__ = ['ComatrixMixin']


class ComatrixMixin(MinorsProtocol):
    comatrix_method: ComatrixMethod = ComatrixMethod.AUTO

    def comatrix_entry(
        self,
        x: int,
        y: int,
        w: Point,
        *,
        method: ComatrixMethod | None = None,
    ) -> SparseOp[Any]:
        """``ŝ_xy(w)``, the entry of the matrix with ``Ŝ(u) S(u - N + 1) = sdet S(u)``."""
        self.scheme.check(x, y)
        method = method or self.comatrix_method
        if method is ComatrixMethod.AUTO:
            method = ComatrixMethod.MINOR if self.formula_ready else ComatrixMethod.AUXILIARY
        indices = self.scheme.indices
        size = self.scheme.N
        if method is ComatrixMethod.AUXILIARY:
            i = self.scheme.position(x) + 1
            lower = [a for a in indices if a != x]
            value = self.auxiliary_minor(indices, lower, y, w)
            return value if (size - i) % 2 == 0 else -value
        # transposed comatrix entry as a minor of order N - 1 at -w + N - 2
        i = self.scheme.position(-y) + 1
        j = self.scheme.position(-x) + 1
        upper = [a for a in indices if a != -x]
        lower = [a for a in indices if a != -y]
        value = self.minor(upper, lower, -w + size - 2)
        factor = alpha(size - 1, self.scheme.case).at(w) * self.scheme.theta(x, y)
        return scaled(value, factor if (i + j) % 2 == 0 else -factor)

    def comatrix(
        self, w: Point, *, method: ComatrixMethod | None = None
    ) -> dict[tuple[int, int], SparseOp[Any]]:
        pairs = self.scheme.pairs()
        return {(x, y): self.comatrix_entry(x, y, w, method=method) for x, y in pairs}
