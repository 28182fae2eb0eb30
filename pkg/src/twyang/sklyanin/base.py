import logging
from abc import ABC, abstractmethod
from typing import Any

from twyang.arith.linalg import SparseOp
from twyang.arith.ratfunc import RatFunc
from twyang.core.scheme import IndexScheme
from twyang.core.tensor import TensorKey
from twyang.sklyanin.config import FamilyConfig
from twyang.sklyanin.mixins import ComatrixMixin, MinorsMixin
from twyang.sklyanin.operators import (
    OpTensor,
    Point,
    apply_entries,
    identity_entries,
    one_like,
)

log = logging.getLogger(__name__)


class BaseFamily(MinorsMixin, ComatrixMixin, ABC):
    """An ``N x N`` matrix of operators on a ``dim``-dimensional module, depending on ``u``.

    ``weight`` bounds the degrees of numerator and denominator of every entry as a
    rational function of ``u``; identity checks sample enough points from it.
    ``formula_ready`` marks families satisfying the twisted Yangian symmetry
    relation, for which the explicit minor formula applies.
    """

    formula_ready: bool = True
    cache_entries: bool = True

    def __init__(
        self,
        scheme: IndexScheme,
        dim: int,
        weight: int,
        *,
        config: FamilyConfig | None = None,
    ) -> None:
        self.scheme = scheme
        self.dim = dim
        self.weight = weight
        self._entries: dict[tuple[int, int, Any], SparseOp[Any]] = {}
        if config is None:
            return
        if config.minor_method is not None:
            self.minor_method = config.minor_method
        if config.comatrix_method is not None:
            self.comatrix_method = config.comatrix_method
        if config.cache_entries is not None:
            self.cache_entries = config.cache_entries

    @abstractmethod
    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        raise NotImplementedError

    def entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        self.scheme.check(i, j)
        if not self.cache_entries or isinstance(w, RatFunc):
            return self.compute_entry(i, j, w)
        key = (i, j, w)
        cached = self._entries.get(key)
        if cached is None:
            cached = self._entries[key] = self.compute_entry(i, j, w)
        return cached

    def matrix(self, w: Point) -> dict[tuple[int, int], SparseOp[Any]]:
        return {(i, j): self.entry(i, j, w) for i, j in self.scheme.pairs()}

    def identity(self, w: Point) -> SparseOp[Any]:
        return SparseOp.identity(self.dim, one_like(w))

    def start(self, key: TensorKey, w: Point) -> OpTensor:
        """``e_{key}`` tensored with the identity operator of the module."""
        return {tuple(key): identity_entries(self.dim, one_like(w))}

    def apply_slot(self, tvec: OpTensor, slot: int, w: Point) -> OpTensor:
        return apply_entries(self, tvec, slot, w)

    def __repr__(self) -> str:
        return f'{type(self).__name__}(N={self.scheme.N}, dim={self.dim})'
