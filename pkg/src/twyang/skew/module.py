"""Skew representations ``V(λ)^+_μ`` of the twisted Yangian of rank ``n - m``."""

import logging
from collections.abc import Sequence
from typing import Any

from twyang.arith.linalg import SparseOp
from twyang.combinatorics.patterns import nonempty_violation
from twyang.core.scheme import IndexScheme
from twyang.enums.base import Case, HwMethod
from twyang.exceptions.common import EmptySkewSpace, SubspaceNotInvariant
from twyang.reps.base import LieRep
from twyang.reps.builder import extract_irrep
from twyang.reps.config import RepConfig
from twyang.reps.weights import Subspace, Vector, skew_subspace
from twyang.skew.config import SkewConfig
from twyang.sklyanin.base import BaseFamily
from twyang.sklyanin.config import FamilyConfig
from twyang.sklyanin.families import EvalSMatrix, sylvester_sharp
from twyang.sklyanin.operators import Point
from twyang.sklyanin.relations import Points, Sampling, resolve_points

log = logging.getLogger(__name__)


class SkewFamily(BaseFamily):
    """``ρ(s_ab(u)) = α_{-m}(u) s^{-m..m, a}_{-m..m, b}(u + M/2)`` in the basis of a subspace."""

    def __init__(
        self,
        image: BaseFamily,
        space: Subspace,
        *,
        config: FamilyConfig | None = None,
    ) -> None:
        super().__init__(image.scheme, space.dim, image.weight, config=config)
        self.image = image
        self.space = space

    def compute_entry(self, i: int, j: int, w: Point) -> SparseOp[Any]:
        return self.space.restrict(self.image.entry(i, j, w))


class SkewModule:
    """``V(λ)^+_μ`` with the action of the twisted Yangian through the Sylvester map.

    For ``m = 0`` the space is all of ``V(λ)`` and the action is the evaluation module.
    """

    hw_method: HwMethod = HwMethod.INTERPOLATE
    verify_samples: int = 3
    irreducibility_batch: int = 4

    def __init__(
        self,
        lam: Sequence[int],
        mu: Sequence[int],
        rep: LieRep,
        space: Subspace,
        *,
        config: SkewConfig | None = None,
        family_config: FamilyConfig | None = None,
    ) -> None:
        self.lam = tuple(lam)
        self.mu = tuple(mu)
        self.rep = rep
        self.space = space
        self.base = EvalSMatrix(rep, config=family_config)
        self.image = sylvester_sharp(self.base, self.m, config=family_config)
        self.family = SkewFamily(self.image, space, config=family_config)
        self.highest: Vector | None = None
        if config is None:
            return
        if config.hw_method is not None:
            self.hw_method = config.hw_method
        if config.verify_samples is not None:
            self.verify_samples = config.verify_samples
        if config.irreducibility_batch is not None:
            self.irreducibility_batch = config.irreducibility_batch

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def scheme(self) -> IndexScheme:
        return self.rep.scheme

    @property
    def outer(self) -> IndexScheme:
        """The index set ``A`` of the smaller algebra, with its original labels."""
        return self.family.scheme

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_symplectic(self) -> bool:
        return self.scheme.is_symplectic

    @property
    def sampling(self) -> Sampling:
        return Sampling(floor=self.verify_samples)

    def action(self, a: int, b: int, w: Point) -> SparseOp[Any]:
        return self.family.entry(a, b, w)

    def verify_invariance(self, points: Points = None) -> None:
        """Restrict every ``ρ(s_ab(u))``; ``SubspaceNotInvariant`` if one leaves the space."""
        values = resolve_points(self.sampling if points is None else points, self.family.weight)
        for u in values:
            for a, b in self.outer.pairs():
                self.action(a, b, u)
        log.debug(
            'skew module %s/%s: invariance verified at %d points', self.lam, self.mu, len(values)
        )

    def __repr__(self) -> str:
        return f'SkewModule(lam={self.lam}, mu={self.mu}, dim={self.dim})'


def build_skew(
    lam: Sequence[int],
    mu: Sequence[int],
    scheme: IndexScheme | None = None,
    *,
    config: SkewConfig | None = None,
    rep_config: RepConfig | None = None,
    family_config: FamilyConfig | None = None,
    verify: bool = True,
) -> SkewModule:
    """Build ``V(λ)^+_μ`` inside ``V(λ)``; the scheme defaults to ``sp_{2n}``."""
    n, m = len(lam), len(mu)
    if scheme is None:
        scheme = IndexScheme.of_rank(Case.SYMPLECTIC, n)
    if scheme.n != n:
        msg = f'λ has {n} entries but the scheme has rank {scheme.n}.'
        raise ValueError(msg)
    if m >= n:
        msg = 'A skew module needs m < n.'
        raise ValueError(msg)
    if scheme.is_symplectic:
        violation = nonempty_violation(lam, mu)
        if violation is not None:
            raise EmptySkewSpace(inequality=violation)
    rep = extract_irrep(lam, scheme, rep_config)
    space = skew_subspace(rep, mu, m)
    if not space.dim:
        msg = f'V(λ)^+_μ is zero for λ={tuple(lam)}, μ={tuple(mu)}.'
        raise EmptySkewSpace(msg)
    module = SkewModule(lam, mu, rep, space, config=config, family_config=family_config)
    if verify:
        try:
            module.verify_invariance()
        except SubspaceNotInvariant:
            log.exception('skew module %s/%s is not invariant', module.lam, module.mu)
            raise
    log.info('built skew module λ=%s μ=%s of dimension %d', module.lam, module.mu, module.dim)
    return module
