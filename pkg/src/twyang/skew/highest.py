"""The highest vector ``ζ_{Λ_0}`` of a skew module and its highest weight."""

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import partial
from typing import Any

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.interpolate import interpolate
from twyang.arith.linalg import SparseOp
from twyang.arith.ratfunc import U_FUNC, RatFunc
from twyang.arith.rational import format_rational, sample_points
from twyang.combinatorics.patterns import lambda0
from twyang.enums.base import HwMethod
from twyang.exceptions.common import NotEigenvector, NotOneDimensional, RelationCheckFailed
from twyang.reps.weights import Vector
from twyang.skew.module import SkewModule
from twyang.sklyanin.relations import resolve_points

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class YangianHW:
    """``(μ_{m+1}(u), ..., μ_n(u))``, relabelled ``1..n-m`` for the smaller algebra."""

    components: tuple[RatFunc, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[RatFunc]:
        return iter(self.components)

    def __getitem__(self, k: int) -> RatFunc:
        """The component ``μ_k`` for ``k = 1..n-m``."""
        return self.components[k - 1]

    def to_text(self) -> list[str]:
        return [f'mu_{k}(u) = {c}' for k, c in enumerate(self.components, start=1)]


def require_symplectic(sm: SkewModule) -> None:
    if not sm.is_symplectic:
        msg = 'Highest vectors of skew modules are identified in the symplectic case only.'
        raise ValueError(msg)


def raising_pairs(sm: SkewModule) -> list[tuple[int, int]]:
    indices = sm.outer.indices
    return [(a, b) for a in indices for b in indices if a < b]


def find_highest_vector(sm: SkewModule) -> Vector:  # noqa: C901
    """Coordinates of ``ζ_{Λ_0}`` in the basis of ``sm.space``.

    The vector is located as the ``w(Λ_0)``-weight vector killed by the Lie raisings
    ``F_ab`` (``a < b`` in ``A``) and then checked against ``ρ(s_ab(u))``, ``a < b``.
    """
    if sm.highest is not None:
        return sm.highest
    require_symplectic(sm)
    weight = lambda0(sm.lam, sm.mu).weight()
    rep = sm.rep
    one = SparseOp.identity(rep.dim, QQ.one)
    ops = [rep.gen(a, b) for a, b in raising_pairs(sm)]
    ops += [
        rep.cartan(k) - one.scale(QQ(w))
        for k, w in zip(range(sm.m + 1, sm.n + 1), weight, strict=True)
    ]
    found = sm.space.intersect_kernel(ops)
    if found.dim != 1:
        msg = f'The highest weight space of {sm!r} has dimension {found.dim}.'
        raise NotOneDimensional(msg, dimension=found.dim)
    coords = sm.space.coordinates(found.basis[0])
    xi = {k: c for k, c in enumerate(coords) if c}
    for u in resolve_points(sm.sampling, sm.family.weight):
        for a, b in raising_pairs(sm):
            image = sm.action(a, b, u).apply(xi)
            if image:
                witness = f'u={format_rational(u)}, s_({a},{b})'
                msg = 'ρ(s_ab(u)) does not annihilate the highest vector.'
                raise RelationCheckFailed(msg, witness=witness)
    log.debug('highest vector of %r: weight %s', sm, weight)
    sm.highest = xi
    return xi


def eigenvalue(image: dict[int, Any], xi: Vector, component: int) -> Any:
    """``c`` with ``image = c · xi``, or ``NotEigenvector``."""
    pivot = min(xi)
    value = image.get(pivot, 0) / xi[pivot]
    for k in set(image) | set(xi):
        if image.get(k, 0) - value * xi.get(k, QQ.zero):
            msg = f'The highest vector is not an eigenvector of s_aa for component {component}.'
            raise NotEigenvector(msg, component=component)
    return value


def _component_at(sm: SkewModule, xi: Vector, a: int, r: int, u: MPQ) -> MPQ:
    return eigenvalue(sm.action(a, a, u).apply(xi), xi, r)


def sampled_function(
    evaluate: Callable[[MPQ], MPQ],
    degree: int,
    extra: int,
) -> RatFunc:
    """Interpolate a rational function of degree at most ``degree`` from exact samples."""
    points = sample_points(2 * degree + 1 + extra)
    return interpolate([(u, evaluate(u)) for u in points], degree, degree)


def extract_hw(sm: SkewModule, method: HwMethod | None = None) -> YangianHW:
    """``μ_a(u)`` from ``ρ(s_aa(u)) ζ = μ_a(u) ζ`` for ``a = m+1..n``."""
    method = method or sm.hw_method
    xi = find_highest_vector(sm)
    components: list[RatFunc] = []
    for r in range(1, sm.n - sm.m + 1):
        a = sm.outer.label(r)
        if method is HwMethod.SYMBOLIC:
            image = sm.action(a, a, U_FUNC).apply(xi)
            value = RatFunc.coerce(eigenvalue(image, xi, r))
        else:
            at = partial(_component_at, sm, xi, a, r)
            value = sampled_function(at, sm.family.weight, sm.verify_samples)
        components.append(value)
        log.debug('mu_%d(u) = %s (%s)', r, value, method)
    return YangianHW(tuple(components))

