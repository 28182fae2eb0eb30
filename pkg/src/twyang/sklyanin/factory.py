from twyang.core.scheme import IndexScheme
from twyang.enums.base import FamilyKind
from twyang.reps.base import LieRep
from twyang.sklyanin.base import BaseFamily
from twyang.sklyanin.config import FamilyConfig
from twyang.sklyanin.families import (
    CoRhoFamily,
    DualSylvesterFamily,
    EvalSMatrix,
    SharpFamily,
    SubFamily,
    VarpiFamily,
    sylvester_sharp,
)


def _require_m(kind: FamilyKind, m: int | None) -> int:
    if m is None:
        msg = f'A {kind} family needs the block size m.'
        raise ValueError(msg)
    return m


def build_family(  # noqa: C901
    source: LieRep | BaseFamily,
    *,
    kind: FamilyKind = FamilyKind.EVALUATION,
    m: int | None = None,
    alpha_factor: bool = True,
    scheme: IndexScheme | None = None,
    config: FamilyConfig | None = None,
) -> BaseFamily:
    """Create an operator family over a module or over an existing family.

    A ``LieRep`` source is first wrapped in its evaluation family. ``alpha_factor``
    selects the twisted version of the Sylvester and dual maps; without it they are
    families of the extended algebra.
    """
    if kind is FamilyKind.EVALUATION:
        if not isinstance(source, LieRep):
            msg = 'An evaluation family is built from a module.'
            raise TypeError(msg)
        return EvalSMatrix(source, config=config)

    base = EvalSMatrix(source, config=config) if isinstance(source, LieRep) else source
    if kind is FamilyKind.SHARP:
        m = _require_m(kind, m)
        if alpha_factor:
            return sylvester_sharp(base, m, config=config)
        return SharpFamily(base, m, config=config)
    if kind is FamilyKind.DUAL:
        return DualSylvesterFamily(
            base, _require_m(kind, m), alpha_factor=alpha_factor, config=config
        )
    if kind is FamilyKind.VARPI:
        return VarpiFamily(base, config=config)
    if kind is FamilyKind.SUB:
        if scheme is None:
            scheme = base.scheme.inner(_require_m(kind, m))
        return SubFamily(base, scheme, config=config)
    if kind is FamilyKind.CORHO:
        return CoRhoFamily(base, _require_m(kind, m), config=config)
    msg = f'Unknown family kind {kind}.'
    raise ValueError(msg)
