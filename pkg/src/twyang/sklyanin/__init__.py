"""Operator families ``S(u)`` on modules, their minors and the relation checkers."""

from twyang.sklyanin.base import BaseFamily
from twyang.sklyanin.config import FamilyConfig
from twyang.sklyanin.factory import build_family
from twyang.sklyanin.families import (
    CoRhoFamily,
    DualSylvesterFamily,
    EvalSMatrix,
    ScaledFamily,
    SharpFamily,
    SubFamily,
    VarpiFamily,
    auxiliary_minor,
    chain_weight,
    comatrix_entry,
    evaluation_family,
    sdet,
    sklyanin_minor,
    sklyanin_minor_formula,
    sylvester_sharp,
    varpi_image,
)
from twyang.sklyanin.mixins import ComatrixMixin, MinorsMixin, formula_shape, reorder_sign
from twyang.sklyanin.operators import FamilyProtocol, MinorsProtocol, alpha, scaled
from twyang.sklyanin.relations import (
    SDETCIRC_MAX_N,
    SDETCIRC_MAX_SIZE,
    CheckOutcome,
    Sampling,
    centrality_pairs,
    check_auxiliary_expansion,
    check_centrality,
    check_comatrix,
    check_quaternary,
    check_route_equivalence,
    check_sdet_central,
    check_sdet_symmetry,
    check_sdetcirc,
    check_symmetry,
    check_varpi_involution,
    first_failure,
    resolve_points,
    sdet_degree,
)
from twyang.sklyanin.sylvester import (
    check_commutes_with,
    check_corho,
    check_dual_sylvester,
    check_homcoin,
    check_nnentry,
    check_sharp_image,
    check_sylvester_twisted,
    check_sylvester_x,
    sylvester_alpha,
)

__all__ = [
    'SDETCIRC_MAX_N',
    'SDETCIRC_MAX_SIZE',
    'BaseFamily',
    'CheckOutcome',
    'CoRhoFamily',
    'ComatrixMixin',
    'DualSylvesterFamily',
    'EvalSMatrix',
    'FamilyConfig',
    'FamilyProtocol',
    'MinorsMixin',
    'MinorsProtocol',
    'Sampling',
    'ScaledFamily',
    'SharpFamily',
    'SubFamily',
    'VarpiFamily',
    'alpha',
    'auxiliary_minor',
    'build_family',
    'centrality_pairs',
    'chain_weight',
    'check_auxiliary_expansion',
    'check_centrality',
    'check_comatrix',
    'check_commutes_with',
    'check_corho',
    'check_dual_sylvester',
    'check_homcoin',
    'check_nnentry',
    'check_quaternary',
    'check_route_equivalence',
    'check_sdet_central',
    'check_sdet_symmetry',
    'check_sdetcirc',
    'check_sharp_image',
    'check_sylvester_twisted',
    'check_sylvester_x',
    'check_symmetry',
    'check_varpi_involution',
    'comatrix_entry',
    'evaluation_family',
    'first_failure',
    'formula_shape',
    'reorder_sign',
    'resolve_points',
    'scaled',
    'sdet',
    'sdet_degree',
    'sklyanin_minor',
    'sklyanin_minor_formula',
    'sylvester_alpha',
    'sylvester_sharp',
    'varpi_image',
]
