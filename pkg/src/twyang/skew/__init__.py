"""Skew representations of twisted Yangians and their highest weights."""

from twyang.skew.checks import (
    check_closed_form,
    check_drinfeld_routes,
    check_irreducible,
    check_mbr,
    check_restriction,
    check_sdet_eigen,
    check_sklmu,
    commutant_dimension,
    degree_one_part,
    route_outcomes,
    spanned_operators,
)
from twyang.skew.closed_form import (
    closed_highest_weight,
    evaluation_drinfeld,
    evaluation_highest_weight,
    hw_closed_form,
    mbr_closed_form,
    nu,
)
from twyang.skew.config import SkewConfig
from twyang.skew.drinfeld import (
    ROUTES,
    drinfeld_by,
    drinfeld_from_hw,
    drinfeld_routes,
    solve_ratio,
)
from twyang.skew.highest import YangianHW, extract_hw, find_highest_vector
from twyang.skew.module import SkewFamily, SkewModule, build_skew

__all__ = [
    'ROUTES',
    'SkewConfig',
    'SkewFamily',
    'SkewModule',
    'YangianHW',
    'build_skew',
    'check_closed_form',
    'check_drinfeld_routes',
    'check_irreducible',
    'check_mbr',
    'check_restriction',
    'check_sdet_eigen',
    'check_sklmu',
    'closed_highest_weight',
    'commutant_dimension',
    'degree_one_part',
    'drinfeld_by',
    'drinfeld_from_hw',
    'drinfeld_routes',
    'evaluation_drinfeld',
    'evaluation_highest_weight',
    'extract_hw',
    'find_highest_vector',
    'hw_closed_form',
    'mbr_closed_form',
    'nu',
    'route_outcomes',
    'solve_ratio',
    'spanned_operators',
]
