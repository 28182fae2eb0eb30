"""Exact scalar tower: rationals, polynomials and rational functions in ``u``."""

from twyang.arith.interpolate import interpolate
from twyang.arith.linalg import (
    EchelonBasis,
    SparseOp,
    add_scaled,
    commutator,
    gauss_inverse,
    nullspace,
    rank,
    rref_rows,
    scale_vector,
)
from twyang.arith.poly import (
    POLY_RING,
    U,
    Poly,
    coefficients,
    degree,
    factor_linear,
    format_factored,
    poly,
    poly_from_roots,
    poly_to_json,
    splits,
)
from twyang.arith.ratfunc import U_FUNC, RatFunc, reciprocal
from twyang.arith.rational import (
    HALF,
    ONE,
    ZERO,
    Rational,
    format_rational,
    is_half_integer,
    is_integer,
    rational,
    sample_pairs,
    sample_points,
)

__all__ = [
    'HALF',
    'ONE',
    'POLY_RING',
    'U',
    'U_FUNC',
    'ZERO',
    'EchelonBasis',
    'Poly',
    'RatFunc',
    'Rational',
    'SparseOp',
    'add_scaled',
    'coefficients',
    'commutator',
    'degree',
    'factor_linear',
    'format_factored',
    'format_rational',
    'gauss_inverse',
    'interpolate',
    'is_half_integer',
    'is_integer',
    'nullspace',
    'poly',
    'poly_from_roots',
    'poly_to_json',
    'rank',
    'rational',
    'reciprocal',
    'rref_rows',
    'sample_pairs',
    'sample_points',
    'scale_vector',
    'splits',
]
