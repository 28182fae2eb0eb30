"""Concrete ``g_N``-modules and their exact subspaces."""

from twyang.reps.base import LieRep, basis_vector, trivial_rep
from twyang.reps.builder import (
    RepBuilder,
    TensorPower,
    extract_irrep,
    tensor_rep,
    vector_images,
    vector_rep,
)
from twyang.reps.config import DEFAULT_SIZE_LIMIT, SIZE_LIMIT_ENV, RepConfig, env_size_limit
from twyang.reps.weights import Subspace, skew_subspace, weight_space
from twyang.reps.weyl import positive_roots, weyl_dimension, weyl_vector

__all__ = [
    'DEFAULT_SIZE_LIMIT',
    'SIZE_LIMIT_ENV',
    'LieRep',
    'RepBuilder',
    'RepConfig',
    'Subspace',
    'TensorPower',
    'basis_vector',
    'env_size_limit',
    'extract_irrep',
    'positive_roots',
    'skew_subspace',
    'tensor_rep',
    'trivial_rep',
    'vector_images',
    'vector_rep',
    'weight_space',
    'weyl_dimension',
    'weyl_vector',
]
