"""Index conventions, permutations, tensor operators and the pair-rewriting map."""

from twyang.core.perms import Perm, all_perms, omega, omega_quotient_bijective, omega_table
from twyang.core.scheme import IndexScheme, sign, theta, transpose_t
from twyang.core.tensor import (
    TensorKey,
    TensorOp,
    TensorVector,
    antisymmetrized_component,
    antisymmetrizer,
    build_p,
    build_q,
    build_r,
    build_rt,
    flip_slots,
    perm_op,
    q_images,
    q_slots,
    r_slots,
    rt_slots,
    tensor_add,
    tensor_combine,
)

__all__ = [
    'IndexScheme',
    'Perm',
    'TensorKey',
    'TensorOp',
    'TensorVector',
    'all_perms',
    'antisymmetrized_component',
    'antisymmetrizer',
    'build_p',
    'build_q',
    'build_r',
    'build_rt',
    'flip_slots',
    'omega',
    'omega_quotient_bijective',
    'omega_table',
    'perm_op',
    'q_images',
    'q_slots',
    'r_slots',
    'rt_slots',
    'sign',
    'tensor_add',
    'tensor_combine',
    'theta',
    'transpose_t',
]
