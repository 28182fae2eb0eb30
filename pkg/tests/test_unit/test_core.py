import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import QQ

from twyang.arith.rational import rational
from twyang.core.perms import Perm, all_perms, omega, omega_quotient_bijective
from twyang.core.scheme import IndexScheme, transpose_t
from twyang.core.tensor import (
    TensorOp,
    antisymmetrizer,
    build_p,
    build_q,
    build_r,
    build_rt,
    perm_op,
)
from twyang.enums.base import Case
from twyang.exceptions import InvalidIndex, ShapeMismatch

X = QQ(17, 3)


@pytest.mark.parametrize(
    ('case', 'size', 'expected'),
    [
        (Case.SYMPLECTIC, 2, (-1, 1)),
        (Case.SYMPLECTIC, 4, (-2, -1, 1, 2)),
        (Case.ORTHOGONAL, 3, (-1, 0, 1)),
        (Case.ORTHOGONAL, 4, (-2, -1, 1, 2)),
    ],
)
def test_standard_index_sets(case: Case, size: int, expected: tuple[int, ...]) -> None:
    scheme = IndexScheme.standard(case, size)
    assert scheme.indices == expected
    assert scheme.N == size
    assert scheme.n == size // 2


def test_of_rank_selects_parity() -> None:
    assert IndexScheme.of_rank(Case.ORTHOGONAL, 1, odd=True).N == 3
    assert IndexScheme.of_rank(Case.SYMPLECTIC, 2).N == 4


@pytest.mark.parametrize(
    ('case', 'size', 'match'),
    [(Case.SYMPLECTIC, 3, 'even'), (Case.ORTHOGONAL, 0, 'positive')],
)
def test_standard_rejects_bad_sizes(case: Case, size: int, match: str) -> None:
    with pytest.raises(ValueError, match=match):
        IndexScheme.standard(case, size)


def test_symplectic_scheme_cannot_contain_zero() -> None:
    with pytest.raises(ValueError, match='cannot contain 0'):
        IndexScheme(Case.SYMPLECTIC, (-1, 0, 1))


@pytest.mark.parametrize(
    ('case', 'pair', 'expected'),
    [
        (Case.ORTHOGONAL, (1, -1), 1),
        (Case.ORTHOGONAL, (-1, 0), 1),
        (Case.SYMPLECTIC, (1, -1), -1),
        (Case.SYMPLECTIC, (-2, -1), 1),
    ],
)
def test_theta(case: Case, pair: tuple[int, int], expected: int) -> None:
    scheme = IndexScheme.standard(case, 4 if case is Case.SYMPLECTIC else 3)
    assert scheme.theta(*pair) == expected


def test_theta_rejects_foreign_index(sp2: IndexScheme) -> None:
    with pytest.raises(InvalidIndex, match='outside'):
        sp2.theta(2, 1)


def test_blocks_keep_their_labels(sp4: IndexScheme) -> None:
    assert sp4.inner(1).indices == (-1, 1)
    outer = sp4.outer(1)
    assert outer.indices == (-2, 2)
    assert outer.label(1) == 2
    assert outer.canonical(-2) == -1


def test_transpose_moves_symplectic_entry(sp2: IndexScheme) -> None:
    assert transpose_t({(1, 1): QQ(1)}, sp2) == {(-1, -1): 1}
    assert transpose_t({(1, -1): QQ(1)}, sp2) == {(1, -1): -1}


def test_transpose_of_identity(sp4: IndexScheme) -> None:
    identity = {(i, i): QQ(1) for i in sp4.indices}
    assert transpose_t(identity, sp4) == identity


@given(st.lists(st.fractions(max_denominator=9), min_size=9, max_size=9))
def test_transpose_is_an_involution(values: list[object]) -> None:
    scheme = IndexScheme.standard(Case.ORTHOGONAL, 3)
    matrix = {pair: rational(v) for pair, v in zip(scheme.pairs(), values, strict=True) if v}
    assert transpose_t(transpose_t(matrix, scheme), scheme) == matrix


def test_transpose_rejects_foreign_entries(sp2: IndexScheme) -> None:
    with pytest.raises(ShapeMismatch):
        transpose_t({(2, 1): QQ(1)}, sp2)


def test_perm_sign_and_inverse() -> None:
    p = Perm((1, 2, 3), (2, 3, 1))
    assert p.sign == 1
    assert Perm((1, 2, 3), (2, 1, 3)).sign == -1
    assert p.compose(p.inverse()) == Perm.identity((1, 2, 3))


def test_perm_rejects_non_rearrangement() -> None:
    with pytest.raises(ValueError, match='rearrangement'):
        Perm((1, 2), (1, 1))


def test_omega_on_two_elements_is_identity() -> None:
    for p in all_perms((1, 2)):
        assert omega(p) == Perm.identity((1, 2))


def test_omega_of_identity_on_three_elements() -> None:
    assert omega(Perm.identity((1, 2, 3))).images == (2, 1, 3)


@pytest.mark.parametrize('size', [3, 4, 5])
def test_omega_fixes_last_element(size: int) -> None:
    ground = tuple(range(1, size + 1))
    for p in all_perms(ground):
        assert omega(p).images[-1] == size


@pytest.mark.parametrize('size', [2, 3, 4, 5])
def test_omega_quotient_is_bijective(size: int) -> None:
    assert omega_quotient_bijective(size)


@pytest.mark.slow
def test_omega_quotient_is_bijective_on_six() -> None:
    assert omega_quotient_bijective(6)


SCHEMES = [(Case.SYMPLECTIC, 2), (Case.SYMPLECTIC, 4), (Case.ORTHOGONAL, 3)]


@pytest.mark.parametrize(('case', 'size'), SCHEMES)
def test_flip_and_q_relations(case: Case, size: int) -> None:
    scheme = IndexScheme.standard(case, size)
    p, q = build_p(scheme), build_q(scheme)
    one = TensorOp.identity(scheme, 2)
    assert p @ p == one
    assert q @ q == q.scale(size)
    assert build_rt(scheme, X) @ build_rt(scheme, size - X) == one
    assert build_r(scheme, X) @ build_r(scheme, -X) == one.scale(1 - 1 / (X * X))


def test_r_matrices_reject_zero(sp2: IndexScheme) -> None:
    with pytest.raises(ValueError, match='undefined'):
        build_rt(sp2, 0)
    with pytest.raises(ValueError, match='undefined'):
        build_r(sp2, 0)


def test_low_antisymmetrizers(sp2: IndexScheme) -> None:
    assert antisymmetrizer(1, sp2) == TensorOp.identity(sp2, 1)
    assert antisymmetrizer(2, sp2) == TensorOp.identity(sp2, 2) - build_p(sp2)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_antisymmetrizer_scales_like_a_projector(sp4: IndexScheme, k: int) -> None:
    a_k = antisymmetrizer(k, sp4)
    assert a_k @ a_k == a_k.scale(math.factorial(k))


def test_antisymmetrizer_absorbs_permutations(sp4: IndexScheme) -> None:
    a_3 = antisymmetrizer(3, sp4)
    for images in itertools.permutations(range(3)):
        sign = Perm((0, 1, 2), images).sign
        assert a_3 @ perm_op(sp4, images) == a_3.scale(sign)


def test_antisymmetrizer_order_is_bounded(sp2: IndexScheme) -> None:
    with pytest.raises(ValueError, match='order'):
        antisymmetrizer(3, sp2)
