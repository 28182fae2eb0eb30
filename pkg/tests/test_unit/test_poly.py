from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ

from twyang.arith.poly import (
    POLY_RING,
    U,
    _root_bound,
    coefficients,
    degree,
    factor_linear,
    format_factored,
    poly,
    poly_from_roots,
    poly_to_json,
    splits,
)
from twyang.arith.rational import rational
from twyang.exceptions import NonLinearFactor

small_roots = st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), max_size=5)


def test_poly_lists_coefficients_lowest_first() -> None:
    p = poly([1, 0, 2])
    assert p == 1 + 2 * U**2
    assert coefficients(p) == [1, 0, 2]
    assert degree(p) == 2


def test_zero_polynomial_has_degree_minus_one() -> None:
    assert degree(POLY_RING.zero) == -1
    assert coefficients(POLY_RING.zero) == []


def test_factor_linear_keeps_multiplicity_sorted() -> None:
    roots = [QQ(1, 2), QQ(-3, 2), QQ(1, 2)]
    assert factor_linear(poly_from_roots(roots)) == [QQ(-3, 2), QQ(1, 2), QQ(1, 2)]


def test_factor_linear_handles_non_half_integer_roots() -> None:
    roots = [QQ(1, 3), QQ(-7, 5)]
    assert factor_linear(poly_from_roots(roots)) == sorted(roots)


@pytest.mark.parametrize(
    ('roots', 'expected'),
    [([QQ(3), QQ(-3)], 7), ([QQ(1, 2)], 3), ([QQ(-41, 2), QQ(37, 2), QQ(3, 2)], 41)],
)
def test_root_bound(roots: list[object], expected: int) -> None:
    assert _root_bound(poly_from_roots(roots)) == expected


def test_factor_linear_finds_far_half_integer_roots() -> None:
    roots = [QQ(37, 2), QQ(-41, 2), QQ(3, 2)]
    assert factor_linear(poly_from_roots(roots)) == sorted(roots)


def test_factor_linear_rejects_irreducible_quadratic() -> None:
    with pytest.raises(NonLinearFactor, match='non-linear factor'):
        factor_linear(U**2 + 1)
    assert not splits(U**2 + 1)


def test_factor_linear_requires_monic() -> None:
    with pytest.raises(ValueError, match='monic'):
        factor_linear(2 * U - 1)


@pytest.mark.parametrize(
    ('p', 'expected'),
    [
        (poly_from_roots([QQ(3, 2)]), {'monic': True, 'roots': ['3/2']}),
        (POLY_RING.one, {'monic': True, 'roots': []}),
        (U**2 + 1, {'monic': True, 'coefficients': ['1', '0', '1']}),
        (2 * U + 1, {'monic': False, 'coefficients': ['1', '2']}),
    ],
)
def test_poly_to_json(p: object, expected: dict[str, object]) -> None:
    assert poly_to_json(p) == expected


@pytest.mark.parametrize(
    ('roots', 'expected'),
    [
        ([QQ(3, 2), QQ(-1, 2)], '(u-3/2)(u+1/2)'),
        ([], '1'),
        ([QQ(0)], 'u'),
    ],
)
def test_format_factored(roots: list[object], expected: str) -> None:
    assert format_factored(roots) == expected


@settings(max_examples=40, deadline=None)
@given(small_roots)
def test_factor_linear_recovers_roots(raw: list[Fraction]) -> None:
    roots = [rational(r) for r in raw]
    assert factor_linear(poly_from_roots(roots)) == sorted(roots)


@settings(max_examples=40, deadline=None)
@given(small_roots)
def test_root_bound_covers_every_root(raw: list[Fraction]) -> None:
    bound = _root_bound(poly_from_roots([rational(r) for r in raw]))
    assert all(abs(r) <= bound for r in raw)
