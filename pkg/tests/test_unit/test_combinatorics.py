import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import QQ

from twyang import types
from twyang.combinatorics.diagram import (
    DrinfeldData,
    content,
    diagram,
    drinfeld_diagram,
    intersect_shifted,
)
from twyang.combinatorics.patterns import (
    TrapPattern,
    count_patterns,
    enumerate_patterns,
    extended_entry,
    lambda0,
    maximal_weights,
    mid,
    nonempty_violation,
    pattern_weight,
    weight_precedes,
)
from twyang.combinatorics.render import render_diagram, render_pattern
from twyang.exceptions import EmptySkewSpace, InfiniteIntersection

EXAMPLE_LAMBDA = (-2, -8, -10, -13)
EXAMPLE_MU = (-4, -7)
EXPECTED_P1 = sorted(
    QQ(r, 2) for r in (25, 23, 17, 15, 13, 5, 3, -1, -3, -11, -13, -15, -21, -23)
)
EXPECTED_P2 = sorted(QQ(r, 2) for r in (31, 29, 27, 9, 7, -19))

weights = st.lists(st.integers(min_value=0, max_value=6), max_size=4).map(
    lambda parts: tuple(-p for p in sorted(parts))
)


def test_diagram_rows_of_figure_weight() -> None:
    diag = diagram((-4, -7))
    assert diag.rows == {
        -2: (7, math.inf),
        -1: (4, 7),
        0: (0, 4),
        1: (-4, 0),
        2: (-7, -4),
        3: (-math.inf, -7),
    }
    assert (1, -1) in diag
    assert (1, 0) not in diag


def test_empty_weight_has_two_rays() -> None:
    assert diagram(()).rows == {0: (0, math.inf), 1: (-math.inf, 0)}


def test_diagram_rejects_invalid_weight() -> None:
    with pytest.raises(ValueError, match='non-positive'):
        diagram((1,))
    with pytest.raises(ValueError, match='weakly decreasing'):
        diagram((-2, -1))


@given(weights, st.integers(-12, 12), st.integers(-20, 20))
def test_diagram_is_centrally_symmetric(weight: tuple[int, ...], i: int, j: int) -> None:
    diag = diagram(weight)
    assert ((i, j) in diag) == ((1 - i, -1 - j) in diag)


def test_content() -> None:
    assert content((0, 0)) == 0
    assert content((3, -10)) == -13


def test_intersection_cells_of_worked_example() -> None:
    lam, mu = diagram(EXAMPLE_LAMBDA), diagram(EXAMPLE_MU)
    first = intersect_shifted(mu, lam, 1)
    second = intersect_shifted(mu, lam, 2)
    assert len(first) == 14
    assert {(3, -10), (3, -9), (-2, 9)} <= set(first)
    assert len(second) == 6
    assert {(3, -13), (3, -12), (3, -11), (-2, 7)} <= set(second)


def test_intersection_outside_range_is_infinite() -> None:
    with pytest.raises(InfiniteIntersection, match='infinite'):
        intersect_shifted(diagram(()), diagram((-1,)), 2)


def test_drinfeld_diagram_of_worked_example() -> None:
    data = drinfeld_diagram(EXAMPLE_LAMBDA, EXAMPLE_MU)
    assert data == DrinfeldData.from_roots([EXPECTED_P1, EXPECTED_P2])
    assert data.first_is_palindromic()


@pytest.mark.parametrize(
    ('lam', 'expected'),
    [
        ((-1,), [[QQ(-1, 2), QQ(3, 2)]]),
        ((0,), [[]]),
        ((-1, -2), [[QQ(-1, 2), QQ(3, 2)], [QQ(5, 2)]]),
    ],
)
def test_drinfeld_diagram_without_mu(lam: tuple[int, ...], expected: list[list[object]]) -> None:
    assert drinfeld_diagram(lam, ()) == DrinfeldData.from_roots(expected)


def test_drinfeld_diagram_needs_smaller_mu() -> None:
    with pytest.raises(ValueError, match='m < n'):
        drinfeld_diagram((-1,), (-1,))


def test_drinfeld_data_text() -> None:
    data = DrinfeldData.from_roots([[QQ(3, 2), QQ(-1, 2)], []])
    assert data.to_text() == ['P_1 = (u+1/2)(u-3/2)', 'P_2 = 1']
    assert len(data) == 2
    assert not DrinfeldData.from_roots([[QQ(1)]]).first_is_palindromic()


def test_mid_and_extended_entries() -> None:
    assert mid(1, 3, 2) == 2
    assert mid(-math.inf, 3, 1) == 1
    assert extended_entry((-1, -2), 0) == 0
    assert extended_entry((-1, -2), 2) == -2
    assert extended_entry((-1, -2), 3) == -math.inf


def test_patterns_of_adjacent_weight() -> None:
    patterns = enumerate_patterns((-1, -1), (-1,))
    assert [p.primed for p in patterns] == [((-1, -1),), ((0, -1),)]
    assert all(p.is_valid() for p in patterns)
    assert [pattern_weight(p) for p in patterns] == [(-1,), (1,)]
    assert count_patterns((-1, -1), (-1,)) == 2


def test_lambda0_has_the_maximal_weight() -> None:
    pattern = lambda0((-1, -1), (-1,))
    assert pattern == TrapPattern(((-1, -1), (-1,)), ((-1, -1),))
    patterns = enumerate_patterns((-1, -1), (-1,))
    assert pattern in patterns
    assert maximal_weights(patterns) == [pattern.weight()]


def test_lambda0_of_worked_example_is_a_pattern() -> None:
    pattern = lambda0(EXAMPLE_LAMBDA, EXAMPLE_MU)
    assert pattern.is_valid()
    assert pattern.top == EXAMPLE_LAMBDA
    assert pattern.bottom == EXAMPLE_MU


@pytest.mark.parametrize(
    ('lam', 'mu'),
    [((-1, -2), (-1,)), ((-1, -1, -2), (-1,)), ((-2, -3), ()), ((-1, -2, -2), (-1, -2))],
)
def test_lambda0_is_the_unique_maximum(lam: tuple[int, ...], mu: tuple[int, ...]) -> None:
    patterns = enumerate_patterns(lam, mu)
    assert len(patterns) == count_patterns(lam, mu)
    top = lambda0(lam, mu)
    assert top in patterns
    assert maximal_weights(patterns) == [top.weight()]


def test_empty_skew_space() -> None:
    assert nonempty_violation((-1, -1), (-2,)) == 'mu_1 >= lambda_2 (-2 < -1)'
    assert nonempty_violation((-1, -1), (0,)) is None
    assert count_patterns((-1, -1), (-2,)) == 0
    with pytest.raises(EmptySkewSpace):
        lambda0((-1, -1), (-2,))


def test_patterns_need_m_below_n() -> None:
    with pytest.raises(ValueError, match='m < n'):
        count_patterns((-1,), (-1,))


def test_weight_precedes() -> None:
    assert weight_precedes((1,), (-1,))
    assert not weight_precedes((-1,), (1,))
    assert not weight_precedes((0,), (-1,))
    assert weight_precedes((0, 0), (1, -1))


def test_render_diagram_marks_rays_and_origin() -> None:
    lines = render_diagram(diagram((-4, -7)), margin=1).splitlines()
    assert len(lines) == 7
    assert lines[1].startswith('  -2 ') and lines[1].endswith('>')
    assert lines[-1].startswith('   3 <')
    assert lines[0].count('|') == 1
    assert lines[4].count('#') == 4


def test_render_pattern() -> None:
    text = render_pattern(lambda0((-1, -1), (-1,)))
    assert text.splitlines() == ['    -1  -1', '  -1  -1', '    -1']


def test_types_module_has_a_docstring() -> None:
    assert types.__doc__ == 'Shared type aliases.'
