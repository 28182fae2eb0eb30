import pytest
from sympy import QQ

from twyang.enums.base import Case
from twyang.utils.validation import (
    as_highest_weight,
    check_highest_weight,
    check_symplectic_weight,
    from_partition,
    parse_weight,
)


@pytest.mark.parametrize(
    ('text', 'expected'),
    [('-2,-8,-10', (-2, -8, -10)), ('', ()), ('  ', ()), (' -1 , -3 ', (-1, -3))],
)
def test_parse_weight(text: str, expected: tuple[int, ...]) -> None:
    assert parse_weight(text) == expected


def test_parse_weight_rejects_non_integers() -> None:
    with pytest.raises(ValueError, match='comma-separated'):
        parse_weight('-1,x')


def test_from_partition_reverses_and_negates() -> None:
    assert from_partition((3, 1, 0)) == (0, -1, -3)
    assert from_partition(()) == ()


@pytest.mark.parametrize('parts', [(1, 2), (2, -1)])
def test_from_partition_rejects_non_partitions(parts: tuple[int, ...]) -> None:
    with pytest.raises(ValueError, match='partition'):
        from_partition(parts)


@pytest.mark.parametrize(
    ('weight', 'match'),
    [((0, 1), 'non-positive'), ((-2, -1), 'weakly decreasing'), ((QQ(-1, 2),), 'integers')],
)
def test_check_symplectic_weight_errors(weight: tuple[object, ...], match: str) -> None:
    with pytest.raises(ValueError, match=match):
        check_symplectic_weight(weight)  # type: ignore[arg-type]


def test_check_symplectic_weight_accepts_valid_weights() -> None:
    check_symplectic_weight(())
    check_symplectic_weight((0, 0, -3))


@pytest.mark.parametrize(
    ('weight', 'case', 'size'),
    [
        (('-1', '-2'), Case.SYMPLECTIC, 4),
        (('-1/2',), Case.ORTHOGONAL, 3),
        (('1',), Case.ORTHOGONAL, 2),
        (('1', '-1'), Case.ORTHOGONAL, 4),
        ((), Case.SYMPLECTIC, 0),
    ],
)
def test_check_highest_weight_accepts(weight: tuple[str, ...], case: Case, size: int) -> None:
    check_highest_weight(as_highest_weight(weight), case, size)


@pytest.mark.parametrize(
    ('weight', 'case', 'size', 'match'),
    [
        (('-1',), Case.SYMPLECTIC, 4, 'has 2 entries'),
        (('-2', '-1'), Case.SYMPLECTIC, 4, 'non-negative integers'),
        (('-1/2', '-1'), Case.ORTHOGONAL, 4, 'non-negative integers'),
        (('-1/2',), Case.SYMPLECTIC, 2, 'dominant'),
        (('1',), Case.ORTHOGONAL, 3, 'dominant'),
        (('1', '0'), Case.ORTHOGONAL, 4, 'dominant'),
    ],
)
def test_check_highest_weight_rejects(
    weight: tuple[str, ...], case: Case, size: int, match: str
) -> None:
    with pytest.raises(ValueError, match=match):
        check_highest_weight(as_highest_weight(weight), case, size)


def test_as_highest_weight_keeps_rationals() -> None:
    assert as_highest_weight((QQ(1, 2), '-3', 0)) == (QQ(1, 2), QQ(-3), QQ(0))
