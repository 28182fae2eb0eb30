import pytest
from sympy import QQ

from twyang.arith.poly import U
from twyang.arith.ratfunc import U_FUNC, RatFunc
from twyang.combinatorics.diagram import DrinfeldData, drinfeld_diagram
from twyang.combinatorics.patterns import count_patterns
from twyang.core.scheme import IndexScheme
from twyang.enums.base import Case, DrinfeldMethod, HwMethod
from twyang.exceptions import EmptySkewSpace, InvalidIndex, UnpairableRoots
from twyang.skew.checks import (
    check_closed_form,
    check_drinfeld_routes,
    check_irreducible,
    check_mbr,
    check_restriction,
    check_sdet_eigen,
    check_sklmu,
    commutant_dimension,
    route_outcomes,
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
from twyang.skew.drinfeld import drinfeld_by, drinfeld_from_hw, solve_ratio
from twyang.skew.highest import YangianHW, extract_hw, find_highest_vector
from twyang.skew.module import SkewModule, build_skew

ADJACENT = ((-1, -1), (-1,))


def _ratio(top: object, bottom: object) -> RatFunc:
    """``(u + top) / (u + bottom)``."""
    return (U_FUNC + QQ.convert(top)) / (U_FUNC + QQ.convert(bottom))


@pytest.fixture(scope='module')
def adjacent() -> SkewModule:
    return build_skew(*ADJACENT)


def test_nu_of_empty_weight_is_one() -> None:
    assert nu(()) == RatFunc.const(1)
    assert nu((0,)) == RatFunc.const(1)


def test_evaluation_highest_weight() -> None:
    hw = evaluation_highest_weight((-1, -2))
    assert hw.components == (_ratio(QQ(-3, 2), QQ(-1, 2)), _ratio(QQ(-5, 2), QQ(-1, 2)))
    assert hw[2] == hw.components[1]
    assert hw.to_text()[0].startswith('mu_1(u) = ')


@pytest.mark.parametrize('lam', [(-1,), (0, -2), (-1, -1, -3), (-2, -2)])
def test_closed_form_without_mu_is_the_evaluation_weight(lam: tuple[int, ...]) -> None:
    assert closed_highest_weight(lam, ()) == evaluation_highest_weight(lam)


@pytest.mark.parametrize('lam', [(-1,), (0,), (-1, -2), (0, -1, -3), (-3, -3, -3)])
def test_evaluation_drinfeld_matches_diagram_rule(lam: tuple[int, ...]) -> None:
    assert evaluation_drinfeld(lam) == drinfeld_diagram(lam, ())


def test_evaluation_drinfeld_of_vector_module() -> None:
    data = evaluation_drinfeld((-1,))
    assert data == DrinfeldData.from_roots([[QQ(-1, 2), QQ(3, 2)]])
    assert drinfeld_from_hw(evaluation_highest_weight((-1,))) == data


@pytest.mark.parametrize(
    ('lam', 'mu'),
    [((-1, -1), (-1,)), ((-1, -2), (0,)), ((-2, -3, -3), (-2, -3)), ((0, -4), (-1,))],
)
def test_two_product_formula_agrees_with_general(
    lam: tuple[int, ...], mu: tuple[int, ...]
) -> None:
    assert mbr_closed_form(lam, mu) == hw_closed_form(lam, mu, len(lam))


def test_closed_forms_check_their_arguments() -> None:
    with pytest.raises(ValueError, match='m = n - 1'):
        mbr_closed_form((-1, -1, -1), (-1,))
    with pytest.raises(InvalidIndex, match='outside'):
        hw_closed_form((-1, -1), (-1,), 1)
    with pytest.raises(ValueError, match='m < n'):
        hw_closed_form((-1,), (-1,), 1)


def test_solve_ratio_telescopes() -> None:
    assert sorted(solve_ratio(_ratio(2, 0))) == [-1, 0]
    assert solve_ratio(RatFunc.const(1)) == []


@pytest.mark.parametrize(
    ('ratio', 'match'),
    [
        (_ratio(0, 2), 'differ by'),
        (_ratio(1, 0) * 2, 'tend to 1'),
        (_ratio(QQ(1, 2), 0), 'pair up'),
        (RatFunc.from_parts(U**2 + 1, U**2), 'linear factors'),
    ],
)
def test_solve_ratio_rejects_unpairable_roots(ratio: RatFunc, match: str) -> None:
    with pytest.raises(UnpairableRoots, match=match):
        solve_ratio(ratio)


def test_drinfeld_from_empty_weight() -> None:
    assert drinfeld_from_hw(YangianHW(())) == DrinfeldData.from_roots([])


def test_drinfeld_by_needs_a_single_route() -> None:
    with pytest.raises(ValueError, match='single Drinfeld route'):
        drinfeld_by(*ADJACENT, DrinfeldMethod.ALL)


def test_build_skew_of_adjacent_weight(adjacent: SkewModule) -> None:
    assert adjacent.dim == 2 == count_patterns(*ADJACENT)
    assert adjacent.outer.indices == (-2, 2)
    assert repr(adjacent) == 'SkewModule(lam=(-1, -1), mu=(-1,), dim=2)'


def test_build_skew_errors() -> None:
    with pytest.raises(EmptySkewSpace, match='mu_1 >= lambda_2'):
        build_skew((-1, -1), (-2,))
    with pytest.raises(ValueError, match='m < n'):
        build_skew((-1,), (-1,))
    with pytest.raises(ValueError, match='rank'):
        build_skew((-1,), (), IndexScheme.standard(Case.SYMPLECTIC, 4))


def test_skew_config_overrides_defaults() -> None:
    sm = build_skew((-1,), (), config=SkewConfig(hw_method=HwMethod.SYMBOLIC, verify_samples=2))
    assert sm.hw_method is HwMethod.SYMBOLIC
    assert sm.verify_samples == 2
    assert sm.irreducibility_batch == SkewModule.irreducibility_batch


@pytest.mark.parametrize('method', list(HwMethod))
def test_extracted_weight_matches_closed_form(adjacent: SkewModule, method: HwMethod) -> None:
    assert extract_hw(adjacent, method) == closed_highest_weight(*ADJACENT)


def test_highest_vector_is_cached(adjacent: SkewModule) -> None:
    xi = find_highest_vector(adjacent)
    assert find_highest_vector(adjacent) is xi
    assert len(xi) >= 1


def test_evaluation_module_weight() -> None:
    sm = build_skew((-1, -2), ())
    assert extract_hw(sm) == evaluation_highest_weight((-1, -2))


def test_checks_on_adjacent_module(adjacent: SkewModule) -> None:
    hw = extract_hw(adjacent)
    outcomes = [
        check_closed_form(adjacent, hw),
        check_mbr(adjacent, hw),
        check_sdet_eigen(adjacent, hw),
        check_sklmu(adjacent, hw),
        check_restriction(adjacent),
        *check_drinfeld_routes(adjacent),
    ]
    failed = [(o.name, o.witness) for o in outcomes if not o.passed]
    assert failed == []


@pytest.mark.parametrize('lam', [(0, -1), (0, -2), (-1, -2)])
def test_sdet_eigenvalue_on_evaluation_modules(lam: tuple[int, ...]) -> None:
    sm = build_skew(lam, ())
    outcome = check_sdet_eigen(sm, evaluation_highest_weight(lam), [QQ(17, 3), QQ(-7, 4)])
    assert outcome.passed, outcome.witness


def test_sdet_eigenvalue_at_a_point() -> None:
    sm = build_skew((0, -1), ())
    assert sm.family.sdet(QQ(17, 3)).scalar_value() == QQ(301, 325)


def test_adjacent_module_is_irreducible(adjacent: SkewModule) -> None:
    assert commutant_dimension(adjacent) == 1
    assert check_irreducible(adjacent)


def test_orthogonal_modules_report_commutant_only() -> None:
    sm = build_skew((-1,), (), IndexScheme.standard(Case.ORTHOGONAL, 3))
    assert commutant_dimension(sm) == 2
    with pytest.raises(ValueError, match='symplectic case only'):
        find_highest_vector(sm)


def test_route_outcomes() -> None:
    good = drinfeld_diagram(*ADJACENT)
    bad = DrinfeldData.from_roots([[QQ(1)]])
    single = route_outcomes({DrinfeldMethod.DIAGRAM: good})
    assert [o.name for o in single] == ['palindromy']
    mixed = route_outcomes({DrinfeldMethod.DIAGRAM: good, DrinfeldMethod.ORACLE: bad})
    assert [(o.name, o.passed) for o in mixed] == [
        ('drinfeld routes', False),
        ('palindromy', False),
    ]
    assert mixed[1].witness is not None
    assert mixed[1].witness.startswith('oracle: P_1 = ')
