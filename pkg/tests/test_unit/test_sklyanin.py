import pytest
from sympy import QQ

from twyang.arith.linalg import SparseOp
from twyang.arith.ratfunc import RatFunc
from twyang.arith.rational import sample_points
from twyang.core.scheme import IndexScheme
from twyang.enums.base import Case, FamilyKind, MinorMethod
from twyang.exceptions import PoleError, ShapeMismatch
from twyang.reps.base import LieRep
from twyang.reps.builder import vector_rep
from twyang.sklyanin.config import FamilyConfig
from twyang.sklyanin.factory import build_family
from twyang.sklyanin.families import (
    CoRhoFamily,
    DualSylvesterFamily,
    EvalSMatrix,
    SharpFamily,
    SubFamily,
    VarpiFamily,
    chain_weight,
    evaluation_family,
    sdet,
    sklyanin_minor,
    sklyanin_minor_formula,
    varpi_image,
)
from twyang.sklyanin.mixins import formula_shape, reorder_sign
from twyang.sklyanin.operators import alpha
from twyang.sklyanin.relations import (
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
    check_corho,
    check_dual_sylvester,
    check_homcoin,
    check_nnentry,
    check_sharp_image,
    check_sylvester_twisted,
    check_sylvester_x,
    sylvester_alpha,
)

X = QQ(5, 2)
FAMILIES = ['sp2_family', 'sp4_family', 'o3_family']


def _assert_passed(outcome: CheckOutcome) -> None:
    assert outcome.passed, outcome.witness


def test_evaluation_entries_at_a_point(sp2_family: EvalSMatrix) -> None:
    diagonal = sp2_family.entry(1, 1, X)
    assert diagonal.to_rows() == [[QQ(1, 2), 0], [0, QQ(3, 2)]]
    assert sp2_family.entry(1, 1, X) is diagonal


def test_evaluation_entry_has_a_pole(sp2_family: EvalSMatrix) -> None:
    with pytest.raises(PoleError):
        sp2_family.entry(1, 1, QQ(1, 2))


def test_uncached_family_recomputes(sp2: IndexScheme) -> None:
    family = EvalSMatrix(vector_rep(sp2), config=FamilyConfig(cache_entries=False))
    assert family.entry(1, 1, X) is not family.entry(1, 1, X)
    assert family.entry(1, 1, X) == family.entry(1, 1, X)


@pytest.mark.parametrize(
    ('p', 'case', 'expected'),
    [(1, Case.SYMPLECTIC, QQ(3, 2)), (0, Case.SYMPLECTIC, 1), (3, Case.ORTHOGONAL, 1)],
)
def test_alpha(p: int, case: Case, expected: object) -> None:
    assert alpha(p, case)(X) == expected


def test_sylvester_alpha_is_trivial_for_orthogonal() -> None:
    assert sylvester_alpha(1, 3, Case.ORTHOGONAL, X) == 1
    assert sylvester_alpha(0, 3, Case.SYMPLECTIC, X) == 1


def test_chain_weight() -> None:
    assert chain_weight(1, 1) == 1
    assert chain_weight(3, 1) == 6


@pytest.mark.parametrize(
    ('upper', 'lower', 'expected'),
    [
        ((-1, -2), (1, 2), ((1, 2), (1, 2), 1)),
        ((-2, -1), (1, 2), ((1, 2), (1, 2), -1)),
        ((-1,), (2,), ((1,), (2,), 1)),
        ((1, 1), (1, 2), None),
        ((1, 2), (1, 2), None),
    ],
)
def test_formula_shape(
    upper: tuple[int, ...], lower: tuple[int, ...], expected: object
) -> None:
    assert formula_shape(upper, lower) == expected


def test_reorder_sign() -> None:
    assert reorder_sign((1, 2, 3), (2, 1, 3)) == -1
    assert reorder_sign((1, 2, 3), (2, 3, 1)) == 1


def test_minor_with_repeated_index_vanishes(sp4_family: EvalSMatrix) -> None:
    assert sp4_family.minor((1, 1), (1, 2), X).is_zero()


def test_minor_checks_its_shape(sp4_family: EvalSMatrix) -> None:
    with pytest.raises(ShapeMismatch, match='differ in length'):
        sp4_family.minor((1, 2), (1,), X)
    with pytest.raises(ShapeMismatch, match='Indices do not have the form'):
        sp4_family.formula_minor((1, 2), (1, 2), X)


def test_first_order_minor_is_the_entry(sp4_family: EvalSMatrix) -> None:
    assert sklyanin_minor(sp4_family, (1,), (2,), at=X) == sp4_family.entry(1, 2, X)


def test_symbolic_minor_specializes(sp2_family: EvalSMatrix) -> None:
    symbolic = sklyanin_minor(sp2_family, (-1, 1), (-1, 1))
    value = sdet(sp2_family, at=X)
    assert symbolic.map(lambda f: f(X)) == value
    assert isinstance(symbolic.entry(0, 0), RatFunc)


def test_minor_routes_agree_at_a_point(sp4_family: EvalSMatrix) -> None:
    chain = sklyanin_minor(sp4_family, (-1, -2), (1, 2), at=X, method=MinorMethod.CHAIN)
    assert sklyanin_minor_formula(sp4_family, (1, 2), 2, at=X) == chain


def test_family_config_forces_chain(sp4_vector: LieRep) -> None:
    family = EvalSMatrix(sp4_vector, config=FamilyConfig(minor_method=MinorMethod.CHAIN))
    assert family.resolve_method((-1, -2), (1, 2)) is MinorMethod.CHAIN


@pytest.mark.parametrize('name', FAMILIES)
def test_evaluation_families_satisfy_relations(
    request: pytest.FixtureRequest, name: str
) -> None:
    family = request.getfixturevalue(name)
    _assert_passed(check_symmetry(family))
    _assert_passed(check_quaternary(family))
    _assert_passed(check_comatrix(family))
    _assert_passed(check_sdet_symmetry(family))


@pytest.mark.parametrize('name', FAMILIES)
def test_sdet_is_central(request: pytest.FixtureRequest, name: str) -> None:
    _assert_passed(check_sdet_central(request.getfixturevalue(name)))


def test_centrality_pairs() -> None:
    assert centrality_pairs((-1, -2), (1, 2)) == [(-2, 1), (-2, 2), (-1, 1), (-1, 2)]
    assert centrality_pairs((1,), (1,)) == []


def test_minors_of_sp4(sp4_family: EvalSMatrix) -> None:
    _assert_passed(check_route_equivalence(sp4_family, (-1, -2), (1, 2)))
    _assert_passed(check_route_equivalence(sp4_family, (-2, 1), (-1, 2)))
    _assert_passed(check_auxiliary_expansion(sp4_family, (-1, -2), (1, 2)))
    _assert_passed(check_centrality(sp4_family, (-1, -2), (1, 2)))


def test_varpi_is_an_involution(sp2_family: EvalSMatrix) -> None:
    _assert_passed(check_varpi_involution(sp2_family))
    _assert_passed(check_sdetcirc(sp2_family))


def test_varpi_image_inverts_the_reflected_matrix(sp2_family: EvalSMatrix) -> None:
    varpi = varpi_image(sp2_family)
    indices = sp2_family.scheme.indices
    w = QQ(17, 3)
    for i in indices:
        for j in indices:
            total = SparseOp.zero(sp2_family.dim)
            for k in indices:
                total = total + sp2_family.entry(i, k, -w - 1) @ varpi.entry(k, j, w)
            dim = sp2_family.dim
            expected = SparseOp.identity(dim, QQ(1)) if i == j else SparseOp.zero(dim)
            assert total == expected


def test_evaluation_family_matches_constructor(sp4_vector: LieRep) -> None:
    family = evaluation_family(sp4_vector, FamilyConfig(cache_entries=False))
    reference = EvalSMatrix(sp4_vector)
    w = QQ(17, 3)
    assert family.entry(1, -2, w) == reference.entry(1, -2, w)
    assert family.entry(2, 2, w) == reference.entry(2, 2, w)


def test_sdetcirc_is_limited_to_small_sizes() -> None:
    family = EvalSMatrix(vector_rep(IndexScheme.standard(Case.SYMPLECTIC, 6)))
    with pytest.raises(ValueError, match='N <= 4'):
        check_sdetcirc(family)


def test_sylvester_theorem_on_sp4(sp4_family: EvalSMatrix) -> None:
    _assert_passed(check_sylvester_x(sp4_family, 1))
    _assert_passed(check_sylvester_twisted(sp4_family, 1))
    _assert_passed(check_nnentry(sp4_family, 1))
    _assert_passed(check_homcoin(sp4_family))


def test_sylvester_theorem_on_o3(o3_family: EvalSMatrix) -> None:
    _assert_passed(check_sylvester_x(o3_family, 0))
    _assert_passed(check_homcoin(o3_family))


def test_sylvester_images_on_sp4(sp4_family: EvalSMatrix, sp4_vector: LieRep) -> None:
    outcomes = [
        *check_sharp_image(sp4_family, sp4_vector, 1),
        *check_dual_sylvester(sp4_family, 1),
        *check_dual_sylvester(sp4_family, 1, alpha_factor=False),
        *check_corho(sp4_family, sp4_vector, 1),
    ]
    assert first_failure(outcomes) is None
    assert [o.name for o in outcomes][:2] == ['sharp m=1 symmetry', 'sharp m=1 quaternary']


def test_first_failure_picks_earliest() -> None:
    good = CheckOutcome('a', 'x', passed=True)
    bad = CheckOutcome('b', 'y', passed=False, witness='w')
    assert first_failure([good, bad, bad]) is bad
    assert first_failure([good]) is None


def test_build_family_dispatch(sp4_vector: LieRep) -> None:
    base = build_family(sp4_vector)
    assert isinstance(base, EvalSMatrix)
    assert isinstance(build_family(base, kind=FamilyKind.VARPI), VarpiFamily)
    sharp = build_family(base, kind=FamilyKind.SHARP, m=1, alpha_factor=False)
    assert isinstance(sharp, SharpFamily)
    sub = build_family(base, kind=FamilyKind.SUB, m=1)
    assert isinstance(sub, SubFamily)
    assert sub.scheme.indices == (-1, 1)
    assert isinstance(build_family(base, kind=FamilyKind.DUAL, m=1), DualSylvesterFamily)
    assert isinstance(build_family(base, kind=FamilyKind.CORHO, m=0), CoRhoFamily)


def test_build_family_errors(sp4_family: EvalSMatrix) -> None:
    with pytest.raises(TypeError, match='built from a module'):
        build_family(sp4_family)
    with pytest.raises(ValueError, match='needs the block size'):
        build_family(sp4_family, kind=FamilyKind.SHARP)


def test_block_size_ranges(sp4_family: EvalSMatrix, o3_family: EvalSMatrix) -> None:
    with pytest.raises(ValueError, match='m must lie'):
        SharpFamily(sp4_family, 2)
    with pytest.raises(ValueError, match='m must lie'):
        DualSylvesterFamily(sp4_family, 0)
    with pytest.raises(ValueError, match='symplectic case only'):
        CoRhoFamily(o3_family, 0)


def test_resolve_points() -> None:
    assert resolve_points(None, 4) == sample_points(5)
    assert resolve_points(Sampling(floor=8, start=1), 4) == sample_points(8, 1)
    assert resolve_points(Sampling(floor=2), 4) == sample_points(5)
    assert resolve_points([X], 99) == [X]


def test_default_points_follow_the_degree_bound(sp4_family: EvalSMatrix) -> None:
    assert sdet_degree(sp4_family) == 10
    assert check_sylvester_twisted(sp4_family, 1).samples == 31
    assert check_sdet_symmetry(sp4_family).samples == 23
