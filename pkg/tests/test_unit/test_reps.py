import pytest
from sympy import QQ

from twyang.arith.linalg import SparseOp, commutator
from twyang.core.scheme import IndexScheme
from twyang.enums.base import Case
from twyang.exceptions import InvalidIndex, ShapeMismatch, SizeLimitExceeded, SubspaceNotInvariant
from twyang.reps.base import LieRep, basis_vector, trivial_rep
from twyang.reps.builder import RepBuilder, extract_irrep, tensor_rep, vector_rep
from twyang.reps.config import DEFAULT_SIZE_LIMIT, SIZE_LIMIT_ENV, RepConfig, env_size_limit
from twyang.reps.weights import Subspace, skew_subspace, weight_space
from twyang.reps.weyl import positive_roots, weyl_dimension, weyl_vector

# positions of e_{-2}, e_{-1}, e_1, e_2 in the sp_4 vector representation
E_M2, E_M1, E_1, E_2 = range(4)


def test_vector_rep_eigenvalue_on_lowest_vector(sp2: IndexScheme) -> None:
    rep = vector_rep(sp2)
    assert rep.dim == 2
    assert rep.apply(1, 1, basis_vector(0)) == {0: QQ(-1)}


def test_vector_rep_long_root_operators(sp2: IndexScheme) -> None:
    rep = vector_rep(sp2)
    lowering, raising = rep.gen(-1, 1), rep.gen(1, -1)
    assert lowering.to_rows() == [[0, 2], [0, 0]]
    assert raising.to_rows() == [[0, 0], [2, 0]]
    assert commutator(lowering, raising).to_rows() == [[4, 0], [0, -4]]
    assert commutator(lowering, raising) == rep.gen(-1, -1).scale(4)


def test_vector_rep_raising_operator(sp4_vector: LieRep) -> None:
    assert sp4_vector.apply(1, 2, basis_vector(E_2)) == {E_1: 1}
    assert sp4_vector.apply(1, 2, basis_vector(E_M2)) == {}


@pytest.mark.parametrize(('case', 'size'), [(Case.SYMPLECTIC, 4), (Case.ORTHOGONAL, 3)])
def test_vector_rep_satisfies_relations(case: Case, size: int) -> None:
    rep = vector_rep(IndexScheme.standard(case, size))
    assert rep.symmetry_failure() is None
    assert rep.bracket_failure() is None


def test_broken_generator_is_reported(sp2: IndexScheme) -> None:
    rep = vector_rep(sp2)
    broken = rep.with_generator(1, 1, SparseOp.zero(2))
    assert broken.symmetry_failure() is not None


def test_cartan_needs_positive_index(sp2: IndexScheme) -> None:
    with pytest.raises(InvalidIndex, match='positive'):
        vector_rep(sp2).cartan(-1)


def test_tensor_square_dimension(sp2: IndexScheme) -> None:
    square = tensor_rep(vector_rep(sp2), 2)
    assert square.dim == 4
    assert square.bracket_failure() is None


def test_tensor_power_respects_size_limit(sp4_vector: LieRep) -> None:
    with pytest.raises(SizeLimitExceeded, match='exceed the limit'):
        tensor_rep(sp4_vector, 2, RepConfig(size_limit=10))


def test_tensor_power_must_be_positive(sp4_vector: LieRep) -> None:
    with pytest.raises(ValueError, match='at least 1'):
        tensor_rep(sp4_vector, 0)


@pytest.mark.parametrize(
    ('case', 'size', 'weight', 'expected'),
    [
        (Case.SYMPLECTIC, 2, (-1,), 2),
        (Case.SYMPLECTIC, 2, (-3,), 4),
        (Case.SYMPLECTIC, 4, (0, -1), 4),
        (Case.SYMPLECTIC, 4, (-1, -1), 5),
        (Case.SYMPLECTIC, 4, (0, -2), 10),
        (Case.ORTHOGONAL, 3, (-1,), 3),
        (Case.ORTHOGONAL, 3, (QQ(-1, 2),), 2),
        (Case.ORTHOGONAL, 5, (0, -1), 5),
        (Case.ORTHOGONAL, 4, (-1, -1), 3),
    ],
)
def test_weyl_dimension(case: Case, size: int, weight: tuple[object, ...], expected: int) -> None:
    assert weyl_dimension(weight, IndexScheme.standard(case, size)) == expected


def test_weyl_vector_and_root_count(sp4: IndexScheme, o3: IndexScheme) -> None:
    assert weyl_vector(sp4) == (2, 1)
    assert weyl_vector(o3) == (QQ(1, 2),)
    assert len(list(positive_roots(sp4))) == 4
    assert len(list(positive_roots(o3))) == 1


@pytest.mark.parametrize(
    ('case', 'size', 'weight'),
    [
        (Case.SYMPLECTIC, 2, (-2,)),
        (Case.SYMPLECTIC, 4, (-1, -1)),
        (Case.SYMPLECTIC, 4, (0, -2)),
        (Case.ORTHOGONAL, 3, (-2,)),
    ],
)
def test_irrep_dimension_matches_weyl(case: Case, size: int, weight: tuple[int, ...]) -> None:
    scheme = IndexScheme.standard(case, size)
    assert extract_irrep(weight, scheme).dim == weyl_dimension(weight, scheme)


def test_zero_weight_gives_trivial_module(sp4: IndexScheme) -> None:
    assert extract_irrep((0, 0), sp4) == trivial_rep(sp4)


def test_spin_weights_are_rejected(o3: IndexScheme) -> None:
    with pytest.raises(ValueError, match='spin'):
        extract_irrep((QQ(-1, 2),), o3)


def test_irrep_rejects_non_dominant_weight(sp4: IndexScheme) -> None:
    with pytest.raises(ValueError, match='non-negative integers'):
        extract_irrep((-1, 0), sp4)


def test_builder_defaults_come_from_environment(
    monkeypatch: pytest.MonkeyPatch, sp2: IndexScheme
) -> None:
    monkeypatch.setenv(SIZE_LIMIT_ENV, '123')
    assert RepBuilder(sp2).size_limit == 123
    assert RepBuilder(sp2, config=RepConfig(size_limit=7)).size_limit == 7


@pytest.mark.parametrize(('raw', 'match'), [('many', 'integer'), ('0', 'positive')])
def test_env_size_limit_rejects_bad_values(
    monkeypatch: pytest.MonkeyPatch, raw: str, match: str
) -> None:
    monkeypatch.setenv(SIZE_LIMIT_ENV, raw)
    with pytest.raises(ValueError, match=match):
        env_size_limit()


def test_env_size_limit_default(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(SIZE_LIMIT_ENV, raising=False)
    assert env_size_limit() == DEFAULT_SIZE_LIMIT


def test_weight_space_of_vector_rep(sp4_vector: LieRep) -> None:
    space = weight_space(sp4_vector, (1, 2), (0, 1))
    assert space.dim == 1
    assert space.contains(basis_vector(E_2))


def test_weight_space_needs_one_value_per_index(sp4_vector: LieRep) -> None:
    with pytest.raises(ShapeMismatch):
        weight_space(sp4_vector, (1, 2), (0,))
    with pytest.raises(ValueError, match='distinct'):
        weight_space(sp4_vector, (1, 1), (0, 0))


def test_skew_subspace_of_adjacent_module(sp4_adjacent: LieRep) -> None:
    assert skew_subspace(sp4_adjacent, (-1,), 1).dim == 2
    assert skew_subspace(sp4_adjacent, (0,), 1).dim == 1


def test_skew_subspace_checks_length(sp4_adjacent: LieRep) -> None:
    with pytest.raises(ShapeMismatch):
        skew_subspace(sp4_adjacent, (-1, -1), 1)


def test_restrict_detects_non_invariant_subspace(sp4_vector: LieRep) -> None:
    line = Subspace.span(sp4_vector, [basis_vector(E_2)])
    assert line.restrict(sp4_vector.cartan(2)).to_rows() == [[1]]
    with pytest.raises(SubspaceNotInvariant):
        line.restrict(sp4_vector.gen(1, 2))
