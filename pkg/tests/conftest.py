import pytest

from twyang.core.scheme import IndexScheme
from twyang.enums.base import Case
from twyang.reps.base import LieRep
from twyang.reps.builder import extract_irrep, vector_rep
from twyang.sklyanin.families import EvalSMatrix

DEFAULT_MAX_N = 3


def pytest_addoption(parser) -> None:  # type: ignore[no-untyped-def]
    parser.addoption(
        '--max-n',
        action='store',
        type=int,
        default=DEFAULT_MAX_N,
        help='largest rank covered by sweep tests',
    )


@pytest.fixture(scope='session')
def max_n(request) -> int:  # type: ignore[no-untyped-def]
    return int(request.config.getoption('--max-n'))


@pytest.fixture(scope='session')
def sp2() -> IndexScheme:
    return IndexScheme.standard(Case.SYMPLECTIC, 2)


@pytest.fixture(scope='session')
def sp4() -> IndexScheme:
    return IndexScheme.standard(Case.SYMPLECTIC, 4)


@pytest.fixture(scope='session')
def o3() -> IndexScheme:
    return IndexScheme.standard(Case.ORTHOGONAL, 3)


@pytest.fixture(scope='session')
def sp4_vector(sp4: IndexScheme) -> LieRep:
    return vector_rep(sp4)


@pytest.fixture(scope='session')
def sp4_adjacent(sp4: IndexScheme) -> LieRep:
    return extract_irrep((-1, -1), sp4)


@pytest.fixture
def sp2_family(sp2: IndexScheme) -> EvalSMatrix:
    return EvalSMatrix(vector_rep(sp2))


@pytest.fixture
def sp4_family(sp4_vector: LieRep) -> EvalSMatrix:
    return EvalSMatrix(sp4_vector)


@pytest.fixture
def o3_family(o3: IndexScheme) -> EvalSMatrix:
    return EvalSMatrix(vector_rep(o3))
