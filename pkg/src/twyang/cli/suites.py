"""Verification suites: each turns a parameter set into a list of check outcomes."""

import itertools
import logging
import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from sympy import QQ
from sympy.external.gmpy import MPQ

from twyang.arith.rational import sample_pairs
from twyang.combinatorics.diagram import drinfeld_diagram
from twyang.combinatorics.patterns import count_patterns, nonempty_violation
from twyang.core.perms import omega_quotient_bijective
from twyang.core.scheme import IndexScheme
from twyang.core.tensor import TensorOp, antisymmetrizer, build_q, build_r, build_rt
from twyang.enums.base import Case, Suite
from twyang.reps.base import LieRep
from twyang.reps.builder import extract_irrep, vector_rep
from twyang.skew.checks import (
    check_closed_form,
    check_drinfeld_routes,
    check_mbr,
    check_restriction,
    check_sdet_eigen,
    check_sklmu,
    commutant_dimension,
)
from twyang.skew.closed_form import evaluation_drinfeld
from twyang.skew.config import SkewConfig
from twyang.skew.highest import extract_hw
from twyang.skew.module import SkewModule, build_skew
from twyang.sklyanin.families import EvalSMatrix
from twyang.sklyanin.relations import (
    SDETCIRC_MAX_N,
    SDETCIRC_MAX_SIZE,
    CheckOutcome,
    Sampling,
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
    outcome_of,
)
from twyang.sklyanin.sylvester import (
    check_corho,
    check_dual_sylvester,
    check_homcoin,
    check_nnentry,
    check_sharp_image,
    check_sylvester_twisted,
    check_sylvester_x,
)

log = logging.getLogger(__name__)

MAX_MINOR_ORDER = 4
SKEW_RANKS = ((1, 0), (2, 0), (2, 1), (3, 2))
SKEW_WEIGHT_TOTAL = 3


@dataclass(slots=True)
class SuiteParams:
    case: Case = Case.SYMPLECTIC
    n: int = 1
    m: int | None = None
    odd: bool = True
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    max_n: int = 3
    samples: int = 3
    seed: int = 0
    skew_config: SkewConfig | None = None
    labels: list[str] = field(default_factory=list)

    @property
    def scheme(self) -> IndexScheme:
        odd = self.odd and self.case is Case.ORTHOGONAL
        return IndexScheme.of_rank(self.case, self.n, odd=odd)

    @property
    def block(self) -> int:
        """The Sylvester block size, ``n - 1`` unless given."""
        if self.m is not None:
            return self.m
        return max(self.n - 1, 0)

    @property
    def sampling(self) -> Sampling:
        """Degree-bound point counts, never fewer than ``samples``."""
        return Sampling(self.samples, self.seed)

    def pairs(self) -> list[tuple[MPQ, MPQ]]:
        return sample_pairs(self.samples, self.seed)


def evaluation_modules(params: SuiteParams) -> list[LieRep]:
    scheme = params.scheme
    if params.lam is not None:
        return [extract_irrep(params.lam, scheme)]
    modules = [vector_rep(scheme)]
    if scheme.is_symplectic and scheme.n == 2:  # noqa: PLR2004
        modules.append(extract_irrep((-1, -1), scheme))
    return modules


def _families(params: SuiteParams) -> Iterator[EvalSMatrix]:
    for rep in evaluation_modules(params):
        params.labels.append(f'{rep.scheme.case}_{rep.scheme.N} dim {rep.dim}')
        yield EvalSMatrix(rep)


def weights_up_to(length: int, total: int) -> Iterator[tuple[int, ...]]:
    """Non-positive weakly decreasing weights of the given length with ``Σ|λ_i| <= total``."""
    for parts in itertools.product(range(total + 1), repeat=length):
        if sum(parts) <= total and list(parts) == sorted(parts):
            yield tuple(-p for p in parts)


def skew_cases(params: SuiteParams) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The pairs ``(λ, μ)`` with a nonzero skew space, or the one pair given explicitly."""
    if params.lam is not None:
        yield params.lam, params.mu or ()
        return
    for n, m in SKEW_RANKS:
        if n > params.max_n:
            continue
        for lam in weights_up_to(n, SKEW_WEIGHT_TOTAL):
            for mu in weights_up_to(m, SKEW_WEIGHT_TOTAL):
                if nonempty_violation(lam, mu) is None:
                    yield lam, mu


def skew_modules(params: SuiteParams) -> Iterator[SkewModule]:
    """Symplectic sweeps; an explicit orthogonal ``λ`` is built over ``o_N`` instead."""
    for lam, mu in skew_cases(params):
        scheme = None
        if params.lam is not None and params.case is Case.ORTHOGONAL:
            scheme = IndexScheme.of_rank(Case.ORTHOGONAL, len(lam), odd=params.odd)
        sm = build_skew(lam, mu, scheme, config=params.skew_config)
        params.labels.append(repr(sm))
        yield sm


def run_quaternary(params: SuiteParams) -> list[CheckOutcome]:
    return [check_quaternary(family, params.pairs()) for family in _families(params)]


def run_symmetry(params: SuiteParams) -> list[CheckOutcome]:
    return [check_symmetry(family, params.sampling) for family in _families(params)]


def run_sylvester(params: SuiteParams) -> list[CheckOutcome]:
    m = params.block
    outcomes = []
    for family in _families(params):
        outcomes.append(check_sylvester_x(family, m, params.sampling))
        if family.scheme.is_symplectic:
            outcomes.append(check_sylvester_twisted(family, m, params.sampling))
        outcomes.append(check_nnentry(family, m, params.sampling))
        outcomes.extend(check_sharp_image(family, family.rep, m))
        if m == family.scheme.n - 1:
            outcomes.append(check_homcoin(family, params.sampling))
    return outcomes


def formula_shapes(scheme: IndexScheme) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Index lists ``(-a_1..-a_k; a_1..a_{k-1}, b)`` for ``k`` up to ``MAX_MINOR_ORDER``."""
    indices = scheme.indices
    for k in range(1, min(scheme.N, MAX_MINOR_ORDER) + 1):
        a = indices[:k]
        for b in indices:
            if b in a[:-1]:
                continue
            yield tuple(-x for x in a), (*a[:-1], b)


def run_minors(params: SuiteParams) -> list[CheckOutcome]:
    outcomes = []
    for family in _families(params):
        scheme = family.scheme
        for upper, lower in formula_shapes(scheme):
            outcomes.append(check_route_equivalence(family, upper, lower, params.sampling))
        top = scheme.indices[: min(scheme.N, MAX_MINOR_ORDER)]
        outcomes.append(check_auxiliary_expansion(family, top, top, params.sampling))
        outcomes.append(check_centrality(family, top, top, params.pairs()))
        outcomes.append(check_sdet_central(family, params.pairs()))
        outcomes.append(check_varpi_involution(family, params.sampling))
    return outcomes


OMEGA_POINT = QQ(17, 3)
TENSOR_SCHEMES = ((Case.SYMPLECTIC, 2), (Case.SYMPLECTIC, 4), (Case.ORTHOGONAL, 3))


def _tensor_outcome(
    name: str, anchor: str, lhs: TensorOp, rhs: TensorOp, scheme: IndexScheme
) -> CheckOutcome:
    witness = None if lhs == rhs else f'{scheme.case}_{scheme.N}'
    return outcome_of(name, anchor, witness, 0)


def tensor_identities(scheme: IndexScheme, x: MPQ = OMEGA_POINT) -> list[CheckOutcome]:
    """Identities of ``P``, ``Q``, ``R(x)``, ``R^t(x)`` and the antisymmetrizers ``A_k``."""
    size = scheme.N
    q = build_q(scheme)
    one = TensorOp.identity(scheme, 2)
    rt = build_rt(scheme, x) @ build_rt(scheme, size - x)
    r = build_r(scheme, x) @ build_r(scheme, -x)
    shrunk = one.scale(1 - 1 / (x * x))
    outcomes = [
        _tensor_outcome('Q squared', 'Q^2 = NQ', q @ q, q.scale(size), scheme),
        _tensor_outcome('R^t inverse', 'R^t(x) R^t(N - x) = 1', rt, one, scheme),
        _tensor_outcome('R unitarity', 'R(x) R(-x) = 1 - 1/x^2', r, shrunk, scheme),
    ]
    for k in range(1, min(size, 3) + 1):
        a_k = antisymmetrizer(k, scheme)
        square, expected = a_k @ a_k, a_k.scale(math.factorial(k))
        name = f'A_{k} projector'
        outcomes.append(_tensor_outcome(name, 'A_k^2 = k! A_k', square, expected, scheme))
    return outcomes


def run_omega(params: SuiteParams) -> list[CheckOutcome]:
    outcomes = []
    for size in range(2, params.max_n + 1):
        witness = None if omega_quotient_bijective(size) else f'N={size}'
        outcomes.append(outcome_of(f'omega N={size}', 'bijective quotient map', witness, 0))
    for case, size in TENSOR_SCHEMES:
        outcomes.extend(tensor_identities(IndexScheme.standard(case, size)))
    return outcomes


def run_skew(params: SuiteParams) -> list[CheckOutcome]:
    outcomes = []
    for sm in skew_modules(params):
        hw = extract_hw(sm)
        outcomes.append(check_closed_form(sm, hw))
        outcomes.extend(check_drinfeld_routes(sm))
        count = count_patterns(sm.lam, sm.mu)
        witness = None if count == sm.dim else f'{count} patterns, dimension {sm.dim}'
        outcomes.append(outcome_of('dimension', 'patterns index a basis', witness, 0))
        if sm.m == sm.n - 1:
            outcomes.append(check_mbr(sm, hw))
        if not sm.m:
            same = evaluation_drinfeld(sm.lam) == drinfeld_diagram(sm.lam, sm.mu)
            witness = None if same else f'λ={sm.lam}'
            outcomes.append(outcome_of('evaluation drinfeld', 'evaluation modules', witness, 0))
    return outcomes


def run_irreducible(params: SuiteParams) -> list[CheckOutcome]:
    outcomes = []
    for sm in skew_modules(params):
        if sm.dim < 2 and params.lam is None:  # noqa: PLR2004
            continue
        dimension = commutant_dimension(sm)
        if not sm.is_symplectic:
            name = f'commutant dimension {dimension}'
            outcomes.append(outcome_of(name, 'orthogonal commutant, recorded', None, 0))
            continue
        witness = None if dimension == 1 else f'{sm!r}: commutant dimension {dimension}'
        outcomes.append(outcome_of('irreducible', 'trivial commutant', witness, 0))
    return outcomes


def run_structural(params: SuiteParams) -> list[CheckOutcome]:
    outcomes = []
    for sm in skew_modules(params):
        hw = extract_hw(sm)
        points = params.sampling
        outcomes.append(check_comatrix(sm.family, points))
        if sm.outer.N <= SDETCIRC_MAX_N and sm.outer.N * sm.dim <= SDETCIRC_MAX_SIZE:
            outcomes.append(check_sdetcirc(sm.family, points))
        outcomes.append(check_sdet_symmetry(sm.family, points))
        outcomes.append(check_sdet_eigen(sm, hw, points))
        outcomes.append(check_sklmu(sm, hw, points))
        outcomes.append(check_restriction(sm))
    return outcomes


def run_dual(params: SuiteParams) -> list[CheckOutcome]:
    m = params.block
    if not 0 < m < params.n:
        witness = None if params.m is None else f'm={m} outside 1..{params.n - 1}'
        return [outcome_of('dual not applicable', f'needs 0 < m < n = {params.n}', witness, 0)]
    outcomes = []
    for family in _families(params):
        outcomes.extend(check_dual_sylvester(family, m))
        outcomes.extend(check_dual_sylvester(family, m, alpha_factor=False))
        if family.scheme.is_symplectic:
            outcomes.extend(check_corho(family, family.rep, m))
    return outcomes


SUITES: dict[Suite, Callable[[SuiteParams], list[CheckOutcome]]] = {
    Suite.QUATERNARY: run_quaternary,
    Suite.SYMMETRY: run_symmetry,
    Suite.SYLVESTER: run_sylvester,
    Suite.MINORS: run_minors,
    Suite.SKEW: run_skew,
    Suite.IRREDUCIBLE: run_irreducible,
    Suite.OMEGA: run_omega,
    Suite.STRUCTURAL: run_structural,
    Suite.DUAL: run_dual,
}


def run_suite(suite: Suite, params: SuiteParams) -> list[CheckOutcome]:
    log.info('running suite %s', suite)
    outcomes = SUITES[suite](params)
    log.info('suite %s: %d checks', suite, len(outcomes))
    return outcomes
