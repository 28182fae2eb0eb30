"""Command handlers: each builds a ``RunReport`` plus an optional human-readable rendering."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from twyang.cli.suites import SuiteParams, run_suite
from twyang.combinatorics.diagram import diagram
from twyang.combinatorics.patterns import (
    count_patterns,
    enumerate_patterns,
    lambda0,
    nonempty_violation,
)
from twyang.combinatorics.render import render_diagram, render_pattern
from twyang.enums.base import DrinfeldMethod, PatternMode, Suite
from twyang.exceptions.common import EmptySkewSpace
from twyang.schemas.base import DiagramSchema, DrinfeldSchema, PatternSchema, RunReport
from twyang.skew.checks import route_outcomes
from twyang.skew.drinfeld import ROUTES, drinfeld_routes
from twyang.sklyanin.relations import outcome_of
from twyang.utils.validation import check_symplectic_weight

log = logging.getLogger(__name__)


@dataclass(slots=True)
class CommandOutput:
    report: RunReport
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.report.ok

    def render(self, *, text: bool = False) -> str:
        if text:
            return '\n'.join(self.lines)
        return self.report.to_json()


def _check_skew_input(lam: Sequence[int], mu: Sequence[int]) -> None:
    check_symplectic_weight(lam)
    check_symplectic_weight(mu)
    violation = nonempty_violation(lam, mu)
    if violation is not None:
        msg = f'V({tuple(lam)})^+_{tuple(mu)} is zero: {violation} fails.'
        raise EmptySkewSpace(msg, inequality=violation)


def drinfeld_params(
    lam: Sequence[int], mu: Sequence[int], method: DrinfeldMethod
) -> dict[str, Any]:
    return {'case': 'sp', 'lambda': list(lam), 'mu': list(mu), 'method': str(method)}


def pattern_params(lam: Sequence[int], mu: Sequence[int], mode: PatternMode) -> dict[str, Any]:
    return {'lambda': list(lam), 'mu': list(mu), 'mode': str(mode)}


def diagram_params(lam: Sequence[int], shift: int) -> dict[str, Any]:
    return {'lambda': list(lam), 'shift': shift}


def verify_params(suite: Suite, params: SuiteParams) -> dict[str, Any]:
    """The ``params`` echo of a ``verify`` run; weights appear only when given."""
    echo: dict[str, Any] = {
        'suite': str(suite),
        'case': str(params.case),
        'n': params.n,
        'm': params.m,
        'max_n': params.max_n,
        'samples': params.samples,
        'seed': params.seed,
    }
    if params.lam is not None:
        echo['lambda'] = list(params.lam)
    if params.mu is not None:
        echo['mu'] = list(params.mu)
    return echo


def cmd_drinfeld(
    lam: Sequence[int],
    mu: Sequence[int],
    method: DrinfeldMethod = DrinfeldMethod.DIAGRAM,
) -> CommandOutput:
    """Drinfeld polynomials of ``V(λ)^+_μ`` by one route, or by all three with a verdict."""
    _check_skew_input(lam, mu)
    methods = ROUTES if method is DrinfeldMethod.ALL else (method,)
    routes = drinfeld_routes(lam, mu, methods=methods)
    results: dict[str, Any] = {
        str(m): DrinfeldSchema.calculate(data, str(m)).to_json_data() for m, data in routes.items()
    }
    params = drinfeld_params(lam, mu, method)
    report = RunReport.calculate('drinfeld', params, {'routes': results}, route_outcomes(routes))
    lines = []
    for m, data in routes.items():
        lines.append(f'[{m}]')
        lines.extend(data.to_text())
    lines.extend(_check_lines(report))
    return CommandOutput(report, lines)


def _check_lines(report: RunReport) -> list[str]:
    lines = []
    for check in report.checks:
        verdict = 'pass' if check.passed else 'FAIL'
        line = f'{verdict:<5} {check.name:<28} {check.paper_ref}'
        if check.witness:
            line += f'\n      {check.witness}'
        lines.append(line)
    return lines


def cmd_verify(suite: Suite, params: SuiteParams) -> CommandOutput:
    outcomes = run_suite(suite, params)
    echo = verify_params(suite, params)
    results = {'cases': list(params.labels), 'count': len(outcomes)}
    report = RunReport.calculate('verify', echo, results, outcomes)
    lines = [f'suite {suite}: {len(outcomes)} checks over {len(params.labels)} cases']
    lines.extend(_check_lines(report))
    return CommandOutput(report, lines)


def cmd_patterns(lam: Sequence[int], mu: Sequence[int], mode: PatternMode) -> CommandOutput:
    """Trapezium patterns between ``λ`` and ``μ``: their number, the full list, or ``Λ_0``."""
    _check_skew_input(lam, mu)
    params = pattern_params(lam, mu, mode)
    if mode is PatternMode.COUNT:
        count = count_patterns(lam, mu)
        report = RunReport.calculate('patterns', params, {'count': count})
        return CommandOutput(report, [str(count)])
    patterns = enumerate_patterns(lam, mu) if mode is PatternMode.ENUMERATE else [lambda0(lam, mu)]
    log.debug('patterns %s / %s: %d listed', tuple(lam), tuple(mu), len(patterns))
    results = {
        'count': len(patterns),
        'patterns': [PatternSchema.calculate(p).to_json_data() for p in patterns],
    }
    report = RunReport.calculate('patterns', params, results)
    lines = []
    for pattern in patterns:
        lines.append(render_pattern(pattern))
        lines.append('')
    return CommandOutput(report, lines[:-1])


def cmd_diagram(lam: Sequence[int], shift: int = 0, margin: int = 3) -> CommandOutput:
    diag = diagram(lam)
    params = diagram_params(lam, shift)
    results = DiagramSchema.calculate(diag, shift).to_json_data()
    report = RunReport.calculate('diagram', params, results)
    return CommandOutput(report, render_diagram(diag, shift, margin).splitlines())


def cmd_error(command: str, params: dict[str, Any], exc: Exception) -> CommandOutput:
    """A failed report carrying the exception message as the witness of an ``input`` check."""
    outcome = outcome_of('input', type(exc).__name__, str(exc), 0)
    report = RunReport.calculate(command, params, {}, [outcome])
    return CommandOutput(report, [f'error: {exc}'])
