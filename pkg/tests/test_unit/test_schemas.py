import json

from sympy import QQ

from tests.factories.base import CheckResultFactory, RunReportFactory
from twyang.arith.ratfunc import RatFunc
from twyang.combinatorics.diagram import diagram, drinfeld_diagram
from twyang.combinatorics.patterns import lambda0
from twyang.schemas.base import (
    CheckResult,
    DiagramSchema,
    DrinfeldSchema,
    PatternSchema,
    RatFuncSchema,
    RunReport,
    dump_all,
)
from twyang.sklyanin.relations import CheckOutcome


def test_check_result_serializes_pass_alias() -> None:
    data = CheckResultFactory.build_json(passed=True, witness=None)
    assert data['pass'] is True
    assert 'passed' not in data
    assert 'witness' not in data
    assert set(data) == {'name', 'paper_ref', 'pass'}


def test_check_result_from_outcome() -> None:
    outcome = CheckOutcome('symmetry', 'symmetry relation', False, 'u=17/3', 3)
    result = CheckResult.calculate(outcome)
    assert result.to_json_data() == {
        'name': 'symmetry',
        'paper_ref': 'symmetry relation',
        'pass': False,
        'witness': 'u=17/3',
    }


def test_report_ok_follows_checks() -> None:
    assert RunReportFactory.build(checks=CheckResultFactory.batch(3, passed=True)).ok
    failing = [CheckResultFactory.build(passed=True), CheckResultFactory.build(passed=False)]
    assert not RunReportFactory.build(checks=failing).ok
    assert RunReportFactory.build(checks=[]).ok


def test_report_json_is_canonical() -> None:
    report = RunReport.calculate('patterns', {'mode': 'count'}, {'count': 2})
    text = report.to_json()
    assert json.loads(text) == {
        'checks': [],
        'command': 'patterns',
        'params': {'mode': 'count'},
        'results': {'count': 2},
    }
    assert text.index('"checks"') < text.index('"command"') < text.index('"params"')


def test_report_keeps_timing_when_given() -> None:
    report = RunReport.calculate('diagram', {}, {}, elapsed_ms=1.5)
    assert report.to_json_data()['elapsed_ms'] == 1.5


def test_drinfeld_schema() -> None:
    schema = DrinfeldSchema.calculate(drinfeld_diagram((-1,), ()), method='diagram')
    assert schema.to_json_data() == {
        'method': 'diagram',
        'polynomials': [{'monic': True, 'roots': ['-1/2', '3/2']}],
        'text': ['P_1 = (u+1/2)(u-3/2)'],
    }


def test_ratfunc_schema() -> None:
    f = RatFunc.linear(1) / RatFunc.linear(-1)
    assert RatFuncSchema.calculate(f).to_json_data() == {
        'numerator': {'monic': True, 'roots': ['1']},
        'denominator': {'monic': True, 'roots': ['-1']},
        'text': '(u - 1)/(u + 1)',
    }


def test_diagram_schema_marks_rays() -> None:
    rows = DiagramSchema.calculate(diagram((-4, -7))).to_json_data()['rows']
    assert rows[0] == {'row': -2, 'start': '7', 'stop': 'inf'}
    assert rows[-1] == {'row': 3, 'start': '-inf', 'stop': '-7'}
    shifted = DiagramSchema.calculate(diagram((-4, -7)), shift=1)
    assert [row.row for row in shifted.rows] == [-3, -2, -1, 0, 1, 2]


def test_pattern_schema() -> None:
    schema = PatternSchema.calculate(lambda0((-1, -1), (-1,)))
    assert schema.to_json_data() == {
        'rows': [[-1, -1], [-1]],
        'primed': [[-1, -1]],
        'weight': [-1],
    }


def test_dump_all() -> None:
    f = RatFunc.const(QQ(1, 2))
    assert dump_all([RatFuncSchema.calculate(f)])[0]['text'] == '1/2'
