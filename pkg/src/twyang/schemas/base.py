import json
import math
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from twyang.arith.poly import Poly, poly_from_roots, poly_to_json
from twyang.arith.ratfunc import RatFunc
from twyang.combinatorics.diagram import Diagram, DrinfeldData
from twyang.combinatorics.patterns import TrapPattern
from twyang.sklyanin.relations import CheckOutcome
from twyang.types import ExtInt


class BaseReportSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    def to_json_data(self) -> dict[str, Any]:
        return self.model_dump(mode='json', by_alias=True, exclude_none=True)


class PolySchema(BaseReportSchema):
    """``{"monic", "roots"}`` for split polynomials, ``{"monic", "coefficients"}`` otherwise."""

    monic: bool
    roots: list[str] | None = None
    coefficients: list[str] | None = None

    @classmethod
    def calculate(cls, p: Poly) -> 'PolySchema':
        return cls.model_validate(poly_to_json(p))


class RatFuncSchema(BaseReportSchema):
    numerator: PolySchema
    denominator: PolySchema
    text: str

    @classmethod
    def calculate(cls, f: RatFunc) -> 'RatFuncSchema':
        return cls(
            numerator=PolySchema.calculate(f.num),
            denominator=PolySchema.calculate(f.den),
            text=str(f),
        )


class DrinfeldSchema(BaseReportSchema):
    method: str | None = None
    polynomials: list[PolySchema]
    text: list[str]

    @classmethod
    def calculate(cls, data: DrinfeldData, method: str | None = None) -> 'DrinfeldSchema':
        return cls(
            method=method,
            polynomials=[PolySchema.calculate(poly_from_roots(group)) for group in data.roots],
            text=data.to_text(),
        )


class PatternSchema(BaseReportSchema):
    rows: list[list[int]]
    primed: list[list[int]]
    weight: list[int]

    @classmethod
    def calculate(cls, pattern: TrapPattern) -> 'PatternSchema':
        return cls(
            rows=[list(row) for row in pattern.rows],
            primed=[list(row) for row in pattern.primed],
            weight=list(pattern.weight()),
        )


def _bound(value: ExtInt) -> str:
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return str(int(value))


class RowSchema(BaseReportSchema):
    row: int
    start: str
    stop: str


class DiagramSchema(BaseReportSchema):
    """Non-empty rows of a diagram as half-open column intervals ``[start, stop)``."""

    weight: list[int]
    shift: int = 0
    rows: list[RowSchema]

    @classmethod
    def calculate(cls, diag: Diagram, shift: int = 0) -> 'DiagramSchema':
        rows = [
            RowSchema(row=i - shift, start=_bound(lo), stop=_bound(hi))
            for i, (lo, hi) in sorted(diag.rows.items())
        ]
        return cls(weight=list(diag.weight), shift=shift, rows=rows)


class CheckResult(BaseReportSchema):
    name: str
    paper_ref: str
    passed: bool = Field(serialization_alias='pass')
    witness: str | None = None

    @classmethod
    def calculate(cls, outcome: CheckOutcome) -> 'CheckResult':
        return cls(
            name=outcome.name,
            paper_ref=outcome.anchor,
            passed=outcome.passed,
            witness=outcome.witness,
        )


class RunReport(BaseReportSchema):
    command: str
    params: dict[str, Any]
    results: dict[str, Any]
    checks: list[CheckResult]
    elapsed_ms: float | None = None

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @classmethod
    def calculate(
        cls,
        command: str,
        params: Mapping[str, Any],
        results: Mapping[str, Any],
        outcomes: Iterable[CheckOutcome] = (),
        elapsed_ms: float | None = None,
    ) -> 'RunReport':
        return cls(
            command=command,
            params=dict(params),
            results=dict(results),
            checks=[CheckResult.calculate(outcome) for outcome in outcomes],
            elapsed_ms=elapsed_ms,
        )

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, fixed indentation, no ``null`` fields."""
        return json.dumps(self.to_json_data(), indent=2, sort_keys=True, ensure_ascii=False)


def dump_all(models: Sequence[BaseReportSchema]) -> list[dict[str, Any]]:
    return [model.to_json_data() for model in models]
