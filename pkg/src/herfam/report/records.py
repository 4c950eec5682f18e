"""JSONL 报告记录（pydantic）.

整数与有理数一律以字符串保存，有理数为约简的 "p/q".
"""

from datetime import datetime, timezone
from fractions import Fraction
from typing import Annotated, Any, Literal

from pydantic import BaseModel, Field, TypeAdapter

from herfam.verify.result import CheckResult, SweepSummary, Value, Verdict

SCHEMA_VERSION = 1


def format_value(value: Value) -> str:
    """int / Fraction → 字符串（整数值不带分母）."""
    return str(value)


def parse_value(text: str) -> Value:
    """"p/q" → Fraction，其余 → int."""
    if "/" in text:
        return Fraction(text)
    return int(text)


def now_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class ReportRecord(BaseModel):
    """一条检查（或单次求解）记录."""

    kind: Literal["check"] = "check"
    schema_version: int = SCHEMA_VERSION
    timestamp: str | None = None
    check_name: str
    n: int
    family: str
    params: dict[str, int] = Field(default_factory=dict)
    verdict: Verdict
    values: dict[str, str] = Field(default_factory=dict)
    witness: dict[str, Any] = Field(default_factory=dict)
    message: str = ""

    @classmethod
    def from_result(cls, result: CheckResult, timestamp: str | None = None) -> "ReportRecord":
        return cls(
            timestamp=timestamp,
            check_name=result.check_name,
            n=result.n,
            family=result.family,
            params=dict(result.params),
            verdict=result.verdict,
            values={key: format_value(v) for key, v in result.values.items()},
            witness=result.witness,
            message=result.message,
        )

    def to_result(self) -> CheckResult:
        return CheckResult(
            check_name=self.check_name,
            n=self.n,
            family=self.family,
            params=dict(self.params),
            verdict=self.verdict,
            values={key: parse_value(v) for key, v in self.values.items()},
            witness=self.witness,
            message=self.message,
        )


class SummaryRecord(BaseModel):
    """扫描汇总记录（文件最后一行）."""

    kind: Literal["summary"] = "summary"
    schema_version: int = SCHEMA_VERSION
    timestamp: str | None = None
    total: int
    counts: dict[str, int]
    by_check: dict[str, dict[str, int]] = Field(default_factory=dict)
    exit_code: int

    @classmethod
    def from_summary(cls, summary: SweepSummary, timestamp: str | None = None) -> "SummaryRecord":
        return cls(
            timestamp=timestamp,
            total=summary.total,
            counts={v.value: summary.count(v) for v in Verdict},
            by_check={
                name: {v.value: counter.get(v, 0) for v in Verdict}
                for name, counter in sorted(summary.by_check.items())
            },
            exit_code=summary.exit_code,
        )


AnyRecord = Annotated[ReportRecord | SummaryRecord, Field(discriminator="kind")]
record_adapter: TypeAdapter[ReportRecord | SummaryRecord] = TypeAdapter(AnyRecord)
