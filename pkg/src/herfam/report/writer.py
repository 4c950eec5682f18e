"""JSONL 读写."""

from collections.abc import Iterable
from pathlib import Path

from pydantic import ValidationError

from herfam.verify.result import CheckResult, SweepSummary

from .records import ReportRecord, SummaryRecord, now_timestamp, record_adapter


class ReportFormatError(ValueError):
    """报告文件格式错误."""

    def __init__(self, message: str, line_no: int | None = None) -> None:
        prefix = f"第 {line_no} 行: " if line_no is not None else ""
        super().__init__(prefix + message)
        self.line_no = line_no


def render_lines(
    results: Iterable[CheckResult], summary: SweepSummary, timestamps: bool = False
) -> list[str]:
    """结果与汇总 → JSONL 行（不含换行符）."""
    stamp = now_timestamp() if timestamps else None
    lines = [ReportRecord.from_result(r, stamp).model_dump_json() for r in results]
    lines.append(SummaryRecord.from_summary(summary, stamp).model_dump_json())
    return lines


def write_report(
    path: str | Path,
    results: Iterable[CheckResult],
    summary: SweepSummary,
    timestamps: bool = False,
) -> Path:
    """写出 JSONL 报告（每条结果一行，最后一行为汇总）."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = render_lines(results, summary, timestamps)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return out


def read_report(path: str | Path) -> tuple[list[ReportRecord], SummaryRecord | None]:
    """读取 JSONL 报告.

    Raises:
        ReportFormatError: 某行不是合法记录
    """
    records: list[ReportRecord] = []
    summary: SummaryRecord | None = None
    text = Path(path).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = record_adapter.validate_json(line)
        except ValidationError as e:
            raise ReportFormatError(f"非法记录: {e.errors()[0]['msg']}", line_no) from e
        if isinstance(record, SummaryRecord):
            summary = record
        else:
            records.append(record)
    return records, summary
