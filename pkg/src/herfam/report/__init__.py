"""JSONL 报告：记录、读写与汇总."""

from .records import (
    SCHEMA_VERSION,
    ReportRecord,
    SummaryRecord,
    format_value,
    parse_value,
)
from .reporter import ReportGenerator
from .writer import ReportFormatError, read_report, render_lines, write_report

__all__ = [
    "SCHEMA_VERSION",
    "ReportFormatError",
    "ReportGenerator",
    "ReportRecord",
    "SummaryRecord",
    "format_value",
    "parse_value",
    "read_report",
    "render_lines",
    "write_report",
]
