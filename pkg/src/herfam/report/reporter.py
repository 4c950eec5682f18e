"""扫描报告汇总 - 支持 Markdown 与终端表格."""

from collections import Counter

from rich.table import Table

from herfam.verify.result import Verdict

from .records import ReportRecord, SummaryRecord

VERDICT_ORDER = (Verdict.PASS, Verdict.FAIL, Verdict.DEFECT, Verdict.SKIPPED)


class ReportGenerator:
    """根据 JSONL 记录生成汇总."""

    def __init__(self, records: list[ReportRecord], summary: SummaryRecord | None = None) -> None:
        """初始化报告生成器.

        Args:
            records: 检查记录
            summary: 汇总记录（缺失时由记录重新统计）
        """
        self.records = records
        self.summary = summary

    def counts_by_check(self) -> dict[str, Counter[Verdict]]:
        """按检查名统计各判定数量."""
        table: dict[str, Counter[Verdict]] = {}
        for record in self.records:
            table.setdefault(record.check_name, Counter())[record.verdict] += 1
        return dict(sorted(table.items()))

    def problems(self) -> list[ReportRecord]:
        """全部 fail / defect 记录."""
        return [r for r in self.records if r.verdict in (Verdict.FAIL, Verdict.DEFECT)]

    def generate_markdown(self) -> str:
        """生成 Markdown 报告."""
        lines = ["# herfam 扫描报告\n"]
        lines.append("| 检查 | pass | fail | defect | skipped |")
        lines.append("|------|------|------|--------|---------|")
        for name, counter in self.counts_by_check().items():
            cells = " | ".join(str(counter.get(v, 0)) for v in VERDICT_ORDER)
            lines.append(f"| {name} | {cells} |")

        if self.summary is not None:
            lines.append("")
            lines.append(f"**总数:** {self.summary.total}")
            lines.append(f"**退出码:** {self.summary.exit_code}")

        problems = self.problems()
        if problems:
            lines.append("\n## 反例与缺陷\n")
            for record in problems:
                params = ", ".join(f"{k}={v}" for k, v in sorted(record.params.items()))
                lines.append(f"- **{record.verdict.value}** `{record.check_name}` `{record.family}` {params}")
                if record.message:
                    lines.append(f"  - {record.message}")
        return "\n".join(lines)

    def generate_table(self) -> Table:
        """生成 rich 表格."""
        table = Table(title="herfam 扫描报告")
        table.add_column("检查", style="cyan")
        table.add_column("pass", style="green", justify="right")
        table.add_column("fail", style="yellow", justify="right")
        table.add_column("defect", style="red", justify="right")
        table.add_column("skipped", style="dim", justify="right")
        for name, counter in self.counts_by_check().items():
            table.add_row(name, *(str(counter.get(v, 0)) for v in VERDICT_ORDER))
        return table
