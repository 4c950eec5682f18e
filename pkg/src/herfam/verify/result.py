"""检查结果、判定与运行上下文."""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from herfam.config.schema import DEFAULT_SAMPLES
from herfam.core.family import FamilyError
from herfam.utils.budget import DEFAULT_BUDGET, Budget


class Verdict(str, Enum):
    """检查判定."""

    PASS = "pass"  # 成立
    FAIL = "fail"  # 猜想反例
    DEFECT = "defect"  # 已证命题被违反：库缺陷
    SKIPPED = "skipped"  # 超出预算或无法判定


class PreconditionError(FamilyError):
    """检查的数学前提不成立（如族不是关于 x 压缩的）."""

    pass


@dataclass(frozen=True)
class CheckContext:
    """检查运行参数：预算、随机种子与样本数."""

    budget: Budget = DEFAULT_BUDGET
    seed: int = 0
    samples: int = DEFAULT_SAMPLES


DEFAULT_CONTEXT = CheckContext()

Value = int | Fraction


@dataclass
class CheckResult:
    """一次检查的结果.

    family 为紧凑编码；values 只含精确整数/有理数；witness 为可 JSON 化的结构.
    """

    check_name: str
    n: int
    family: str
    params: dict[str, int]
    verdict: Verdict
    values: dict[str, Value] = field(default_factory=dict)
    witness: dict[str, Any] = field(default_factory=dict)
    message: str = ""

    @property
    def sort_key(self) -> tuple[str, int, str, tuple[tuple[str, int], ...]]:
        """确定性排序键：(检查名, n, 族, 参数)."""
        return self.check_name, self.n, self.family, tuple(sorted(self.params.items()))

    @property
    def is_problem(self) -> bool:
        return self.verdict in (Verdict.FAIL, Verdict.DEFECT)


@dataclass
class SweepSummary:
    """扫描汇总：按判定计数."""

    counts: Counter[Verdict] = field(default_factory=Counter)
    by_check: dict[str, Counter[Verdict]] = field(default_factory=dict)

    def add(self, result: CheckResult) -> None:
        self.counts[result.verdict] += 1
        self.by_check.setdefault(result.check_name, Counter())[result.verdict] += 1

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, verdict: Verdict) -> int:
        return self.counts.get(verdict, 0)

    @property
    def exit_code(self) -> int:
        """0 无问题；2 发现猜想反例；3 发现缺陷（优先）."""
        if self.count(Verdict.DEFECT):
            return 3
        if self.count(Verdict.FAIL):
            return 2
        return 0
