"""计算预算与超限错误."""

from dataclasses import dataclass

# 默认预算：2^24 个子族 / 元组
DEFAULT_SUBSET_BUDGET = 1 << 24
DEFAULT_TUPLE_BUDGET = 1 << 24


class BudgetExceededError(RuntimeError):
    """所需枚举规模超出预算."""

    def __init__(self, what: str, required: int, limit: int) -> None:
        super().__init__(f"{what} 超出预算: 需要 {required}，上限 {limit}")
        self.what = what
        self.required = required
        self.limit = limit


@dataclass(frozen=True)
class Budget:
    """枚举预算.

    subsets 约束子族扫描（2^|F|），tuples 约束朴素 k 元组枚举（(2^|F|)^k）.
    """

    subsets: int = DEFAULT_SUBSET_BUDGET
    tuples: int = DEFAULT_TUPLE_BUDGET

    def require_subsets(self, size: int, what: str) -> None:
        """要求 2^size 不超过子族预算."""
        required = 1 << size
        if required > self.subsets:
            raise BudgetExceededError(what, required, self.subsets)

    def require_tuples(self, size: int, k: int, what: str) -> None:
        """要求 (2^size)^k 不超过元组预算."""
        required = 1 << (size * k)
        if required > self.tuples:
            raise BudgetExceededError(what, required, self.tuples)

    def allows_subsets(self, size: int) -> bool:
        """2^size 是否在子族预算内."""
        return (1 << size) <= self.subsets


DEFAULT_BUDGET = Budget()
