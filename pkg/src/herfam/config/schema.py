"""扫描配置 Schema 定义（使用 Pydantic）."""

import re
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from herfam.utils.budget import DEFAULT_SUBSET_BUDGET, DEFAULT_TUPLE_BUDGET

RANGE_RE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")

# 随机阶段默认样本数
DEFAULT_SAMPLES = 10_000


def _int_list(value: Any, field_name: str) -> Any:
    """int、列表或 "lo..hi" 区间 → 升序去重的 int 列表."""
    if isinstance(value, bool):
        raise ValueError(f"{field_name} 不能是布尔值")
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        match = RANGE_RE.match(value)
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
            if lo > hi:
                raise ValueError(f"{field_name} 区间为空: {value!r}")
            return list(range(lo, hi + 1))
        if value.strip().isdigit():
            return [int(value)]
        raise ValueError(f"{field_name} 必须是整数、列表或 lo..hi: {value!r}")
    if isinstance(value, list):
        return sorted(set(value))
    return value


class SweepConfig(BaseModel):
    """扫描配置."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    checks: list[str] = Field(..., min_length=1, description="检查名列表")
    n: list[int] = Field(..., min_length=1, description="基集大小（int、列表或 lo..hi）")
    k: list[int] | None = Field(default=None, description="k 列表；缺省时按检查默认")
    filter: list[str] = Field(default_factory=list, description="过滤原子")
    budget_subsets: int = Field(default=DEFAULT_SUBSET_BUDGET, ge=1, description="子族扫描预算")
    budget_tuples: int = Field(default=DEFAULT_TUPLE_BUDGET, ge=1, description="k 元组枚举预算")
    seed: int = Field(default=0, description="随机阶段种子")
    samples: int = Field(default=DEFAULT_SAMPLES, ge=0, description="随机阶段样本数")
    reduce_isomorphic: bool = Field(default=False, description="只保留同构类代表")
    workers: int = Field(default=1, ge=1, description="并行进程数")
    allow_large: bool = Field(default=False, description="放行 n = 6 的穷举")

    @field_validator("checks", mode="before")
    @classmethod
    def _checks_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        return value

    @field_validator("checks")
    @classmethod
    def _known_checks(cls, value: list[str]) -> list[str]:
        from herfam.verify.registry import registry

        unknown = [name for name in value if registry.get(name) is None]
        if unknown:
            raise ValueError(f"未知检查 {unknown}（可用: {', '.join(registry.names())}）")
        return value

    @field_validator("n", mode="before")
    @classmethod
    def _n_list(cls, value: Any) -> Any:
        return _int_list(value, "n")

    @field_validator("n")
    @classmethod
    def _n_range(cls, value: list[int]) -> list[int]:
        for n in value:
            if not 1 <= n <= 6:
                raise ValueError(f"n 超出范围 [1, 6]: {n}")
        return value

    @model_validator(mode="after")
    def _large_n(self) -> "SweepConfig":
        if not self.allow_large and max(self.n) > 5:
            raise ValueError("n = 6 需要 allow_large: true")
        return self

    @field_validator("k", mode="before")
    @classmethod
    def _k_list(cls, value: Any) -> Any:
        if value is None:
            return None
        return _int_list(value, "k")

    @field_validator("k")
    @classmethod
    def _k_range(cls, value: list[int] | None) -> list[int] | None:
        if value is not None and any(k < 2 for k in value):
            raise ValueError(f"k 必须 ≥ 2: {value}")
        return value

    @field_validator("filter", mode="before")
    @classmethod
    def _filter_list(cls, value: Any) -> Any:
        if value is None:
            return []
        if isinstance(value, str):
            return [value]
        return value

    @field_validator("filter")
    @classmethod
    def _known_atoms(cls, value: list[str]) -> list[str]:
        from herfam.enumeration.filters import parse_atom

        for atom in value:
            parse_atom(atom)
        return value
