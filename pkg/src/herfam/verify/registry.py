"""检查注册表."""

import functools
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Any

from herfam.core.codec import encode_compact
from herfam.core.family import SetFamily, power_set
from herfam.utils.budget import BudgetExceededError

from .result import DEFAULT_CONTEXT, CheckContext, CheckResult, Verdict


class ParamKind(str, Enum):
    """检查的参数形态."""

    FAMILY = "family"
    FAMILY_X = "family+x"
    FAMILY_K = "family+k"
    FAMILY_X_K = "family+x+k"
    FAMILY_IJ = "family+i+j"
    N_K = "n+k"

    @property
    def param_names(self) -> tuple[str, ...]:
        return {
            ParamKind.FAMILY: (),
            ParamKind.FAMILY_X: ("x",),
            ParamKind.FAMILY_K: ("k",),
            ParamKind.FAMILY_X_K: ("x", "k"),
            ParamKind.FAMILY_IJ: ("i", "j"),
            ParamKind.N_K: ("n", "k"),
        }[self]

    def bind(self, args: tuple[Any, ...]) -> tuple[SetFamily, dict[str, int]]:
        """位置参数 → (族, 参数字典)."""
        if self is ParamKind.N_K:
            n, k = args
            return power_set(n), {"n": n, "k": k}
        family, *rest = args
        return family, dict(zip(self.param_names, rest, strict=True))

    def unbind(self, family: SetFamily, params: dict[str, int]) -> tuple[Any, ...]:
        """(族, 参数字典) → 位置参数."""
        if self is ParamKind.N_K:
            return params["n"], params["k"]
        return (family, *(params[name] for name in self.param_names))


class CheckStatus(str, Enum):
    """被检查命题的地位."""

    THEOREM = "theorem"  # 已证：违反即缺陷
    CONJECTURE = "conjecture"  # 开放：违反即反例


DefaultK = Callable[[int], list[int]]


@dataclass(frozen=True)
class CheckSpec:
    """已注册检查的描述."""

    name: str
    description: str
    kind: ParamKind
    status: CheckStatus
    func: Callable[..., CheckResult]
    default_k: DefaultK | None = None

    def run(
        self, family: SetFamily, params: dict[str, int], ctx: CheckContext = DEFAULT_CONTEXT
    ) -> CheckResult:
        """以 (族, 参数字典) 调用检查."""
        return self.func(*self.kind.unbind(family, params), ctx=ctx)

    def k_values(self, n: int, override: list[int] | None = None) -> list[int]:
        """本检查在 n 上使用的 k 列表."""
        if override:
            return list(override)
        return self.default_k(n) if self.default_k else []


class CheckRegistry:
    """检查注册表."""

    def __init__(self) -> None:
        self._checks: dict[str, CheckSpec] = {}

    def register(self, spec: CheckSpec) -> None:
        self._checks[spec.name] = spec

    def get(self, name: str) -> CheckSpec | None:
        return self._checks.get(name)

    def names(self) -> list[str]:
        return list(self._checks)

    def list_checks(self) -> list[CheckSpec]:
        return list(self._checks.values())


registry = CheckRegistry()


def make_result(
    name: str,
    family: SetFamily,
    params: dict[str, int],
    verdict: Verdict,
    values: dict[str, Any] | None = None,
    witness: dict[str, Any] | None = None,
    message: str = "",
) -> CheckResult:
    """构造 CheckResult（族取紧凑编码）."""
    return CheckResult(
        check_name=name,
        n=family.n,
        family=encode_compact(family),
        params=params,
        verdict=verdict,
        values=values or {},
        witness=witness or {},
        message=message,
    )


def check(
    name: str,
    description: str,
    kind: ParamKind,
    status: CheckStatus,
    default_k: DefaultK | None = None,
) -> Callable[[Callable[..., CheckResult]], Callable[..., CheckResult]]:
    """注册检查；预算超限转换为 SKIPPED 结果."""

    def decorator(func: Callable[..., CheckResult]) -> Callable[..., CheckResult]:
        @functools.wraps(func)
        def wrapper(*args: Any, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
            try:
                return func(*args, ctx=ctx)
            except BudgetExceededError as e:
                family, params = kind.bind(args)
                return make_result(name, family, params, Verdict.SKIPPED, message=str(e))

        registry.register(CheckSpec(name, description, kind, status, wrapper, default_k))
        return wrapper

    return decorator
