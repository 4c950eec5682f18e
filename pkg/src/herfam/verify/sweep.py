"""扫描：枚举 × 检查，按分区并行，确定性合并."""

import random
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from herfam.config.schema import SweepConfig
from herfam.core.family import SetFamily, is_compressed_wrt, power_set
from herfam.enumeration import (
    enum_all_families,
    enum_hereditary,
    make_filter,
    partition_keys,
    random_family,
)
from herfam.utils.budget import Budget
from herfam.utils.logging import get_logger, log_check_result, log_sweep_progress

from .registry import CheckSpec, ParamKind, registry
from .result import CheckContext, CheckResult, PreconditionError, SweepSummary

logger = get_logger("herfam.verify.sweep")

# 压缩引理穷举的 n 上限（更大的 n 走随机阶段）
EXHAUSTIVE_COMPLEMMA_N = 3


@dataclass(frozen=True)
class SweepUnit:
    """并行工作单元.

    kind 为 "hereditary"（遗传族分区）、"complemma" 或 "powerset".
    """

    n: int
    kind: str
    first: int | None = None


def _context(config: SweepConfig) -> CheckContext:
    return CheckContext(
        budget=Budget(subsets=config.budget_subsets, tuples=config.budget_tuples),
        seed=config.seed,
        samples=config.samples,
    )


def _specs(config: SweepConfig) -> list[CheckSpec]:
    specs = []
    for name in config.checks:
        spec = registry.get(name)
        if spec is None:
            raise KeyError(f"未注册的检查: {name}")
        specs.append(spec)
    return specs


def plan_units(config: SweepConfig) -> list[SweepUnit]:
    """按 n 与检查形态划分工作单元."""
    kinds = {spec.kind for spec in _specs(config)}
    units: list[SweepUnit] = []
    for n in config.n:
        if kinds - {ParamKind.FAMILY_IJ, ParamKind.N_K}:
            units.extend(SweepUnit(n, "hereditary", first) for first in partition_keys(n))
        if ParamKind.FAMILY_IJ in kinds:
            units.append(SweepUnit(n, "complemma"))
        if ParamKind.N_K in kinds:
            units.append(SweepUnit(n, "powerset"))
    return units


def _x_values(family: SetFamily, config: SweepConfig) -> list[int]:
    """family+x 类检查的 x：H 关于 x 压缩（过滤器指定 x 时只取它）."""
    pinned = make_filter(config.filter).compressed_x()
    candidates = [pinned] if pinned is not None else list(family.ground.elements())
    return [x for x in candidates if x <= family.n and is_compressed_wrt(family, x)]


def _instances(
    spec: CheckSpec, family: SetFamily, config: SweepConfig
) -> Iterator[dict[str, int]]:
    n = family.n
    ks = spec.k_values(n, config.k)
    if spec.kind is ParamKind.FAMILY:
        yield {}
    elif spec.kind is ParamKind.FAMILY_X:
        for x in _x_values(family, config):
            yield {"x": x}
    elif spec.kind is ParamKind.FAMILY_K:
        for k in ks:
            yield {"k": k}
    elif spec.kind is ParamKind.FAMILY_X_K:
        for x in _x_values(family, config):
            for k in ks:
                yield {"x": x, "k": k}


def _run_one(
    spec: CheckSpec, family: SetFamily, params: dict[str, int], ctx: CheckContext
) -> CheckResult | None:
    try:
        result = spec.run(family, params, ctx)
    except PreconditionError as e:
        logger.debug(f"跳过不满足前提的实例 {spec.name}: {e}")
        return None
    log_check_result(logger, result)
    return result


def _complemma_triples(n: int, ctx: CheckContext) -> Iterator[tuple[SetFamily, int, int]]:
    pairs = list(permutations(range(1, n + 1), 2))
    if not pairs:
        return
    if n <= EXHAUSTIVE_COMPLEMMA_N:
        for family in enum_all_families(n):
            for i, j in pairs:
                yield family, i, j
        return
    rng = random.Random(ctx.seed)
    for _ in range(ctx.samples):
        family = random_family(n, rng, density=rng.random())
        i, j = rng.choice(pairs)
        yield family, i, j


def run_unit(unit: SweepUnit, config: SweepConfig) -> list[CheckResult]:
    """运行一个工作单元（可在子进程中执行）."""
    ctx = _context(config)
    specs = _specs(config)
    results: list[CheckResult] = []

    if unit.kind == "complemma":
        for spec in specs:
            if spec.kind is not ParamKind.FAMILY_IJ:
                continue
            for family, i, j in _complemma_triples(unit.n, ctx):
                result = _run_one(spec, family, {"i": i, "j": j}, ctx)
                if result is not None:
                    results.append(result)
        return results

    if unit.kind == "powerset":
        for spec in specs:
            if spec.kind is not ParamKind.N_K:
                continue
            for k in spec.k_values(unit.n, config.k):
                result = _run_one(spec, power_set(unit.n), {"n": unit.n, "k": k}, ctx)
                if result is not None:
                    results.append(result)
        return results

    family_specs = [s for s in specs if s.kind not in (ParamKind.FAMILY_IJ, ParamKind.N_K)]
    families = enum_hereditary(
        unit.n,
        config.filter,
        first=unit.first,
        reduce_isomorphic=config.reduce_isomorphic,
        allow_large=config.allow_large,
    )
    for family in families:
        for spec in family_specs:
            for params in _instances(spec, family, config):
                result = _run_one(spec, family, params, ctx)
                if result is not None:
                    results.append(result)
    return results


def run_sweep(config: SweepConfig) -> tuple[list[CheckResult], SweepSummary]:
    """按配置运行扫描.

    Returns:
        (按 (检查名, n, 族, 参数) 排序的结果, 汇总)
    """
    started = time.monotonic()
    units = plan_units(config)
    results: list[CheckResult] = []
    if config.workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for chunk in pool.map(run_unit, units, [config] * len(units)):
                results.extend(chunk)
    else:
        for unit in units:
            results.extend(run_unit(unit, config))
    results.sort(key=lambda r: r.sort_key)

    summary = SweepSummary()
    for result in results:
        summary.add(result)
    for n in config.n:
        log_sweep_progress(
            logger,
            n,
            len({r.family for r in results if r.n == n}),
            sum(1 for r in results if r.n == n),
            time.monotonic() - started,
        )
    return results, summary
