"""每个定理 / 猜想一个检查.

已证命题被违反时判定为 DEFECT；开放猜想被违反时判定为 FAIL，
但若实例落在已证情形内（基有公共元素、关于某 x 压缩且 k ≥ n+1 等）则升级为 DEFECT.
"""

import random
from fractions import Fraction
from typing import Any

from herfam.core.codec import decode_compact, encode_compact
from herfam.core.family import (
    SetFamily,
    bases_share_element,
    compress,
    delta,
    elements_of,
    format_set,
    is_compressed_wrt,
    is_hereditary,
    is_left_compressed,
    power_set,
    singletons_with_empty,
    split_kernel,
    star,
)
from herfam.solvers.cross import (
    CrossWitness,
    cross_sum_optima,
    max_cross_product,
    max_cross_sum,
)
from herfam.solvers.graph import iter_bits, meet_masks
from herfam.solvers.intersecting import (
    BetaResult,
    best_star,
    beta_witness,
    has_star_property,
    largest_intersecting,
)
from herfam.solvers.pairing import PairingDefectError, berge_pairing
from herfam.utils.logging import get_logger

from .registry import CheckStatus, ParamKind, check, make_result, registry
from .result import DEFAULT_CONTEXT, CheckContext, CheckResult, PreconditionError, Verdict

logger = get_logger("herfam.verify")


# ========== 前提与见证 ==========


def _require_hereditary(family: SetFamily, what: str) -> None:
    if not is_hereditary(family):
        raise PreconditionError(f"{what} 要求遗传族: {family}")


def _require_nontrivial(family: SetFamily, what: str) -> None:
    _require_hereditary(family, what)
    if family.is_empty() or family.members == (0,):
        raise PreconditionError(f"{what} 要求 H ≠ ∅ 且 H ≠ {{∅}}: {family}")


def _require_compressed(family: SetFamily, x: int, what: str) -> None:
    _require_hereditary(family, what)
    if not is_compressed_wrt(family, x):
        raise PreconditionError(f"{what} 要求 H 关于 {x} 压缩: {family}")


def _compressed_some(family: SetFamily) -> bool:
    return any(is_compressed_wrt(family, x) for x in family.ground.elements())


def _assignment(witness: CrossWitness) -> list[str]:
    return [encode_compact(f) for f in witness.assignment]


def _proved_case(family: SetFamily, k: int | None) -> str | None:
    """实例被已证结果覆盖时返回原因."""
    if bases_share_element(family):
        return "基有公共元素"
    if k is not None and k >= family.n + 1 and _compressed_some(family):
        return "关于某元素压缩且 k ≥ n+1"
    return None


def _conjecture_verdict(reason: str | None) -> Verdict:
    return Verdict.DEFECT if reason else Verdict.FAIL


# ========== 压缩引理 ==========


@check(
    "complemma",
    "压缩保持核：δ 把 A* 映入 B*，且 |A*| ≤ |B*|",
    ParamKind.FAMILY_IJ,
    CheckStatus.THEOREM,
)
def check_complemma(
    family: SetFamily, i: int, j: int, ctx: CheckContext = DEFAULT_CONTEXT
) -> CheckResult:
    """B = Δ_{i,j}(A) 的四个条款."""
    params = {"i": i, "j": j}
    compressed = compress(family, i, j)
    kernel_a = set(split_kernel(family).kernel.members)
    kernel_b = set(split_kernel(compressed).kernel.members)
    violations: list[dict[str, str]] = []

    for a in sorted(kernel_a):
        image = delta(a, i, j)
        if image not in kernel_b:
            violations.append({"clause": "i", "set": format_set(a)})
        if a not in kernel_b and image in kernel_a:
            violations.append({"clause": "ii", "set": format_set(a)})
    for b in sorted(kernel_b):
        if delta(b, i, j) not in kernel_b:
            violations.append({"clause": "iii", "set": format_set(b)})
    if len(kernel_a) > len(kernel_b):
        violations.append({"clause": "iv", "set": ""})

    values = {"kernel_a": len(kernel_a), "kernel_b": len(kernel_b)}
    if violations:
        witness = {"compressed": encode_compact(compressed), "violations": violations}
        return make_result(
            "complemma", family, params, Verdict.DEFECT, values, witness, "压缩引理条款不成立"
        )
    return make_result("complemma", family, params, Verdict.PASS, values)


# ========== Berge 配对与星 ==========


@check("berge", "遗传族可拆成不交集合对（奇数时另余 ∅）", ParamKind.FAMILY, CheckStatus.THEOREM)
def check_berge(family: SetFamily, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    _require_hereditary(family, "berge")
    if family.is_empty():
        return make_result("berge", family, {}, Verdict.PASS, {"size": 0, "pairs": 0}, message="空族")
    try:
        pairing = berge_pairing(family)
    except PairingDefectError as e:
        return make_result(
            "berge", family, {}, Verdict.DEFECT, {"size": len(family)}, {"error": str(e)}, str(e)
        )
    values = {"size": len(family), "pairs": len(pairing.pairs)}
    witness = {
        "pairs": [[format_set(a), format_set(b)] for a, b in pairing.pairs],
        "leftover_empty": pairing.leftover_empty,
    }
    return make_result("berge", family, {}, Verdict.PASS, values, witness)


@check("bergecor", "遗传族的相交子族不超过 |H|/2", ParamKind.FAMILY, CheckStatus.THEOREM)
def check_bergecor(family: SetFamily, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    _require_hereditary(family, "bergecor")
    result = largest_intersecting(family)
    values = {"lstar": result.size, "size": len(family)}
    if 2 * result.size > len(family):
        witness = {"intersecting": encode_compact(result.witness)}
        return make_result(
            "bergecor", family, {}, Verdict.DEFECT, values, witness, "l(H) > |H|/2"
        )
    return make_result("bergecor", family, {}, Verdict.PASS, values)


@check("bergeprop", "基有公共元素 x 时 |H⟨x⟩| = |H|/2", ParamKind.FAMILY, CheckStatus.THEOREM)
def check_bergeprop(family: SetFamily, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    _require_hereditary(family, "bergeprop")
    shared = elements_of(bases_share_element(family))
    values = {"size": len(family), "shared": len(shared)}
    wrong = [x for x in shared if 2 * len(star(family, x)) != len(family)]
    if wrong:
        witness = {"stars": {str(x): len(star(family, x)) for x in wrong}}
        return make_result(
            "bergeprop", family, {}, Verdict.DEFECT, values, witness, "公共元素的星不是 |H|/2"
        )
    message = "" if shared else "基无公共元素"
    return make_result("bergeprop", family, {}, Verdict.PASS, values, message=message)


@check("snevily", "关于 x 压缩的遗传族在 x 处有星性质", ParamKind.FAMILY_X, CheckStatus.THEOREM)
def check_snevily(family: SetFamily, x: int, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    _require_compressed(family, x, "snevily")
    star_size = len(star(family, x))
    result = largest_intersecting(family)
    values = {"star": star_size, "lstar": result.size}
    if star_size != result.size:
        witness = {"intersecting": encode_compact(result.witness)}
        return make_result(
            "snevily", family, {"x": x}, Verdict.DEFECT, values, witness, "星不是最大相交子族"
        )
    return make_result("snevily", family, {"x": x}, Verdict.PASS, values)


@check("chvatal", "遗传族有星性质", ParamKind.FAMILY, CheckStatus.CONJECTURE)
def check_chvatal(family: SetFamily, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    """星性质. 非遗传输入不报错，照常判定（用于合成反例）."""
    holds, x = has_star_property(family)
    top = best_star(family)
    if holds:
        values = {"star": top.size, "lstar": top.size}
        witness = {"x": x} if x is not None else {}
        return make_result("chvatal", family, {}, Verdict.PASS, values, witness)

    result = largest_intersecting(family)
    values = {"star": top.size, "lstar": result.size}
    witness = {"intersecting": encode_compact(result.witness), "best_star": top.x}
    reason = None
    if is_hereditary(family):
        if _compressed_some(family):
            reason = "关于某元素压缩"
        elif is_left_compressed(family):
            reason = "左压缩"
    verdict = _conjecture_verdict(reason)
    message = f"无星性质（{reason}，已证情形）" if reason else "无星性质"
    return make_result("chvatal", family, {}, verdict, values, witness, message)


# ========== 交叉相交：已证界 ==========


def _result2_k(n: int) -> list[int]:
    return [2, 3]


@check(
    "result2",
    "交叉相交和 ≤ k|H|/2、积 ≤ (|H|/2)^k；基有公共元素时取等",
    ParamKind.FAMILY_K,
    CheckStatus.THEOREM,
    default_k=_result2_k,
)
def check_result2(family: SetFamily, k: int, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    _require_hereditary(family, "result2")
    if family.is_empty():
        raise PreconditionError("result2 要求 H 非空")
    size = len(family)
    total = max_cross_sum(family, k, ctx.budget)
    product = max_cross_product(family, k, ctx.budget)
    half_power = Fraction(size, 2) ** k
    values: dict[str, Any] = {"sum": total.value, "product": product.value, "size": size}
    if product.upper is not None:
        values["product_upper"] = product.upper
    problems = []
    if 2 * total.value > k * size:
        problems.append("和超过 k|H|/2")
    if (product.upper if product.upper is not None else product.value) > half_power:
        problems.append("积的上界超过 (|H|/2)^k")

    shared = bases_share_element(family)
    if shared:
        x = elements_of(shared)[0]
        star_size = len(star(family, x))
        values["star"] = star_size
        if total.value != k * star_size or 2 * star_size != size:
            problems.append(f"基公共元素 {x} 的星未达到和的界")
        if product.value != star_size**k:
            problems.append(f"基公共元素 {x} 的星未达到积的界")

    params = {"k": k}
    if problems:
        witness = {"assignment": _assignment(total.witness)}
        return make_result(
            "result2", family, params, Verdict.DEFECT, values, witness, "; ".join(problems)
        )
    return make_result("result2", family, params, Verdict.PASS, values)


@check(
    "mainthm2",
    "关于 x 压缩时 |A*| + |A′|/(n+1) ≤ |H⟨x⟩|，A′ ≠ ∅ 时仅在单点族取等",
    ParamKind.FAMILY_X,
    CheckStatus.THEOREM,
)
def check_mainthm2(family: SetFamily, x: int, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    """扫描全部 A ⊆ H；超出子集预算时随机抽样并标记部分覆盖.

    以 (n+1)|A*| + |A′| ≤ (n+1)|S| 的整数形式比较.
    """
    _require_compressed(family, x, "mainthm2")
    n1 = family.n + 1
    star_size = len(star(family, x))
    members = family.members
    masks = meet_masks(members)
    m = len(members)
    tight_family = family == singletons_with_empty(family.n)

    exhaustive = ctx.budget.allows_subsets(m)
    if exhaustive:
        subsets: Any = range(1 << m)
    else:
        rng = random.Random(ctx.seed)
        subsets = (rng.getrandbits(m) for _ in range(ctx.samples))

    scanned = 0
    equalities = 0
    violations: list[str] = []
    for chosen in subsets:
        scanned += 1
        kernel = sum(1 for v in iter_bits(chosen) if masks[v] & chosen == chosen)
        residue = chosen.bit_count() - kernel
        lhs = n1 * kernel + residue
        rhs = n1 * star_size
        if lhs > rhs:
            violations.append(f"不等式被违反: A = {_pick_text(members, chosen)}")
        elif lhs == rhs and residue:
            equalities += 1
            if not (tight_family and chosen == (1 << m) - 1):
                violations.append(f"非单点族处取等: A = {_pick_text(members, chosen)}")
        if len(violations) >= 5:
            break

    values = {"star": star_size, "scanned": scanned, "equalities": equalities}
    witness: dict[str, Any] = {"coverage": "full" if exhaustive else "partial"}
    params = {"x": x}
    if violations:
        witness["violations"] = violations
        return make_result(
            "mainthm2", family, params, Verdict.DEFECT, values, witness, violations[0]
        )
    message = "" if exhaustive else f"部分覆盖：随机抽样 {scanned} 个子族"
    return make_result("mainthm2", family, params, Verdict.PASS, values, witness, message)


def _pick_text(members: tuple[int, ...], chosen: int) -> str:
    return "{" + ", ".join(format_set(members[i]) for i in iter_bits(chosen)) + "}"


def _mainthm_k(n: int) -> list[int]:
    return [n + 1, n + 2]


@check(
    "mainthm",
    "关于 x 压缩且 k ≥ n+1 时和 = k|S|、积 = |S|^k，并核对全部极值配置",
    ParamKind.FAMILY_X_K,
    CheckStatus.THEOREM,
    default_k=_mainthm_k,
)
def check_mainthm(
    family: SetFamily, x: int, k: int, ctx: CheckContext = DEFAULT_CONTEXT
) -> CheckResult:
    """极值配置核对：每个和的最优配置要么 k 个族都等于同一最大相交子族，
    要么是 k = n+1 时 H = {∅} ∪ 单点集、A₁ = H、其余为空的例外.
    积的最优配置由此导出：积 ≤ (和/k)^k ≤ |S|^k，取等要求各 |A_i| 相同且和取到最大，
    所以积的最优配置都是和的最优配置，只需在后者中核对；例外配置的积为 0.
    """
    _require_compressed(family, x, "mainthm")
    if k < family.n + 1:
        raise PreconditionError(f"mainthm 要求 k ≥ n+1: k={k}, n={family.n}")
    params = {"x": x, "k": k}
    star_size = len(star(family, x))
    lstar = largest_intersecting(family).size
    optima = cross_sum_optima(family, k, ctx.budget)
    total = optima[0].total
    product = max_cross_product(family, k, ctx.budget)
    tight_family = family == singletons_with_empty(family.n)

    problems = []
    if total != k * star_size:
        problems.append(f"最大和 {total} ≠ k|S| = {k * star_size}")
    if not product.exact or product.value != star_size**k:
        problems.append(f"积证书 {product.value} ≠ |S|^k = {star_size**k}")

    exceptional = 0
    for opt in optima:
        split = opt.split
        if split.residue.is_empty() and len(split.kernel) == lstar:
            if opt.product != star_size**k:
                problems.append(f"相交最优配置的积不是 |S|^k: {encode_compact(opt.union)}")
            continue
        if (
            k == family.n + 1
            and tight_family
            and split.kernel.is_empty()
            and opt.union == family
        ):
            exceptional += 1
            if star_size > 0 and opt.product == star_size**k:
                problems.append("例外配置的积不应达到 |S|^k")
            continue
        problems.append(f"不符合极值刻画的最优配置: {encode_compact(opt.union)}")

    values = {
        "sum": total,
        "product": product.value,
        "star": star_size,
        "optima": len(optima),
        "exceptional": exceptional,
    }
    if problems:
        witness = {"optima": [_assignment(opt) for opt in optima[:5]]}
        return make_result("mainthm", family, params, Verdict.DEFECT, values, witness, problems[0])
    witness = {"optima": [_assignment(opt) for opt in optima]}
    return make_result("mainthm", family, params, Verdict.PASS, values, witness)


def _beta_witness(result: BetaResult) -> dict[str, Any]:
    return {
        "kernel": encode_compact(result.kernel),
        "subfamily": encode_compact(result.subfamily),
        "ratio": str(result.value),
    }


@check(
    "beta_bound",
    "关于 x 压缩时 β(H) ≥ 1/(n+1)，仅单点族取等",
    ParamKind.FAMILY_X,
    CheckStatus.THEOREM,
)
def check_beta_bound(
    family: SetFamily, x: int, ctx: CheckContext = DEFAULT_CONTEXT
) -> CheckResult:
    """见证为达到 β 的 (K, A = N(K))."""
    _require_compressed(family, x, "beta_bound")
    result = beta_witness(family, ctx.budget)
    value = result.value
    floor = Fraction(1, family.n + 1)
    values = {"beta": value, "floor": floor}
    params = {"x": x}
    witness = _beta_witness(result)
    if value < floor:
        return make_result(
            "beta_bound", family, params, Verdict.DEFECT, values, witness, "β < 1/(n+1)"
        )
    if value == floor and family != singletons_with_empty(family.n):
        message = "非单点族处 β = 1/(n+1)"
        return make_result("beta_bound", family, params, Verdict.DEFECT, values, witness, message)
    return make_result("beta_bound", family, params, Verdict.PASS, values)


def _powerset_k(n: int) -> list[int]:
    return [2, 3]


@check(
    "powerset",
    "幂集上最大和 k·2^(n−1)、最大积 (2^(n−1))^k",
    ParamKind.N_K,
    CheckStatus.THEOREM,
    default_k=_powerset_k,
)
def check_powerset(n: int, k: int, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    family = power_set(n)
    half = 1 << (n - 1)
    total = max_cross_sum(family, k, ctx.budget)
    product = max_cross_product(family, k, ctx.budget)
    values = {"sum": total.value, "product": product.value}
    params = {"n": n, "k": k}
    problems = []
    if total.value != k * half:
        problems.append(f"最大和 {total.value} ≠ {k * half}")
    if not product.exact or product.value != half**k:
        problems.append(f"最大积 {product.value} ≠ {half**k}")
    if problems:
        witness = {"assignment": _assignment(total.witness)}
        return make_result("powerset", family, params, Verdict.DEFECT, values, witness, problems[0])
    return make_result("powerset", family, params, Verdict.PASS, values)


# ========== 交叉相交：猜想 ==========


def _weaksum_k(n: int) -> list[int]:
    return [n + 1, n + 2]


@check(
    "weaksum",
    "k ≥ n+1 时最大和由 k 个最大星达到",
    ParamKind.FAMILY_K,
    CheckStatus.CONJECTURE,
    default_k=_weaksum_k,
)
def check_weaksum(family: SetFamily, k: int, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    _require_nontrivial(family, "weaksum")
    if k < family.n + 1:
        raise PreconditionError(f"weaksum 要求 k ≥ n+1: k={k}, n={family.n}")
    star_size = best_star(family).size
    total = max_cross_sum(family, k, ctx.budget)
    values = {"sum": total.value, "expected": k * star_size, "star": star_size}
    params = {"k": k}
    if total.value > k * star_size:
        reason = _proved_case(family, k)
        witness = {"assignment": _assignment(total.witness)}
        message = f"最大和 {total.value} > k|S| = {k * star_size}"
        return make_result(
            "weaksum", family, params, _conjecture_verdict(reason), values, witness, message
        )
    return make_result("weaksum", family, params, Verdict.PASS, values)


def _strongsum_k(n: int) -> list[int]:
    return sorted({2, 3, n + 1})


@check(
    "strongsum",
    "最大和由 (H, ∅, …, ∅) 或 (S, …, S) 之一达到",
    ParamKind.FAMILY_K,
    CheckStatus.CONJECTURE,
    default_k=_strongsum_k,
)
def check_strongsum(
    family: SetFamily, k: int, ctx: CheckContext = DEFAULT_CONTEXT
) -> CheckResult:
    """阈值 k = |H|/|S| 处两个分支都接受（两者相等）."""
    _require_nontrivial(family, "strongsum")
    if k < 2:
        raise PreconditionError(f"strongsum 要求 k ≥ 2: {k}")
    size = len(family)
    star_size = best_star(family).size
    threshold = Fraction(size, star_size)
    total = max_cross_sum(family, k, ctx.budget)

    expected = []
    if k <= threshold:
        expected.append(size)
    if k >= threshold:
        expected.append(k * star_size)
    values = {
        "sum": total.value,
        "expected": max(expected),
        "threshold": threshold,
        "star": star_size,
    }
    params = {"k": k}
    if total.value not in expected:
        reason = "k = 2" if k == 2 else _proved_case(family, k)
        witness = {"assignment": _assignment(total.witness)}
        message = f"最大和 {total.value} 不等于任一简单配置 {expected}"
        return make_result(
            "strongsum", family, params, _conjecture_verdict(reason), values, witness, message
        )
    return make_result("strongsum", family, params, Verdict.PASS, values)


def _prodconj_k(n: int) -> list[int]:
    return [2]


@check(
    "prodconj",
    "最大积由 k 个最大星达到",
    ParamKind.FAMILY_K,
    CheckStatus.CONJECTURE,
    default_k=_prodconj_k,
)
def check_prodconj(family: SetFamily, k: int, ctx: CheckContext = DEFAULT_CONTEXT) -> CheckResult:
    """k ≥ 3 且证书不精确时，借 k = 2 的精确结果推出（k = 2 成立则对全部 k ≥ 2 成立）."""
    _require_nontrivial(family, "prodconj")
    if k < 2:
        raise PreconditionError(f"prodconj 要求 k ≥ 2: {k}")
    star_size = best_star(family).size
    expected = star_size**k
    product = max_cross_product(family, k, ctx.budget)
    values: dict[str, Any] = {"product": product.value, "expected": expected, "star": star_size}
    if product.upper is not None:
        values["product_upper"] = product.upper
    params = {"k": k}

    if product.value > expected:
        reason = _proved_case(family, k)
        witness = {"assignment": _assignment(product.witness)}
        message = f"积 {product.value} > |S|^k = {expected}"
        return make_result(
            "prodconj", family, params, _conjecture_verdict(reason), values, witness, message
        )
    if product.exact:
        return make_result("prodconj", family, params, Verdict.PASS, values)

    pair = max_cross_product(family, 2, ctx.budget)
    if pair.exact and pair.value == star_size**2:
        message = "由 k = 2 的精确结果推出"
        return make_result("prodconj", family, params, Verdict.PASS, values, message=message)
    if pair.exact:
        reason = _proved_case(family, 2)
        witness = {"assignment": _assignment(pair.witness)}
        message = f"k = 2 时积 {pair.value} > |S|^2 = {star_size**2}"
        return make_result(
            "prodconj", family, params, _conjecture_verdict(reason), values, witness, message
        )
    return make_result(
        "prodconj", family, params, Verdict.SKIPPED, values, message="积证书不精确且 k = 2 无法精确求解"
    )


# ========== 复核 ==========


def revalidate(result: CheckResult, ctx: CheckContext = DEFAULT_CONTEXT) -> bool:
    """按记录中的族与参数重新运行检查，确认判定与见证一致.

    Raises:
        KeyError: 未注册的检查名
    """
    spec = registry.get(result.check_name)
    if spec is None:
        raise KeyError(f"未注册的检查: {result.check_name}")
    family = decode_compact(result.family)
    rerun = spec.run(family, result.params, ctx)
    same = rerun.verdict == result.verdict and rerun.witness == result.witness
    if not same:
        logger.warning(
            f"复核不一致 {result.check_name} {result.family}: "
            f"{result.verdict.value} → {rerun.verdict.value}"
        )
    return same
