"""定理 / 猜想检查与注册表测试."""

import itertools
import math
from dataclasses import replace
from fractions import Fraction

import pytest

from herfam.core.family import (
    empty_family,
    hereditary_closure,
    make_family,
    power_set,
    singletons_with_empty,
)
from herfam.enumeration import enum_all_families
from herfam.solvers.intersecting import BetaResult, largest_intersecting
from herfam.utils.budget import Budget
from herfam.verify import checks
from herfam.verify.checks import (
    check_berge,
    check_bergecor,
    check_bergeprop,
    check_beta_bound,
    check_chvatal,
    check_complemma,
    check_mainthm,
    check_mainthm2,
    check_powerset,
    check_prodconj,
    check_result2,
    check_snevily,
    check_strongsum,
    check_weaksum,
    revalidate,
)
from herfam.verify.registry import CheckStatus, ParamKind, registry
from herfam.verify.result import CheckContext, CheckResult, PreconditionError, SweepSummary, Verdict


@pytest.fixture
def closure12_13():
    """{{1,2},{1,3}} 的遗传闭包."""
    return hereditary_closure(make_family(3, [[1, 2], [1, 3]]))


# ========== 注册表 ==========


def test_registry_contains_all_checks():
    """测试全部检查已注册."""
    assert set(registry.names()) == {
        "complemma",
        "berge",
        "bergecor",
        "bergeprop",
        "snevily",
        "chvatal",
        "result2",
        "mainthm2",
        "mainthm",
        "beta_bound",
        "powerset",
        "weaksum",
        "strongsum",
        "prodconj",
    }
    assert registry.get("missing") is None


def test_registry_kinds_and_status():
    """测试参数形态与命题地位."""
    assert registry.get("complemma").kind is ParamKind.FAMILY_IJ
    assert registry.get("mainthm").kind is ParamKind.FAMILY_X_K
    assert registry.get("powerset").kind is ParamKind.N_K
    assert registry.get("chvatal").status is CheckStatus.CONJECTURE
    assert registry.get("berge").status is CheckStatus.THEOREM


def test_default_k_rules():
    """测试各检查的默认 k 与覆盖."""
    assert registry.get("weaksum").k_values(3) == [4, 5]
    assert registry.get("strongsum").k_values(1) == [2, 3]
    assert registry.get("strongsum").k_values(3) == [2, 3, 4]
    assert registry.get("prodconj").k_values(4) == [2]
    assert registry.get("berge").k_values(3) == []
    assert registry.get("weaksum").k_values(3, [7]) == [7]


def test_param_kind_bind_unbind(power2):
    """测试位置参数与参数字典的转换."""
    family, params = ParamKind.FAMILY_X_K.bind((power2, 1, 3))
    assert family == power2
    assert params == {"x": 1, "k": 3}
    assert ParamKind.FAMILY_X_K.unbind(power2, params) == (power2, 1, 3)

    family, params = ParamKind.N_K.bind((3, 2))
    assert family == power_set(3)
    assert params == {"n": 3, "k": 2}


def test_spec_run_uses_param_dict(power2):
    """测试以参数字典运行检查."""
    result = registry.get("weaksum").run(power2, {"k": 3})
    assert result.verdict is Verdict.PASS
    assert result.params == {"k": 3}


# ========== 压缩引理 ==========


def test_complemma_empty_family():
    """测试空族."""
    result = check_complemma(empty_family(3), 1, 2)
    assert result.verdict is Verdict.PASS


def test_complemma_intersecting_family(triangle):
    """测试相交族：A* = A."""
    result = check_complemma(triangle, 1, 2)
    assert result.verdict is Verdict.PASS
    assert result.values["kernel_a"] == 3


def test_complemma_all_families_n2():
    """测试 n = 2 的全部子族."""
    for family in enum_all_families(2):
        for i, j in ((1, 2), (2, 1)):
            assert check_complemma(family, i, j).verdict is Verdict.PASS


# ========== Berge 与星 ==========


def test_berge(power2):
    """测试 Berge 配对检查."""
    result = check_berge(power2)
    assert result.verdict is Verdict.PASS
    assert result.values == {"size": 4, "pairs": 2}
    assert result.witness["pairs"] == [["{}", "{1,2}"], ["{1}", "{2}"]]


def test_berge_empty_and_non_hereditary(triangle):
    """测试空族与非遗传输入."""
    result = check_berge(empty_family(3))
    assert result.verdict is Verdict.PASS
    assert result.message == "空族"
    with pytest.raises(PreconditionError):
        check_berge(triangle)


def test_bergecor(tight3):
    """测试 l(H) ≤ |H|/2."""
    result = check_bergecor(tight3)
    assert result.verdict is Verdict.PASS
    assert result.values == {"lstar": 1, "size": 4}


def test_bergeprop(closure12_13, tight3):
    """测试基有公共元素时星恰为一半."""
    result = check_bergeprop(closure12_13)
    assert result.verdict is Verdict.PASS
    assert result.values["shared"] == 1

    result = check_bergeprop(tight3)
    assert result.verdict is Verdict.PASS
    assert result.message == "基无公共元素"


def test_snevily(power3, closure12_13):
    """测试压缩族在 x 处有星性质."""
    result = check_snevily(power3, 1)
    assert result.verdict is Verdict.PASS
    assert result.values == {"star": 4, "lstar": 4}

    result = check_snevily(closure12_13, 1)
    assert result.values == {"star": 3, "lstar": 3}

    result = check_snevily(make_family(1, [[], [1]]), 1)
    assert result.values == {"star": 1, "lstar": 1}

    with pytest.raises(PreconditionError):
        check_snevily(closure12_13, 2)


def test_chvatal_pass():
    """测试星性质."""
    result = check_chvatal(power_set(4))
    assert result.verdict is Verdict.PASS
    assert result.values["star"] == 8

    result = check_chvatal(make_family(3, [[]]))
    assert result.verdict is Verdict.PASS
    assert result.witness == {}


def test_chvatal_non_hereditary_counterexample(triangle):
    """测试非遗传的三角形：报告 fail 而不是报错."""
    result = check_chvatal(triangle)
    assert result.verdict is Verdict.FAIL
    assert result.values == {"star": 2, "lstar": 3}
    assert result.witness["best_star"] == 1
    assert result.is_problem


def test_chvatal_escalates_on_proved_case(monkeypatch, tight3):
    """测试已证情形（压缩族）上的失败升级为缺陷."""
    monkeypatch.setattr(checks, "has_star_property", lambda family: (False, None))
    result = check_chvatal(tight3)
    assert result.verdict is Verdict.DEFECT
    assert "已证情形" in result.message


# ========== 交叉相交：已证界 ==========


def test_result2(power2, tight3):
    """测试 k|H|/2 与 (|H|/2)^k 的界."""
    result = check_result2(power2, 2)
    assert result.verdict is Verdict.PASS
    assert result.values["sum"] == 4
    assert result.values["star"] == 2

    result = check_result2(tight3, 3)
    assert result.verdict is Verdict.PASS
    assert result.values["product_upper"] == Fraction(64, 27)


def test_result2_budget_skipped(power3):
    """测试超出预算时返回 skipped."""
    ctx = CheckContext(budget=Budget(subsets=16))
    result = check_result2(power3, 2, ctx=ctx)
    assert result.verdict is Verdict.SKIPPED
    assert result.params == {"k": 2}
    assert "超出预算" in result.message


def test_mainthm2_tight_family(tight3):
    """测试单点族：A = H 处取等是允许的."""
    result = check_mainthm2(tight3, 1)
    assert result.verdict is Verdict.PASS
    assert result.values["equalities"] == 1
    assert result.values["scanned"] == 16
    assert result.witness["coverage"] == "full"


def test_mainthm2_compressed_families(power2, closure12_13):
    """测试压缩族上不等式严格成立."""
    for family in (power2, closure12_13):
        result = check_mainthm2(family, 1)
        assert result.verdict is Verdict.PASS
        assert result.values["equalities"] == 0


def test_mainthm2_partial_coverage(power3):
    """测试超出预算时随机抽样."""
    ctx = CheckContext(budget=Budget(subsets=2), seed=3, samples=50)
    result = check_mainthm2(power3, 1, ctx=ctx)
    assert result.verdict is Verdict.PASS
    assert result.values["scanned"] == 50
    assert result.witness["coverage"] == "partial"
    assert "部分覆盖" in result.message


def test_mainthm_extremal_configurations(tight3):
    """测试 k = n+1 时单点族的两种极值配置."""
    result = check_mainthm(tight3, 1, 4)
    assert result.verdict is Verdict.PASS
    assert result.values["sum"] == 4
    assert result.values["product"] == 1
    assert result.values["optima"] == 4
    assert result.values["exceptional"] == 1
    assert result.witness["optima"][0] == ["3:0,1,2,4", "3:", "3:", "3:"]


def test_mainthm_above_threshold(tight3, power3):
    """测试 k = n+2 时只有星达到最大和."""
    result = check_mainthm(tight3, 1, 5)
    assert result.verdict is Verdict.PASS
    assert result.values["sum"] == 5
    assert result.values["exceptional"] == 0

    result = check_mainthm(power3, 1, 4)
    assert result.verdict is Verdict.PASS
    assert result.values["product"] == 4**4


def _cross_intersecting(parts):
    return all(a & b for i, p in enumerate(parts) for q in parts[i + 1 :] for a in p for b in q)


@pytest.mark.parametrize("n", [1, 2])
def test_mainthm_product_optima_are_copies(n):
    """测试穷举 k = n+1：积的每个最优配置都是同一最大相交子族的 k 份拷贝."""
    k = n + 1
    for family in (power_set(n), singletons_with_empty(n)):
        subfamilies = [
            tuple(w for i, w in enumerate(family.members) if chosen >> i & 1)
            for chosen in range(1 << len(family))
        ]
        best, attained = 0, []
        for parts in itertools.product(subfamilies, repeat=k):
            if not _cross_intersecting(parts):
                continue
            value = math.prod(len(p) for p in parts)
            if value > best:
                best, attained = value, [parts]
            elif value == best:
                attained.append(parts)
        assert check_mainthm(family, 1, k).values["product"] == best
        lstar = largest_intersecting(family).size
        for parts in attained:
            assert len(set(parts)) == 1
            assert len(parts[0]) == lstar


def test_mainthm_preconditions(tight3, closure12_13):
    """测试 k < n+1 与非压缩族."""
    with pytest.raises(PreconditionError):
        check_mainthm(tight3, 1, 3)
    with pytest.raises(PreconditionError):
        check_mainthm(closure12_13, 2, 4)


def test_beta_bound(tight3, power2):
    """测试 β ≥ 1/(n+1)."""
    result = check_beta_bound(tight3, 1)
    assert result.verdict is Verdict.PASS
    assert result.values == {"beta": Fraction(1, 4), "floor": Fraction(1, 4)}

    result = check_beta_bound(power2, 1)
    assert result.verdict is Verdict.PASS
    assert result.values["beta"] == Fraction(1, 2)
    assert result.witness == {}


def test_beta_bound_defect_carries_kernel(monkeypatch, power2):
    """测试注入的 β 过小：缺陷附带达到最小值的核与子族，复核一致."""
    forced = BetaResult(
        value=Fraction(1, 100),
        kernel=make_family(2, [[1]]),
        subfamily=make_family(2, [[1], [1, 2]]),
    )
    monkeypatch.setattr(checks, "beta_witness", lambda family, budget: forced)
    result = check_beta_bound(power2, 1)
    assert result.verdict is Verdict.DEFECT
    assert result.witness == {"kernel": "2:1", "subfamily": "2:1,3", "ratio": "1/100"}
    assert revalidate(result)


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_powerset(n, k):
    """测试幂集上的和与积."""
    result = check_powerset(n, k)
    assert result.verdict is Verdict.PASS
    half = 2 ** (n - 1)
    assert result.values == {"sum": k * half, "product": half**k}
    assert result.params == {"n": n, "k": k}


# ========== 交叉相交：猜想 ==========


def test_weaksum(power2):
    """测试 k ≥ n+1 时的和."""
    result = check_weaksum(power2, 3)
    assert result.verdict is Verdict.PASS
    assert result.values == {"sum": 6, "expected": 6, "star": 2}
    with pytest.raises(PreconditionError):
        check_weaksum(power2, 2)
    with pytest.raises(PreconditionError):
        check_weaksum(make_family(2, [[]]), 3)


def test_weaksum_synthetic_failure(monkeypatch):
    """测试注入的反例：非压缩且基无公共元素时报告 fail."""
    family = hereditary_closure(make_family(4, [[1, 2], [3, 4]]))
    real = checks.max_cross_sum

    def inflated(fam, k, budget):
        optimum = real(fam, k, budget)
        return replace(optimum, value=optimum.value + 1)

    monkeypatch.setattr(checks, "max_cross_sum", inflated)
    result = check_weaksum(family, 5)
    assert result.verdict is Verdict.FAIL
    assert "assignment" in result.witness


def test_strongsum(power2, tight3):
    """测试最大和由简单配置之一达到."""
    result = check_strongsum(power2, 2)
    assert result.verdict is Verdict.PASS
    assert result.values["threshold"] == Fraction(2)

    result = check_strongsum(tight3, 3)
    assert result.verdict is Verdict.PASS
    assert result.values["expected"] == 4


def test_strongsum_k2_failure_is_defect(monkeypatch):
    """测试 k = 2 的失败一律视为缺陷."""
    family = hereditary_closure(make_family(4, [[1, 2], [3, 4]]))
    real = checks.max_cross_sum

    def inflated(fam, k, budget):
        optimum = real(fam, k, budget)
        return replace(optimum, value=optimum.value + 1)

    monkeypatch.setattr(checks, "max_cross_sum", inflated)
    assert check_strongsum(family, 2).verdict is Verdict.DEFECT
    assert check_strongsum(family, 3).verdict is Verdict.FAIL


def test_prodconj(power2, tight3):
    """测试积猜想：精确与由 k = 2 推出."""
    result = check_prodconj(power2, 2)
    assert result.verdict is Verdict.PASS
    assert result.values["product"] == 4

    result = check_prodconj(tight3, 3)
    assert result.verdict is Verdict.PASS
    assert result.message == "由 k = 2 的精确结果推出"


# ========== 结果、汇总与复核 ==========


def test_revalidate_reproduces_results(triangle, tight3):
    """测试复核：注入的反例可由见证重现."""
    failure = check_chvatal(triangle)
    assert revalidate(failure)
    assert revalidate(check_mainthm(tight3, 1, 4))


def test_revalidate_detects_tampering(triangle, power2):
    """测试篡改的记录复核不一致."""
    tampered = replace(check_chvatal(triangle), verdict=Verdict.PASS)
    assert not revalidate(tampered)

    tampered = replace(check_berge(power2), witness={"pairs": []})
    assert not revalidate(tampered)

    with pytest.raises(KeyError):
        revalidate(replace(check_berge(power2), check_name="nope"))


def test_sort_key_orders_results(power2, tight3):
    """测试确定性排序键."""
    a = check_weaksum(power2, 4)
    b = check_weaksum(power2, 3)
    c = check_berge(tight3)
    ordered = sorted([a, b, c], key=lambda r: r.sort_key)
    assert [r.check_name for r in ordered] == ["berge", "weaksum", "weaksum"]
    assert ordered[1].params == {"k": 3}


def _result(verdict: Verdict) -> CheckResult:
    return CheckResult("berge", 2, "2:0", {}, verdict)


@pytest.mark.parametrize(
    "verdicts,code",
    [
        ([Verdict.PASS, Verdict.SKIPPED], 0),
        ([Verdict.PASS, Verdict.FAIL], 2),
        ([Verdict.FAIL, Verdict.DEFECT], 3),
        ([], 0),
    ],
)
def test_summary_exit_code(verdicts, code):
    """测试退出码：defect 优先于 fail."""
    summary = SweepSummary()
    for verdict in verdicts:
        summary.add(_result(verdict))
    assert summary.exit_code == code
    assert summary.total == len(verdicts)
