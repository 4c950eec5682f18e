"""交叉相交 k 元组的最大和与最大积.

最大和的约化：对任意 A ⊆ H，取 A₁ = A、A₂ = … = A_k = A* 得到交叉相交的 k 元组，
其和为 k|A*| + |A′|；反过来任一交叉相交 k 元组的和不超过其并的这一值.
再固定核 K（相交子族），A 最大取 N(K) = 与 K 中每个成员都相交的成员，
于是最大和 = max_K (k−1)|K| + |N(K)|，K 取遍相交子族.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from herfam.core.family import FamilyError, KernelSplit, SetFamily, split_kernel
from herfam.utils.budget import DEFAULT_BUDGET, Budget
from herfam.utils.logging import get_logger

from .graph import iter_bits, low_bits, meet_masks
from .intersecting import largest_intersecting, nonempty_pool, strict_adjacency

logger = get_logger("herfam.solvers.cross")

# k = 2 精确积搜索的族大小上限
EXACT_PRODUCT_LIMIT = 16


@dataclass(frozen=True, slots=True)
class CrossWitness:
    """一个交叉相交 k 元组及其并的核分解."""

    assignment: tuple[SetFamily, ...]
    union: SetFamily
    split: KernelSplit

    @property
    def total(self) -> int:
        return sum(len(f) for f in self.assignment)

    @property
    def product(self) -> int:
        return reduce(lambda acc, f: acc * len(f), self.assignment, 1)


@dataclass(frozen=True, slots=True)
class Optimum:
    """优化结果.

    value 为可达到的值（精确时即最优值）；upper 为 None 表示精确，
    否则最优值位于区间 [value, upper].
    """

    value: int
    witness: CrossWitness
    upper: Fraction | None = None

    @property
    def exact(self) -> bool:
        return self.upper is None


def make_witness(assignment: tuple[SetFamily, ...]) -> CrossWitness:
    """由 k 元组构造见证."""
    ground = assignment[0].ground
    union = SetFamily(ground, tuple(sorted({w for f in assignment for w in f.members})))
    return CrossWitness(assignment=assignment, union=union, split=split_kernel(union))


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise FamilyError(f"k 必须是 ≥ 2 的整数: {k!r}")


def _pick(family: SetFamily, mask: int) -> SetFamily:
    return SetFamily(family.ground, tuple(family.members[i] for i in iter_bits(mask)))


def _kernel_search(family: SetFamily, k: int) -> tuple[int, list[int]]:
    """枚举相交子族 K，返回最大值及全部达到最大值的 N(K) 位集."""
    masks = meet_masks(family.members)
    adj = strict_adjacency(masks)
    weight = k - 1
    best = -1
    optima: list[int] = []

    def expand(size: int, cand: int, common: int) -> None:
        nonlocal best, optima
        value = weight * size + common.bit_count()
        if value > best:
            best, optima = value, [common]
        elif value == best:
            optima.append(common)
        for v in iter_bits(cand):
            nxt_cand = cand & adj[v] & ~low_bits(v + 1)
            nxt_common = common & masks[v]
            bound = weight * (size + 1 + nxt_cand.bit_count()) + nxt_common.bit_count()
            if bound < best:
                continue
            expand(size + 1, nxt_cand, nxt_common)

    expand(0, nonempty_pool(family), low_bits(len(family)))
    return best, optima


def _sum_witness(family: SetFamily, k: int, union_mask: int) -> CrossWitness:
    union = _pick(family, union_mask)
    split = split_kernel(union)
    assignment = (union, *([split.kernel] * (k - 1)))
    return CrossWitness(assignment=assignment, union=union, split=split)


def cross_sum_optima(family: SetFamily, k: int, budget: Budget = DEFAULT_BUDGET) -> list[CrossWitness]:
    """全部达到最大和的配置（按并族的成员元组升序）.

    每个配置的并 A 满足 A = N(A*)，不同配置的核两两不同.
    """
    _check_k(k)
    budget.require_subsets(len(family), "交叉和搜索")
    _, optima = _kernel_search(family, k)
    witnesses = [_sum_witness(family, k, mask) for mask in set(optima)]
    witnesses.sort(key=lambda w: w.union.members)
    return witnesses


def max_cross_sum(family: SetFamily, k: int, budget: Budget = DEFAULT_BUDGET) -> Optimum:
    """max Σ|A_i|，A_i ⊆ H 交叉相交.

    见证为字典序最小的达到最优的并 A，分配为 (A, A*, …, A*).

    Raises:
        FamilyError: k < 2
        BudgetExceededError: 2^|H| 超出子集预算
    """
    optima = cross_sum_optima(family, k, budget)
    witness = optima[0]
    logger.debug(f"交叉和 k={k}, |H|={len(family)}: {witness.total}（{len(optima)} 个最优配置）")
    return Optimum(value=witness.total, witness=witness)


def naive_max_cross_sum(family: SetFamily, k: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """逐一枚举 k 元组的预言机.

    第 j 个族只在与前面全部已选成员都相交的成员中选取，其余 k 元组不是交叉相交的.

    Raises:
        BudgetExceededError: (2^|H|)^k 超出元组预算
    """
    _check_k(k)
    budget.require_tuples(len(family), k, "朴素交叉和枚举")
    members = family.members
    full = low_bits(len(members))
    meets = [sum(1 << j for j, b in enumerate(members) if a & b) for a in members]

    def allowed_after(chosen: int, allowed: int) -> int:
        for i in iter_bits(chosen):
            allowed &= meets[i]
        return allowed

    def best_from(depth: int, allowed: int) -> int:
        if depth == k:
            return 0
        best = 0
        sub = allowed
        while True:
            value = sub.bit_count() + best_from(depth + 1, allowed_after(sub, allowed))
            best = max(best, value)
            if sub == 0:
                break
            sub = (sub - 1) & allowed
        return best

    return best_from(0, full)


def _exact_pair_product(family: SetFamily) -> tuple[int, int, int]:
    """k = 2：枚举 A₁，A₂ 取 N(A₁)，返回 (最优积, A₁ 位集, A₂ 位集).

    并列时取 (A₁, A₂) 成员元组字典序最小者.
    """
    masks = meet_masks(family.members)
    m = len(family)
    best = (-1, 0, 0)
    best_key: tuple[tuple[int, ...], tuple[int, ...]] = ((), ())

    def key(first: int, second: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return _pick(family, first).members, _pick(family, second).members

    def expand(idx: int, chosen: int, common: int) -> None:
        nonlocal best, best_key
        if (chosen.bit_count() + (m - idx)) * common.bit_count() < best[0]:
            return
        if idx == m:
            value = chosen.bit_count() * common.bit_count()
            if value > best[0] or (value == best[0] and key(chosen, common) < best_key):
                best, best_key = (value, chosen, common), key(chosen, common)
            return
        expand(idx + 1, chosen | (1 << idx), common & masks[idx])
        expand(idx + 1, chosen, common)

    expand(0, 0, low_bits(m))
    return best


def max_cross_product(family: SetFamily, k: int, budget: Budget = DEFAULT_BUDGET) -> Optimum:
    """max Π|A_i|，A_i ⊆ H 交叉相交（允许空族，积为 0）.

    k = 2 且 |H| ≤ 16 时精确枚举；否则用证书：若最大和 = k·l(H)，由算术-几何平均
    不等式积不超过 l^k 且 k 个最大相交子族达到它；不然返回区间 [l^k, (最大和/k)^k].

    Raises:
        FamilyError: k < 2
        BudgetExceededError: 超出预算
    """
    _check_k(k)
    sum_max = max_cross_sum(family, k, budget).value
    am_gm = Fraction(sum_max, k) ** k

    if k == 2 and len(family) <= EXACT_PRODUCT_LIMIT:
        value, first, second = _exact_pair_product(family)
        if value > am_gm:
            raise RuntimeError(f"积 {value} 超过算术-几何平均上界 {am_gm}: {family}")
        witness = make_witness((_pick(family, first), _pick(family, second)))
        return Optimum(value=value, witness=witness)

    intersecting = largest_intersecting(family)
    lower = intersecting.size**k
    witness = make_witness(tuple([intersecting.witness] * k))
    if lower > am_gm:
        raise RuntimeError(f"l^k = {lower} 超过算术-几何平均上界 {am_gm}: {family}")
    if sum_max == k * intersecting.size:
        return Optimum(value=lower, witness=witness)
    logger.debug(f"积证书不精确: [{lower}, {am_gm}]")
    return Optimum(value=lower, witness=witness, upper=am_gm)
