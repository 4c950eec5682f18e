"""最大相交子族 l(F)、最佳星与 β(F).

相交子族即相交图中的团（∅ 与任何集合都不交，永不入团）.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from herfam.core.family import FamilyError, SetFamily, union_support
from herfam.utils.budget import DEFAULT_BUDGET, Budget
from herfam.utils.logging import get_logger

from .graph import iter_bits, low_bits, max_clique, meet_masks

logger = get_logger("herfam.solvers.intersecting")

# 暴力预言机的族大小上限
NAIVE_LIMIT = 16


@dataclass(frozen=True, slots=True)
class IntersectingResult:
    """l(F) 及一个达到它的相交子族."""

    size: int
    witness: SetFamily


@dataclass(frozen=True, slots=True)
class StarResult:
    """最佳星：中心 x（U(F) = ∅ 时为 None）与星的大小."""

    x: int | None
    size: int


def strict_adjacency(masks: list[int]) -> list[int]:
    """去掉自环的相交图邻接."""
    return [mask & ~(1 << i) for i, mask in enumerate(masks)]


def nonempty_pool(family: SetFamily) -> int:
    """非空成员的索引位集."""
    pool = low_bits(len(family))
    if family.members and family.members[0] == 0:
        pool &= ~1
    return pool


def _pick(family: SetFamily, mask: int) -> SetFamily:
    return SetFamily(family.ground, tuple(family.members[i] for i in iter_bits(mask)))


def largest_intersecting(family: SetFamily) -> IntersectingResult:
    """精确计算 l(F).

    在相交图上做分支定界最大团搜索；见证为按成员顺序字典序最小的最大相交子族.
    """
    adj = strict_adjacency(meet_masks(family.members))
    clique = max_clique(adj, nonempty_pool(family))
    witness = _pick(family, clique)
    return IntersectingResult(size=len(witness), witness=witness)


def naive_largest_intersecting(family: SetFamily) -> int:
    """暴力预言机：从大到小尝试全部子族（|F| ≤ 16）."""
    if len(family) > NAIVE_LIMIT:
        raise FamilyError(f"暴力预言机只支持 |F| ≤ {NAIVE_LIMIT}: {len(family)}")
    members = [w for w in family.members if w]
    for size in range(len(members), 0, -1):
        for combo in combinations(members, size):
            if all(a & b for a, b in combinations(combo, 2)):
                return size
    return 0


def best_star(family: SetFamily) -> StarResult:
    """argmax_{x ∈ U(F)} |F⟨x⟩|，并列取最小 x."""
    support = union_support(family)
    best_x: int | None = None
    best_size = 0
    for x in family.ground.elements():
        b = 1 << (x - 1)
        if not support & b:
            continue
        size = sum(1 for w in family.members if w & b)
        if best_x is None or size > best_size:
            best_x, best_size = x, size
    return StarResult(x=best_x, size=best_size)


def has_star_property(family: SetFamily) -> tuple[bool, int | None]:
    """F 是否有星性质.

    Returns:
        (是否成立, 达到 l(F) 的星中心；U(F) = ∅ 时为 None)
    """
    star = best_star(family)
    if star.x is None:
        return True, None
    lstar = largest_intersecting(family).size
    if star.size == lstar:
        return True, star.x
    return False, None


@dataclass(frozen=True, slots=True)
class BetaResult:
    """β(F) 及达到它的 (K, A)：A = N(K)；K = ∅ 时 A = F，比值为 l/|F|."""

    value: Fraction
    kernel: SetFamily
    subfamily: SetFamily


def beta_witness(family: SetFamily, budget: Budget = DEFAULT_BUDGET) -> BetaResult:
    """β(F)：满足 |A*| + c|A′| ≤ l(F)（对所有 A ⊆ F）且 c ≤ l/|F| 的最大 c.

    对固定核 K，|A′| 最大为 |N(K)| − |K|（N(K) 为与 K 中每个成员都相交的成员），
    取 A = N(K) 即可达到. 因此只需枚举相交子族 K（含 K = ∅，给出 l/|F|）.
    并列时保留先找到的 K.

    Raises:
        FamilyError: F 为空
        BudgetExceededError: 2^|F| 超出子集预算
    """
    if family.is_empty():
        raise FamilyError("β 要求 F 非空")
    budget.require_subsets(len(family), "β 扫描")
    masks = meet_masks(family.members)
    adj = strict_adjacency(masks)
    lstar = largest_intersecting(family).size
    full = low_bits(len(family))

    best = Fraction(lstar, len(family))
    best_kernel, best_common = 0, full
    # (|K|, 候选, N(K), K)
    stack: list[tuple[int, int, int, int]] = [(0, nonempty_pool(family), full, 0)]
    while stack:
        size, cand, common, kernel = stack.pop()
        slack = common.bit_count() - size
        if slack > 0:
            ratio = Fraction(lstar - size, slack)
            if ratio < best:
                best, best_kernel, best_common = ratio, kernel, common
        for v in iter_bits(cand):
            stack.append(
                (size + 1, cand & adj[v] & ~low_bits(v + 1), common & masks[v], kernel | (1 << v))
            )
    logger.debug(f"β = {best} (|F|={len(family)}, l={lstar})")
    return BetaResult(
        value=best,
        kernel=_pick(family, best_kernel),
        subfamily=_pick(family, best_common),
    )


def beta(family: SetFamily, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    """β(F) 的值（见 beta_witness）."""
    return beta_witness(family, budget).value


def naive_beta(family: SetFamily) -> Fraction:
    """直接扫描全部 A ⊆ F 的预言机（|F| ≤ 16）."""
    if family.is_empty():
        raise FamilyError("β 要求 F 非空")
    if len(family) > NAIVE_LIMIT:
        raise FamilyError(f"暴力预言机只支持 |F| ≤ {NAIVE_LIMIT}: {len(family)}")
    lstar = naive_largest_intersecting(family)
    members = family.members
    best = Fraction(lstar, len(members))
    for mask in range(1, 1 << len(members)):
        chosen = [members[i] for i in iter_bits(mask)]
        kernel = sum(1 for a in chosen if all(a & b for b in chosen))
        residue = len(chosen) - kernel
        if residue:
            best = min(best, Fraction(lstar - kernel, residue))
    return best

