"""成员索引上的位集图工具.

成员按族的规范顺序编号 0..m-1，图的邻接以 Python 整数位集表示.
"""

from collections.abc import Iterator, Sequence

from herfam.core.family import SubsetWord


def meet_masks(members: Sequence[SubsetWord]) -> list[int]:
    """相交图：第 i 位集的第 j 位为 1 当且仅当 members[i] ∩ members[j] ≠ ∅.

    i = j 时当且仅当成员非空（∅ 与自身不交）.
    """
    masks = []
    for a in members:
        mask = 0
        for j, b in enumerate(members):
            if a & b:
                mask |= 1 << j
        masks.append(mask)
    return masks


def iter_bits(mask: int) -> Iterator[int]:
    """按升序产出位集中的索引."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def low_bits(count: int) -> int:
    """索引 0..count-1 的位集."""
    return (1 << count) - 1


def _color_order(adj: Sequence[int], pool: int) -> tuple[list[int], list[int]]:
    """贪心着色：同色顶点两两不相邻，颜色数是团大小的上界."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    uncolored = pool
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v]
            q &= ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(adj: Sequence[int], pool: int, stop_at: int | None = None) -> int:
    """pool 内最大团的大小（分支定界 + 着色上界）.

    adj[v] 不得包含 v 自身. stop_at 给定时，找到该大小即提前返回.
    """
    best = 0

    def expand(size: int, cand: int) -> bool:
        nonlocal best
        order, colors = _color_order(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= best:
                return False
            v = order[idx]
            nxt = cand & adj[v]
            if nxt:
                if expand(size + 1, nxt):
                    return True
            elif size + 1 > best:
                best = size + 1
                if stop_at is not None and best >= stop_at:
                    return True
            cand &= ~(1 << v)
        return False

    if pool:
        expand(0, pool)
    return best


def lex_least_clique(adj: Sequence[int], pool: int, size: int) -> int:
    """pool 内大小为 size 的字典序最小团（按索引升序比较）.

    逐位贪心：选最小的 v，使得已选集合加 v 仍可扩展到 size.
    """
    chosen = 0
    remaining = size
    cand = pool
    while remaining:
        for v in iter_bits(cand):
            later = cand & adj[v] & ~low_bits(v + 1)
            if remaining == 1 or clique_number(adj, later, stop_at=remaining - 1) >= remaining - 1:
                chosen |= 1 << v
                cand = later
                remaining -= 1
                break
        else:
            raise RuntimeError(f"不存在大小为 {size} 的团")
    return chosen


def max_clique(adj: Sequence[int], pool: int) -> int:
    """pool 内字典序最小的最大团（位集）."""
    size = clique_number(adj, pool)
    if size == 0:
        return 0
    return lex_least_clique(adj, pool, size)
