"""2^[n] 中反链的穷举，以及全部子族 / 随机子族的生成.

反链按成员元组的字典序（先序深度优先）产出：每条反链先于其全部扩展.
"""

import random
from collections.abc import Iterator

from herfam.core.family import FamilyError, GroundSet, SetFamily, SubsetWord

# 全量穷举的 n 上限；n = 6 需要显式放行
MAX_SWEEP_N = 5
LARGE_SWEEP_N = 6

# 分区键：只含空反链的分区
EMPTY_PARTITION = -1

# 全部子族 / 暴力计数的 n 上限
MAX_ALL_FAMILIES_N = 3
MAX_NAIVE_COUNT_N = 4


def check_sweep_n(n: int, allow_large: bool = False) -> GroundSet:
    """校验穷举规模.

    Raises:
        FamilyError: n 超出 [1, 5]（allow_large 时为 [1, 6]）
    """
    ground = GroundSet(n)
    limit = LARGE_SWEEP_N if allow_large else MAX_SWEEP_N
    if n > limit:
        hint = "" if allow_large else "（n = 6 需要 allow_large）"
        raise FamilyError(f"反链穷举只支持 n ≤ {limit}: {n}{hint}")
    return ground


def comparable_masks(n: int) -> list[int]:
    """comparable[w]：在 2^n 个位置上标出 w 的全部子集与超集（含 w 本身）."""
    size = 1 << n
    masks = [0] * size
    for w in range(size):
        mask = 0
        for v in range(size):
            if v & w == v or v & w == w:
                mask |= 1 << v
        masks[w] = mask
    return masks


def partition_keys(n: int) -> list[int]:
    """并行划分：按反链的最小成员分区，另加空反链分区."""
    return [EMPTY_PARTITION, *range(1 << n)]


class AntichainIter:
    """2^[n] 上反链的迭代器（显式栈，单消费者）.

    Args:
        n: 基集大小
        first: 只产出最小成员为 first 的反链；EMPTY_PARTITION 只产出空反链；
            None 产出全部
        allow_large: 放行 n = 6
    """

    def __init__(self, n: int, first: int | None = None, allow_large: bool = False) -> None:
        self.ground = check_sweep_n(n, allow_large)
        self._comparable = comparable_masks(n)
        size = 1 << n
        all_words = (1 << size) - 1
        self._stack: list[tuple[tuple[SubsetWord, ...], int]] = []
        if first is None:
            self._stack.append(((), all_words))
        elif first == EMPTY_PARTITION:
            self._stack.append(((), 0))
        else:
            self.ground.check_word(first)
            rest = all_words & ~self._comparable[first] & ~((1 << (first + 1)) - 1)
            self._stack.append(((first,), rest))
        self.yielded = 0

    def __iter__(self) -> "AntichainIter":
        return self

    def __next__(self) -> SetFamily:
        if not self._stack:
            raise StopIteration
        members, cand = self._stack.pop()
        children = []
        rest = cand
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            children.append((members + (w,), rest & ~self._comparable[w]))
        self._stack.extend(reversed(children))
        self.yielded += 1
        return SetFamily(self.ground, members)


def enum_antichains(
    n: int, first: int | None = None, allow_large: bool = False
) -> Iterator[SetFamily]:
    """2^[n] 的全部反链，每条恰好一次，含空反链与 {∅}."""
    return AntichainIter(n, first=first, allow_large=allow_large)


def naive_antichain_count(n: int) -> int:
    """暴力预言机：筛选 2^[n] 的全部子族中两两不可比的（n ≤ 4）."""
    if not 1 <= n <= MAX_NAIVE_COUNT_N:
        raise FamilyError(f"暴力反链计数只支持 1 ≤ n ≤ {MAX_NAIVE_COUNT_N}: {n}")
    size = 1 << n
    count = 0
    for chosen in range(1 << size):
        words = [w for w in range(size) if chosen >> w & 1]
        if all(a & b != a and a & b != b for i, a in enumerate(words) for b in words[i + 1 :]):
            count += 1
    return count


def enum_all_families(n: int) -> Iterator[SetFamily]:
    """2^[n] 的全部子族（n ≤ 3），按位集编号顺序."""
    ground = GroundSet(n)
    if n > MAX_ALL_FAMILIES_N:
        raise FamilyError(f"全部子族枚举只支持 n ≤ {MAX_ALL_FAMILIES_N}: {n}")
    size = 1 << n
    for chosen in range(1 << size):
        yield SetFamily(ground, tuple(w for w in range(size) if chosen >> w & 1))


def random_family(n: int, rng: random.Random, density: float = 0.5) -> SetFamily:
    """每个子集以概率 density 独立入选的随机族."""
    ground = GroundSet(n)
    return SetFamily(ground, tuple(w for w in range(1 << n) if rng.random() < density))
