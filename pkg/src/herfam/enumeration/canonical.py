"""同构约化：基集置换下的规范键."""

from dataclasses import dataclass
from itertools import permutations

from herfam.core.family import FamilyError, SetFamily, SubsetWord

# n! 扫描的 n 上限
MAX_CANONICAL_N = 8


@dataclass(frozen=True, order=True, slots=True)
class CanonicalKey:
    """全部 n! 个重标号下字典序最小的成员元组."""

    n: int
    words: tuple[SubsetWord, ...]


def _relabel(word: SubsetWord, perm: tuple[int, ...]) -> SubsetWord:
    out = 0
    i = 0
    while word:
        if word & 1:
            out |= 1 << perm[i]
        word >>= 1
        i += 1
    return out


def canonical_key(family: SetFamily) -> CanonicalKey:
    """规范键：两个族键相等当且仅当它们相差一个基集置换.

    Raises:
        FamilyError: n > 8
    """
    n = family.n
    if n > MAX_CANONICAL_N:
        raise FamilyError(f"规范键只支持 n ≤ {MAX_CANONICAL_N}: {n}")
    best = family.members
    for perm in permutations(range(n)):
        image = tuple(sorted(_relabel(w, perm) for w in family.members))
        if image < best:
            best = image
    return CanonicalKey(n=n, words=best)


def is_canonical_representative(family: SetFamily) -> bool:
    """族自身即其同构类的规范代表."""
    return canonical_key(family).words == family.members
