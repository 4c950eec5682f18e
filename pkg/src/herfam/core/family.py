"""集合族代数：构造、遗传结构、星、压缩与核分解.

子集以 n 位整数字（SubsetWord）编码：元素 i 对应第 i-1 位.
族按字的数值升序规范存储，所有值构造后不可变.
"""

from bisect import bisect_left
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import reduce

# 基集大小上限
MAX_GROUND = 20

# 子集字（第 i-1 位表示元素 i）
SubsetWord = int


class FamilyError(ValueError):
    """集合族输入错误（n 越界、元素越界、x = y、基集不一致等）."""

    pass


@dataclass(frozen=True, slots=True)
class GroundSet:
    """基集 [n] = {1, ..., n}."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise FamilyError(f"n 必须是整数: {self.n!r}")
        if not 1 <= self.n <= MAX_GROUND:
            raise FamilyError(f"n 超出范围 [1, {MAX_GROUND}]: {self.n}")

    @property
    def full(self) -> SubsetWord:
        """[n] 本身."""
        return (1 << self.n) - 1

    def elements(self) -> range:
        """元素 1..n."""
        return range(1, self.n + 1)

    def check_element(self, x: int) -> None:
        """校验 x ∈ [n]."""
        if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= self.n:
            raise FamilyError(f"元素 {x!r} 不在 [1, {self.n}] 中")

    def check_word(self, word: SubsetWord) -> None:
        """校验字不含位置 ≥ n 的位."""
        if word < 0 or word >> self.n:
            raise FamilyError(f"子集字 {word:#x} 超出基集 [{self.n}]")

    def word(self, elements: Iterable[int]) -> SubsetWord:
        """元素列表 → 子集字."""
        bits = 0
        for x in elements:
            self.check_element(x)
            bits |= 1 << (x - 1)
        return bits


def elements_of(word: SubsetWord) -> tuple[int, ...]:
    """子集字 → 升序元素元组."""
    out = []
    i = 1
    while word:
        if word & 1:
            out.append(i)
        word >>= 1
        i += 1
    return tuple(out)


def format_set(word: SubsetWord) -> str:
    """子集字 → "{1,3}" 文本."""
    return "{" + ",".join(str(x) for x in elements_of(word)) + "}"


def bit(x: int) -> SubsetWord:
    """元素 x 对应的单元素字."""
    return 1 << (x - 1)


@dataclass(frozen=True, slots=True)
class SetFamily:
    """[n] 上的规范集合族（成员严格递增）."""

    ground: GroundSet
    members: tuple[SubsetWord, ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for word in self.members:
            self.ground.check_word(word)
            if word <= prev:
                raise FamilyError("成员必须严格递增")
            prev = word

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SubsetWord]:
        return iter(self.members)

    def __contains__(self, word: object) -> bool:
        if not isinstance(word, int):
            return False
        idx = bisect_left(self.members, word)
        return idx < len(self.members) and self.members[idx] == word

    def __str__(self) -> str:
        return "{" + ", ".join(format_set(w) for w in self.members) + "}"

    def with_members(self, words: Iterable[SubsetWord]) -> "SetFamily":
        """同一基集上的新族（自动去重排序）."""
        return SetFamily(self.ground, tuple(sorted(set(words))))

    def to_sets(self) -> list[tuple[int, ...]]:
        """成员的元素元组列表."""
        return [elements_of(w) for w in self.members]

    def is_empty(self) -> bool:
        return not self.members


@dataclass(frozen=True, slots=True)
class KernelSplit:
    """族 A 的核分解 (A*, A′).

    witnesses[i] 是源族中与 residue 第 i 个成员不交的最小成员.
    """

    kernel: SetFamily
    residue: SetFamily
    witnesses: tuple[SubsetWord, ...] = field(default=())

    @property
    def source(self) -> SetFamily:
        """kernel ⊎ residue."""
        return self.kernel.with_members(self.kernel.members + self.residue.members)


# ========== 构造 ==========


def make_family(n: int, sets: Iterable[Iterable[int]]) -> SetFamily:
    """由元素列表构造规范族，重复的集合合并.

    Args:
        n: 基集大小，1 ≤ n ≤ 20
        sets: 每个集合的元素列表

    Returns:
        规范 SetFamily

    Raises:
        FamilyError: n 越界或元素越界
    """
    ground = GroundSet(n)
    return SetFamily(ground, tuple(sorted({ground.word(s) for s in sets})))


def family_from_words(n: int | GroundSet, words: Iterable[SubsetWord]) -> SetFamily:
    """由子集字构造规范族."""
    ground = n if isinstance(n, GroundSet) else GroundSet(n)
    return SetFamily(ground, tuple(sorted(set(words))))


def empty_family(n: int | GroundSet) -> SetFamily:
    return family_from_words(n, ())


def power_set(n: int) -> SetFamily:
    """2^[n]."""
    ground = GroundSet(n)
    return SetFamily(ground, tuple(range(1 << n)))


def singletons_with_empty(n: int) -> SetFamily:
    """{∅} ∪ ([n] 选 1)，主不等式的紧族."""
    return family_from_words(n, [0, *(1 << i for i in range(n))])


def uniform_levels(n: int, m: int) -> SetFamily:
    """层 0..m 的并：大小不超过 m 的全部子集."""
    if not 0 <= m <= n:
        raise FamilyError(f"m 超出范围 [0, {n}]: {m}")
    return family_from_words(n, (w for w in range(1 << n) if w.bit_count() <= m))


def _same_ground(families: Sequence[SetFamily]) -> GroundSet:
    grounds = {f.ground for f in families}
    if len(grounds) != 1:
        raise FamilyError(f"基集不一致: {sorted(g.n for g in grounds)}")
    return families[0].ground


# ========== 遗传结构 ==========


def hereditary_closure(bases: SetFamily) -> SetFamily:
    """给定集合的幂集之并（包含它们的最小遗传族）."""
    words: set[SubsetWord] = set()
    for base in bases:
        if base in words:
            continue
        sub = base
        while True:
            words.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & base
    return bases.with_members(words)


def bases_of(family: SetFamily) -> SetFamily:
    """族在包含关系下的极大成员."""
    by_size = sorted(family.members, key=lambda w: (-w.bit_count(), w))
    maximal: list[SubsetWord] = []
    for word in by_size:
        if not any(word & ~m == 0 for m in maximal):
            maximal.append(word)
    return family.with_members(maximal)


def is_hereditary(family: SetFamily) -> bool:
    """每个成员去掉任一元素后仍在族中（等价于 F = closure(bases(F))）."""
    present = set(family.members)
    for word in family.members:
        rest = word
        while rest:
            low = rest & -rest
            if word ^ low not in present:
                return False
            rest ^= low
    return True


def bases_share_element(family: SetFamily) -> SubsetWord:
    """所有基的公共元素（字）；族为空或无公共元素时为 0."""
    if family.is_empty():
        return 0
    return reduce(lambda a, b: a & b, bases_of(family).members)


def union_support(family: SetFamily) -> SubsetWord:
    """U(F)：全部成员之并."""
    return reduce(lambda a, b: a | b, family.members, 0)


def star(family: SetFamily, x: int) -> SetFamily:
    """F⟨x⟩：含 x 的成员."""
    family.ground.check_element(x)
    b = bit(x)
    return SetFamily(family.ground, tuple(w for w in family.members if w & b))


# ========== 相交性 ==========


def is_intersecting(family: SetFamily) -> bool:
    """任意两成员（含同一成员自身）相交；空族视为相交."""
    members = family.members
    if members and members[0] == 0:
        return False
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a & b == 0:
                return False
    return True


def is_centred(family: SetFamily) -> bool:
    """全部成员有公共元素；空族视为 centred."""
    if family.is_empty():
        return True
    return reduce(lambda a, b: a & b, family.members) != 0


def are_cross_intersecting(families: Sequence[SetFamily]) -> bool:
    """来自不同族的任意两集合都相交.

    Raises:
        FamilyError: 族少于 2 个或基集不一致
    """
    if len(families) < 2:
        raise FamilyError(f"至少需要 2 个族: {len(families)}")
    _same_ground(families)
    for i, fam_i in enumerate(families):
        for fam_j in families[i + 1 :]:
            for a in fam_i.members:
                for b in fam_j.members:
                    if a & b == 0:
                        return False
    return True


# ========== 压缩 ==========


def is_compressed_wrt(family: SetFamily, x: int) -> bool:
    """F 关于 x 压缩：x ∈ U(F)，且 y ∈ F、x ∉ F 时 (F \\ {y}) ∪ {x} ∈ F."""
    family.ground.check_element(x)
    bx = bit(x)
    if not union_support(family) & bx:
        return False
    present = set(family.members)
    for word in family.members:
        if word & bx:
            continue
        rest = word
        while rest:
            low = rest & -rest
            if (word ^ low) | bx not in present:
                return False
            rest ^= low
    return True


def is_left_compressed(family: SetFamily) -> bool:
    """对所有 i < j，以 i 替换成员中的 j 后仍在族中."""
    present = set(family.members)
    for word in family.members:
        for j in range(1, family.n):
            bj = 1 << j
            if not word & bj:
                continue
            for i in range(j):
                bi = 1 << i
                if not word & bi and (word ^ bj) | bi not in present:
                    return False
    return True


def delta(word: SubsetWord, x: int, y: int, ground: GroundSet | None = None) -> SubsetWord:
    """δ_{x,y}：y ∈ A 且 x ∉ A 时返回 (A \\ {y}) ∪ {x}，否则返回 A.

    Raises:
        FamilyError: x = y 或元素越界
    """
    if ground is not None:
        ground.check_element(x)
        ground.check_element(y)
        ground.check_word(word)
    elif x < 1 or y < 1:
        raise FamilyError(f"元素必须为正整数: x={x}, y={y}")
    if x == y:
        raise FamilyError(f"x 与 y 必须不同: {x}")
    bx, by = bit(x), bit(y)
    if word & by and not word & bx:
        return (word ^ by) | bx
    return word


def compress(family: SetFamily, x: int, y: int) -> SetFamily:
    """Δ_{x,y}：δ(A) ∉ F 时以 δ(A) 替换 A，否则保留 A；大小不变."""
    ground = family.ground
    ground.check_element(x)
    ground.check_element(y)
    if x == y:
        raise FamilyError(f"x 与 y 必须不同: {x}")
    present = set(family.members)
    out = []
    for word in family.members:
        image = delta(word, x, y)
        out.append(word if image in present else image)
    return family.with_members(out)


def split_kernel(family: SetFamily) -> KernelSplit:
    """核分解：kernel 为与每个成员（含自身）都相交的成员，其余为 residue."""
    members = family.members
    kernel: list[SubsetWord] = []
    residue: list[SubsetWord] = []
    witnesses: list[SubsetWord] = []
    for a in members:
        witness = next((b for b in members if a & b == 0), None)
        if witness is None:
            kernel.append(a)
        else:
            residue.append(a)
            witnesses.append(witness)
    return KernelSplit(
        kernel=SetFamily(family.ground, tuple(kernel)),
        residue=SetFamily(family.ground, tuple(residue)),
        witnesses=tuple(witnesses),
    )
