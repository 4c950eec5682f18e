"""遗传族的 Berge 配对：拆成互不相交的集合对，|H| 为奇数时另余 ∅.

在不交图（顶点为成员，边连接不交的两个成员）上求最大基数匹配.
对遗传族，完美匹配（奇数时去掉 ∅ 后）一定存在；找不到即为库缺陷.
"""

from dataclasses import dataclass

import networkx as nx

from herfam.core.family import FamilyError, SetFamily, SubsetWord, format_set, is_hereditary
from herfam.utils.logging import get_logger

logger = get_logger("herfam.solvers.pairing")


class PairingDefectError(RuntimeError):
    """遗传族上找不到合法配对（与已证定理矛盾）."""

    pass


@dataclass(frozen=True, slots=True)
class Pairing:
    """配对结果.

    pairs 中每对 (a, b) 满足 a < b，按 a 升序排列.
    """

    pairs: tuple[tuple[SubsetWord, SubsetWord], ...]
    leftover_empty: bool

    def describe(self) -> list[str]:
        """每对的文本形式，如 "{1} | {2}"."""
        lines = [f"{format_set(a)} | {format_set(b)}" for a, b in self.pairs]
        if self.leftover_empty:
            lines.append("{} (剩余)")
        return lines


def _disjointness_graph(words: tuple[SubsetWord, ...]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(words)
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            if a & b == 0:
                graph.add_edge(a, b)
    return graph


def berge_pairing(family: SetFamily) -> Pairing:
    """求遗传族 H 的 Berge 配对.

    Raises:
        FamilyError: H 为空或不是遗传族
        PairingDefectError: 未找到覆盖全部（奇数时除 ∅ 外）成员的匹配
    """
    if family.is_empty():
        raise FamilyError("Berge 配对要求 H 非空")
    if not is_hereditary(family):
        raise FamilyError(f"Berge 配对要求遗传族: {family}")

    leftover_empty = len(family) % 2 == 1
    words = family.members[1:] if leftover_empty else family.members
    graph = _disjointness_graph(words)
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    if 2 * len(matching) != len(words):
        raise PairingDefectError(
            f"匹配只覆盖 {2 * len(matching)}/{len(words)} 个成员: {family}"
        )

    pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in matching))
    pairing = Pairing(pairs=pairs, leftover_empty=leftover_empty)
    problems = validate_pairing(family, pairing)
    if problems:
        raise PairingDefectError("; ".join(problems))
    logger.debug(f"配对 |H|={len(family)}: {len(pairs)} 对")
    return pairing


def validate_pairing(family: SetFamily, pairing: Pairing) -> list[str]:
    """检查配对的全部不变量，返回违例描述（空列表表示合法）."""
    problems: list[str] = []
    seen: list[SubsetWord] = []
    for a, b in pairing.pairs:
        if a & b:
            problems.append(f"{format_set(a)} 与 {format_set(b)} 相交")
        if not a < b:
            problems.append(f"配对未按 a < b 排列: {format_set(a)}, {format_set(b)}")
        seen.extend((a, b))
    if pairing.leftover_empty:
        seen.append(0)
    if len(set(seen)) != len(seen):
        problems.append("存在重复使用的成员")
    if sorted(set(seen)) != list(family.members):
        problems.append("配对与剩余成员未恰好覆盖源族")
    if pairing.leftover_empty != (len(family) % 2 == 1):
        problems.append(f"leftover_empty={pairing.leftover_empty} 与 |H|={len(family)} 的奇偶性不符")
    if list(pairing.pairs) != sorted(pairing.pairs):
        problems.append("配对未排序")
    return problems
