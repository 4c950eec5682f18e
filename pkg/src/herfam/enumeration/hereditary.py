"""遗传族流：反链 → 闭包 → 过滤（可选同构约化）."""

from collections.abc import Iterator, Sequence

from herfam.core.family import SetFamily, hereditary_closure
from herfam.utils.logging import get_logger

from .antichains import enum_antichains
from .canonical import is_canonical_representative
from .filters import make_filter

logger = get_logger("herfam.enumeration")


def enum_hereditary(
    n: int,
    filter: Sequence[str] | None = None,
    *,
    first: int | None = None,
    reduce_isomorphic: bool = False,
    allow_large: bool = False,
) -> Iterator[SetFamily]:
    """[n] 上全部遗传族（按其基反链的顺序），经过滤后产出.

    Args:
        n: 基集大小
        filter: 过滤原子列表
        first: 反链分区键（见 partition_keys）
        reduce_isomorphic: 只保留同构类的规范代表
        allow_large: 放行 n = 6

    Raises:
        FamilyError: n 越界或未知过滤原子
    """
    predicate = make_filter(filter)
    antichains = enum_antichains(n, first=first, allow_large=allow_large)
    kept = 0
    for antichain in antichains:
        family = hereditary_closure(antichain)
        if not predicate(family):
            continue
        if reduce_isomorphic and not is_canonical_representative(family):
            continue
        kept += 1
        yield family
    logger.debug(f"n={n} 分区 {first}: 产出 {kept} 个遗传族")
