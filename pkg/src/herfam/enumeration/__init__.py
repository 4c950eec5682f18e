"""遗传族的穷举生成."""

from .antichains import (
    EMPTY_PARTITION,
    MAX_SWEEP_N,
    AntichainIter,
    check_sweep_n,
    enum_all_families,
    enum_antichains,
    naive_antichain_count,
    partition_keys,
    random_family,
)
from .canonical import CanonicalKey, canonical_key, is_canonical_representative
from .filters import FamilyFilter, make_filter, parse_atom
from .hereditary import enum_hereditary

__all__ = [
    "EMPTY_PARTITION",
    "MAX_SWEEP_N",
    "AntichainIter",
    "CanonicalKey",
    "FamilyFilter",
    "canonical_key",
    "check_sweep_n",
    "enum_all_families",
    "enum_antichains",
    "enum_hereditary",
    "is_canonical_representative",
    "make_filter",
    "naive_antichain_count",
    "parse_atom",
    "partition_keys",
    "random_family",
]
