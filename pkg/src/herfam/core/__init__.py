"""集合族核心：类型、谓词、压缩与编码."""

from .codec import (
    FamilyParseError,
    decode_compact,
    encode_compact,
    format_family,
    format_hex,
    parse_any,
    parse_family,
    parse_hex,
    read_family,
)
from .family import (
    MAX_GROUND,
    FamilyError,
    GroundSet,
    KernelSplit,
    SetFamily,
    SubsetWord,
    are_cross_intersecting,
    bases_of,
    bases_share_element,
    bit,
    compress,
    delta,
    elements_of,
    empty_family,
    family_from_words,
    format_set,
    hereditary_closure,
    is_centred,
    is_compressed_wrt,
    is_hereditary,
    is_intersecting,
    is_left_compressed,
    make_family,
    power_set,
    singletons_with_empty,
    split_kernel,
    star,
    uniform_levels,
    union_support,
)

__all__ = [
    "MAX_GROUND",
    "FamilyError",
    "FamilyParseError",
    "GroundSet",
    "KernelSplit",
    "SetFamily",
    "SubsetWord",
    "are_cross_intersecting",
    "bases_of",
    "bases_share_element",
    "bit",
    "compress",
    "decode_compact",
    "delta",
    "elements_of",
    "empty_family",
    "encode_compact",
    "family_from_words",
    "format_family",
    "format_hex",
    "format_set",
    "hereditary_closure",
    "is_centred",
    "is_compressed_wrt",
    "is_hereditary",
    "is_intersecting",
    "is_left_compressed",
    "make_family",
    "parse_any",
    "parse_family",
    "parse_hex",
    "power_set",
    "read_family",
    "singletons_with_empty",
    "split_kernel",
    "star",
    "uniform_levels",
    "union_support",
]
