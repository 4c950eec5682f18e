"""精确极值计算：l(F)、最佳星、β(F)、Berge 配对与交叉相交优化."""

from .cross import (
    CrossWitness,
    Optimum,
    cross_sum_optima,
    make_witness,
    max_cross_product,
    max_cross_sum,
    naive_max_cross_sum,
)
from .intersecting import (
    BetaResult,
    IntersectingResult,
    StarResult,
    best_star,
    beta,
    beta_witness,
    has_star_property,
    largest_intersecting,
    naive_beta,
    naive_largest_intersecting,
)
from .pairing import Pairing, PairingDefectError, berge_pairing, validate_pairing

__all__ = [
    # intersecting
    "IntersectingResult",
    "StarResult",
    "largest_intersecting",
    "naive_largest_intersecting",
    "best_star",
    "has_star_property",
    "BetaResult",
    "beta",
    "beta_witness",
    "naive_beta",
    # pairing
    "Pairing",
    "PairingDefectError",
    "berge_pairing",
    "validate_pairing",
    # cross
    "CrossWitness",
    "Optimum",
    "make_witness",
    "max_cross_sum",
    "cross_sum_optima",
    "naive_max_cross_sum",
    "max_cross_product",
]
