"""定理与猜想的检查、注册表与扫描."""

from .checks import (
    check_berge,
    check_bergecor,
    check_bergeprop,
    check_beta_bound,
    check_chvatal,
    check_complemma,
    check_mainthm,
    check_mainthm2,
    check_powerset,
    check_prodconj,
    check_result2,
    check_snevily,
    check_strongsum,
    check_weaksum,
    revalidate,
)
from .registry import CheckRegistry, CheckSpec, CheckStatus, ParamKind, registry
from .result import (
    DEFAULT_CONTEXT,
    CheckContext,
    CheckResult,
    PreconditionError,
    SweepSummary,
    Verdict,
)
from .sweep import SweepUnit, plan_units, run_sweep, run_unit

__all__ = [
    # result
    "Verdict",
    "CheckResult",
    "CheckContext",
    "DEFAULT_CONTEXT",
    "PreconditionError",
    "SweepSummary",
    # registry
    "CheckRegistry",
    "CheckSpec",
    "CheckStatus",
    "ParamKind",
    "registry",
    # checks
    "check_complemma",
    "check_berge",
    "check_bergecor",
    "check_bergeprop",
    "check_snevily",
    "check_chvatal",
    "check_result2",
    "check_mainthm2",
    "check_mainthm",
    "check_beta_bound",
    "check_powerset",
    "check_weaksum",
    "check_strongsum",
    "check_prodconj",
    "revalidate",
    # sweep
    "SweepUnit",
    "plan_units",
    "run_sweep",
    "run_unit",
]
