from .src.data_loader import get_check, get_check_ids, get_registry
from .src.hypersum import (
    CheckResult,
    CongruenceSpec,
    Limit,
    Status,
    eval_sum_mod,
    half_full_agree,
    rhs_residue,
)
from .src.lemmas import LemmaCheck
from .src.oracle import (
    ag_identity_check,
    chu_vandermonde_check,
    pochhammer,
    reduce_mod,
    staver_identity_check,
    sum_exact,
)
from .src.padic import PadicCtx, PadicInt, ValUnit, fermat_quotient, legendre
from .src.series import (
    SERIES,
    DualityPoint,
    duality_map,
    eval_series,
    get_series,
    quadratic_transform_check,
)
from .src.suite import (
    SweepReport,
    run_check,
    status_summary,
    summarise,
    sweep,
    verify_all,
)
from .src.wz import WZ_PAIRS, check_pair, get_pair

__all__ = [
    "get_check",
    "get_check_ids",
    "get_registry",
    "CheckResult",
    "CongruenceSpec",
    "Limit",
    "Status",
    "eval_sum_mod",
    "half_full_agree",
    "rhs_residue",
    "LemmaCheck",
    "ag_identity_check",
    "chu_vandermonde_check",
    "pochhammer",
    "reduce_mod",
    "staver_identity_check",
    "sum_exact",
    "PadicCtx",
    "PadicInt",
    "ValUnit",
    "fermat_quotient",
    "legendre",
    "SERIES",
    "DualityPoint",
    "duality_map",
    "eval_series",
    "get_series",
    "quadratic_transform_check",
    "SweepReport",
    "run_check",
    "status_summary",
    "summarise",
    "sweep",
    "verify_all",
    "WZ_PAIRS",
    "check_pair",
    "get_pair",
]
