"""Bundle expressions and their cohomology spectra."""

from .expr import (
    Assumption,
    BundleExpr,
    Ext,
    Ker,
    Line,
    OmegaP2,
    Sum,
    Twist,
    direct_sum,
    dual_rank2,
    power,
    special_c,
    twist_by,
)
from .parser import format_expr, parse_bundle_expr
from .spectrum import (
    Engine,
    Interval,
    Spectrum,
    default_window,
    ext_group_dim,
    narrow_by_chi,
    parse_window,
    ses_unknown,
    spectrum,
)

__all__ = [
    "Assumption",
    "BundleExpr",
    "Engine",
    "Ext",
    "Interval",
    "Ker",
    "Line",
    "OmegaP2",
    "Spectrum",
    "Sum",
    "Twist",
    "default_window",
    "direct_sum",
    "dual_rank2",
    "ext_group_dim",
    "format_expr",
    "narrow_by_chi",
    "parse_bundle_expr",
    "parse_window",
    "power",
    "ses_unknown",
    "special_c",
    "spectrum",
    "twist_by",
]
