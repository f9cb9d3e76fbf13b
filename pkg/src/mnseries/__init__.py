"""Exact arithmetic on truncated Mal'cev-Neumann series.

The package implements finite-support generalized power series over three
concrete valued coefficient domains, in formal (t-adic) and arithmetic
(p-adic, with carrying) modes, together with the Gauss-valuation toolkit,
Newton polygons with exact Legendre transforms, and the discrete
approximation machinery that realizes prescribed convex decay profiles
and separates them asymptotically.
"""

from .domains import MixedPoly, PadicDigits, PerfectPoly, XPoly, ordp
from .errors import (
    DomainError,
    MNSeriesError,
    ModeMismatchError,
    ParseError,
    PrecisionLossError,
    ZeroSeriesError,
)
from .grammar import format_series, parse_series
from .polygon import (
    NPFReport,
    PLConvexFn,
    legendre_eval,
    lower_hull,
    newton_polygon,
    sup_distance,
    tropical_add,
    tropical_min,
    verify_npf,
)
from .profiles import (
    ApproxCertificate,
    AsymptoticClass,
    ChainReport,
    PowerLaw,
    ProfileElement,
    RationalInterval,
    TargetError,
    chain_report,
    classify,
    deviation_within_bound,
    discretely_approximate,
    in_m,
    inverse_legendre_power,
    iroot,
    legendre_power_law,
    materialize,
    supremum_example,
)
from .series import (
    CarryTrace,
    Mode,
    Series,
    add,
    argnorm,
    bar_witness,
    box_witness,
    canonicalize,
    gauss_valuation,
    localize,
    mul,
    restrict,
    term_values,
)
from .values import INF, Infinity, Value, as_exponent, as_gauss_param, format_value, is_finite
from .verify import SuiteResult, format_report, run_all, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Infinity",
    "Value",
    "as_exponent",
    "as_gauss_param",
    "format_value",
    "is_finite",
    "XPoly",
    "PerfectPoly",
    "PadicDigits",
    "MixedPoly",
    "ordp",
    "Mode",
    "Series",
    "CarryTrace",
    "add",
    "mul",
    "canonicalize",
    "gauss_valuation",
    "argnorm",
    "restrict",
    "box_witness",
    "bar_witness",
    "localize",
    "term_values",
    "PLConvexFn",
    "NPFReport",
    "lower_hull",
    "newton_polygon",
    "legendre_eval",
    "tropical_min",
    "tropical_add",
    "sup_distance",
    "verify_npf",
    "PowerLaw",
    "AsymptoticClass",
    "ProfileElement",
    "RationalInterval",
    "ApproxCertificate",
    "ChainReport",
    "TargetError",
    "iroot",
    "inverse_legendre_power",
    "legendre_power_law",
    "materialize",
    "deviation_within_bound",
    "discretely_approximate",
    "classify",
    "chain_report",
    "in_m",
    "supremum_example",
    "parse_series",
    "format_series",
    "MNSeriesError",
    "DomainError",
    "ModeMismatchError",
    "PrecisionLossError",
    "ZeroSeriesError",
    "ParseError",
    "SuiteResult",
    "run_suite",
    "run_all",
    "suite_names",
    "format_report",
]
