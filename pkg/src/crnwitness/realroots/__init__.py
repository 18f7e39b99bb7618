"""Exact univariate polynomial algebra and real-root tools."""

from ._backend import BACKEND
from .gfamily import (
    GFamily,
    GFamilyError,
    SplitBudgetExceeded,
    double_root_family,
    gfamily_expand,
    gfamily_perturb,
    make_simple,
    normalize_mu,
    perturbation_slope,
    split_multiplicities,
)
from .poly import UniPoly, format_rational, parse_rational, squarefree_decomposition
from .sturm import (
    DEFAULT_WIDTH,
    Interval,
    RootInterval,
    RootReport,
    StepBudgetExceeded,
    cauchy_bound,
    count_roots_squarefree,
    isolate_roots,
    sturm_chain,
    sturm_count,
)

__all__ = [
    "BACKEND",
    "DEFAULT_WIDTH",
    "GFamily",
    "GFamilyError",
    "Interval",
    "RootInterval",
    "RootReport",
    "SplitBudgetExceeded",
    "StepBudgetExceeded",
    "UniPoly",
    "cauchy_bound",
    "count_roots_squarefree",
    "double_root_family",
    "format_rational",
    "gfamily_expand",
    "gfamily_perturb",
    "isolate_roots",
    "make_simple",
    "normalize_mu",
    "parse_rational",
    "perturbation_slope",
    "split_multiplicities",
    "squarefree_decomposition",
    "sturm_chain",
    "sturm_count",
]
