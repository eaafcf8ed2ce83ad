"""Bounds on the reliability function of the 5-ary typewriter channel.

The channel sends symbol i to i or i+1 (mod 5) with probability 1/2 each.
This package evaluates lower and upper bounds on its error exponent E(R)
between the zero-error capacity log2(sqrt 5) and the Shannon capacity
log2(5/2), builds the code constructions behind the lower bounds, solves
the linear programs behind the upper bounds, and cross-checks everything
with exact small cases and Monte Carlo simulation.
"""

__version__ = "0.1.0"

from .channel import SimResult, confusable, confusion_prob, ml_decode, monte_carlo_pe
from .construction import (
    INF,
    ExponentResult,
    Spectrum,
    StructuredGenerator,
    gv_delta,
    hamming_spectrum,
    optimize_exponent,
    structured_weight,
    union_bound,
    weight_spectrum,
    word_distance,
    word_weight,
)
from .curves import (
    CAPACITY,
    GV_SLOPE,
    SL_STAR_FACTOR,
    ZERO_ERROR_CAPACITY,
    delta_of_r,
    e_gv_star,
    e_lp1,
    e_rex,
    e_sl,
    e_sl_star,
    r_lp1,
    r_star,
    sample_curves,
)
from .expurgated import (
    critical_rho,
    e_ex2,
    ex_exponent_inf,
    q_form,
    zero_error_code2,
)
from .fourier import GroupFunction, dft, idft, lovasz_assignment, lovasz_bound
from .lpbound import (
    QPRIME,
    LPSolution,
    composite_bound,
    max_code,
    mrrw_certificate,
    mrrw_params,
    solve_distance_lp,
    verify_certificate,
)
from .scalars import krawtchouk, qary_entropy
from .verification import run_all, run_suite

__all__ = [
    "__version__",
    "INF",
    "CAPACITY",
    "ZERO_ERROR_CAPACITY",
    "GV_SLOPE",
    "SL_STAR_FACTOR",
    "QPRIME",
    "e_rex",
    "e_sl",
    "e_sl_star",
    "e_gv_star",
    "e_lp1",
    "r_lp1",
    "r_star",
    "delta_of_r",
    "sample_curves",
    "critical_rho",
    "ex_exponent_inf",
    "e_ex2",
    "q_form",
    "zero_error_code2",
    "word_distance",
    "word_weight",
    "structured_weight",
    "StructuredGenerator",
    "Spectrum",
    "weight_spectrum",
    "hamming_spectrum",
    "union_bound",
    "gv_delta",
    "optimize_exponent",
    "ExponentResult",
    "GroupFunction",
    "dft",
    "idft",
    "lovasz_assignment",
    "lovasz_bound",
    "LPSolution",
    "solve_distance_lp",
    "composite_bound",
    "mrrw_certificate",
    "mrrw_params",
    "verify_certificate",
    "max_code",
    "SimResult",
    "confusable",
    "confusion_prob",
    "ml_decode",
    "monte_carlo_pe",
    "krawtchouk",
    "qary_entropy",
    "run_suite",
    "run_all",
]
