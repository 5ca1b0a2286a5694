"""Numerical laboratory for Orlicz-function calculus on the unit circle and
unit disk: Luxemburg norms, growth-condition classification of the canonical
circle-to-disk embedding, witness families, and verification suites."""

from .classify import (
    ConditionEvidence,
    InjectionReport,
    QuotientEstimate,
    check_condition,
    check_conjugate_delta2,
    classify_injection,
    estimate_quotient,
)
from .domains import CircleDomain, DiskDomain, circle, disk
from .functions import (
    ArgSquared,
    EvaluationOverflow,
    ExpLogSquared,
    ExpMinusOne,
    ExtrapolationError,
    OrliczFunction,
    PiecewiseAffine,
    PowerFunction,
    SquareComposed,
    arg_square,
    build_counterexample,
    counterexample_delta,
    counterexample_knot_points,
    parse_function_spec,
    scale_argument,
    square_compose,
)
from .grids import GrowthSampleGrid
from .norms import (
    NormResult,
    bergman_norm,
    circle_norm,
    hardy_norm,
    luxemburg_norm,
    modular,
    morse_transue_evidence,
    weak_tail_check,
)
from .suites import (
    SUITE_NAMES,
    CheckRecord,
    SuiteReport,
    run_all_suites,
    run_suite,
    suite_carleson_window,
    suite_contraction,
    suite_counterexample,
    suite_evaluation_bounds,
    suite_kernel_bounds,
    suite_monomial_decay,
    suite_order_boundedness,
)
from .witnesses import (
    EvaluationEnvelope,
    KernelFamily,
    KernelSquared,
    Monomial,
    Polynomial,
    ScaledKernel,
    make_evaluation_envelope,
    make_kernel_family,
    make_kernel_squared,
    make_monomial,
    make_polynomial,
    make_scaled_kernel,
    parse_sampled_spec,
)

__version__ = "0.1.0"
