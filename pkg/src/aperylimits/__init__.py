"""Experimental-mathematics toolkit for Apéry limits of P-recursive sequences.

The package chains five independent capabilities:

- exact P-recurrence iteration over big rationals (``recurrences``),
- recurrence guessing from terms by exact linear algebra (``guess``),
- limit extraction with convergence-rate diagnostics (``limits``),
- constant recognition via PSLQ integer-relation detection (``identify``),
- reference constants and a decimal big-real tower (``constants``/``bigreal``).

On top sit the concrete experiments: the classical zeta(3) ratio, binomial
power-sum limits, weighted-average sums, and the cubic/quadratic
contour-integral families with their exact cubic-field postscript checks.
"""

from .bigreal import BigReal, log, log10, median, nth_root, sqrt
from .builders import (
    FamilySpec,
    PotentialTable,
    binomial_power_sum,
    binomial_power_sums,
    binomial_row,
    family_terms,
    potential,
    weighted_potential_sum,
    wz_form_components,
)
from .constants import clear_cache, pi, zeta2, zeta3, zeta3_fraction
from .errors import (
    DivisionByZeroSolution,
    DomainError,
    ExperimentError,
    InitialConditionsUnsolvable,
    InputFormatError,
    InsufficientTerms,
    MultipleRealRoots,
    NonInvertibleDenominator,
    NonpositiveDelta,
    NotFound,
    PrecisionExhausted,
    SingularLeadingCoefficient,
    ZeroDenominator,
)
from .experiments import (
    CSReport,
    WeightedAverageReport,
    Zeta3Report,
    cs_run,
    theorem1_run,
    zeta3_run,
)
from .families import (
    CubicFieldElement,
    FamilyReport,
    alpha_element,
    cubic_poly,
    kappa,
    kappa_applies,
    quadratic_closed_form,
    quadratic_poly,
    real_root,
    run_family,
    verify_root_identity,
)
from .guess import (
    fit_recurrence,
    guess_common_recurrence,
    guess_recurrence,
    minimal_recurrence,
    terms_needed,
)
from .identify import (
    AlgebraicCandidate,
    IntegerRelation,
    LinearMatch,
    RelationSearch,
    identify_algebraic,
    identify_linear,
    pslq,
)
from .limits import (
    ConvergenceReport,
    IntegerizedPair,
    apery_limit,
    convergence_report,
    delta_estimate,
    error_sequence,
    integerize,
    integerize_sequence,
    measure_from_delta,
)
from .rationals import Rational, rational
from .recurrences import (
    PolyInt,
    PRecurrence,
    RationalSequence,
    ZETA3_DENOMINATOR_INIT,
    ZETA3_NUMERATOR_INIT,
    iterate,
    residual,
    zeta3_recurrence,
)

__all__ = [
    "AlgebraicCandidate",
    "BigReal",
    "CSReport",
    "ConvergenceReport",
    "CubicFieldElement",
    "DivisionByZeroSolution",
    "DomainError",
    "ExperimentError",
    "FamilyReport",
    "FamilySpec",
    "InitialConditionsUnsolvable",
    "InputFormatError",
    "InsufficientTerms",
    "IntegerRelation",
    "IntegerizedPair",
    "LinearMatch",
    "MultipleRealRoots",
    "NonInvertibleDenominator",
    "NonpositiveDelta",
    "NotFound",
    "PRecurrence",
    "PolyInt",
    "PotentialTable",
    "PrecisionExhausted",
    "Rational",
    "RationalSequence",
    "RelationSearch",
    "SingularLeadingCoefficient",
    "WeightedAverageReport",
    "ZETA3_DENOMINATOR_INIT",
    "ZETA3_NUMERATOR_INIT",
    "ZeroDenominator",
    "Zeta3Report",
    "alpha_element",
    "apery_limit",
    "binomial_power_sum",
    "binomial_power_sums",
    "binomial_row",
    "clear_cache",
    "convergence_report",
    "cs_run",
    "cubic_poly",
    "delta_estimate",
    "error_sequence",
    "family_terms",
    "fit_recurrence",
    "guess_common_recurrence",
    "guess_recurrence",
    "identify_algebraic",
    "identify_linear",
    "integerize",
    "integerize_sequence",
    "iterate",
    "kappa",
    "kappa_applies",
    "log",
    "log10",
    "measure_from_delta",
    "median",
    "minimal_recurrence",
    "nth_root",
    "pi",
    "potential",
    "pslq",
    "quadratic_closed_form",
    "quadratic_poly",
    "rational",
    "real_root",
    "residual",
    "run_family",
    "sqrt",
    "terms_needed",
    "theorem1_run",
    "verify_root_identity",
    "weighted_potential_sum",
    "wz_form_components",
    "zeta2",
    "zeta3",
    "zeta3_fraction",
    "zeta3_recurrence",
    "__version__",
]

__version__ = "0.1.0"
