"""Rudin-Shapiro autocorrelation tables, matrix recurrence and JSR estimates."""

from .autocorr import (
    AutocorrTable,
    aperiodic_naive,
    aperiodic_table_fast,
    aperiodic_table_naive,
    iter_aperiodic_tables,
    periodic_naive,
    periodic_table,
    periodic_table_naive,
    verify_even_zero,
)
from .hull3d import DegenerateInputError, Polytope3, convex_hull_3d
from .jsr import (
    JsrBracket,
    PolytopeRun,
    ProductWord,
    bnb_bracket,
    invariant_polytope,
    irreducibility_check,
    spectral_radius,
)
from .norms import (
    BoundReport,
    SpectralConstants,
    conjugation_invariance_check,
    diagonalization_residual,
    eigen_constants,
    frobenius_norm,
    katz_constant,
    letter_domination_report,
    lower_bound_ratios,
    lower_bound_value,
    max_ratio,
    max_ratios,
    power_product_norm,
    spectral_norm,
    verify_power_bounds,
)
from .recurrence import (
    MA,
    MB,
    NormalForm,
    NormalFormError,
    ShiftChain,
    check_floor_ceil_identities,
    interval_label,
    nearest_third,
    normal_form,
    shift_chain,
    t_factor,
    v_direct,
    v_product,
    verify_decomposition,
    verify_periodic_formula,
    verify_recurrences,
)
from .sequences import (
    BinarySeq,
    OrderTooLargeError,
    generalized_sequence,
    rs_sequence,
    rs_term,
    rudin_shapiro_flips,
    shapiro_eval,
)
from .stats import (
    MaxShiftRecord,
    conjecture_table,
    exact_match_orders,
    max_shift,
    merit_factor,
    merit_factor_l4,
    ratio_sequence,
    sum_squares_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrTable",
    "BinarySeq",
    "BoundReport",
    "DegenerateInputError",
    "JsrBracket",
    "MA",
    "MB",
    "MaxShiftRecord",
    "NormalForm",
    "NormalFormError",
    "OrderTooLargeError",
    "Polytope3",
    "PolytopeRun",
    "ProductWord",
    "ShiftChain",
    "SpectralConstants",
    "aperiodic_naive",
    "aperiodic_table_fast",
    "aperiodic_table_naive",
    "bnb_bracket",
    "check_floor_ceil_identities",
    "conjecture_table",
    "conjugation_invariance_check",
    "convex_hull_3d",
    "diagonalization_residual",
    "eigen_constants",
    "exact_match_orders",
    "frobenius_norm",
    "generalized_sequence",
    "interval_label",
    "invariant_polytope",
    "irreducibility_check",
    "iter_aperiodic_tables",
    "katz_constant",
    "letter_domination_report",
    "lower_bound_ratios",
    "lower_bound_value",
    "max_ratio",
    "max_ratios",
    "max_shift",
    "merit_factor",
    "merit_factor_l4",
    "nearest_third",
    "normal_form",
    "periodic_naive",
    "periodic_table",
    "periodic_table_naive",
    "power_product_norm",
    "ratio_sequence",
    "rs_sequence",
    "rs_term",
    "rudin_shapiro_flips",
    "shapiro_eval",
    "shift_chain",
    "spectral_norm",
    "spectral_radius",
    "sum_squares_ratio",
    "t_factor",
    "v_direct",
    "v_product",
    "verify_decomposition",
    "verify_even_zero",
    "verify_periodic_formula",
    "verify_power_bounds",
    "verify_recurrences",
]
