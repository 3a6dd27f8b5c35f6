"""Maass waveforms from indefinite theta functions of signature (1,1).

Evaluators for the regularized theta sums attached to an integer binary
quadratic form of signature (1,1), together with the exact q-series
side (Ramanujan's sigma, its partner sigma*, and Cohen's T(n)
coefficients) and numerical verification of the modular transformation
laws that tie the two together.
"""

from .quadform import (
    ComponentError,
    GeodesicPoint,
    QuadFormError,
    QuadraticForm,
    act_on_t,
    automorph_failure,
    is_automorph,
    search_automorphs,
    t_shift,
)
from .special import (
    Tolerance,
    alpha,
    bessel_k0,
    bessel_k0_scaled,
    gauss_segment_integral,
    incomplete_k0,
    k0_upper_bound,
    lemma_segment_decomposition,
)
from .theta import (
    EvalResult,
    PeriodicWeight,
    QZeroOnLatticeError,
    ThetaParams,
    congruence_certificate,
    phi,
    phi_hat,
    phi_hat_m,
    phi_lower,
    phi_lower_m,
    phi_m,
    theta_c,
    truncation_radius,
    verify_laplacian_defect,
    verify_split,
    verify_transform_S,
    verify_transform_T,
)
from .qseries import (
    IntPowerSeries,
    TCoefficients,
    sigma_indefinite_series,
    sigma_series,
    sigma_star_indefinite_series,
    sigma_star_series,
    t_coefficients,
    verify_identity,
)
from .maass import (
    FamilySpec,
    FamilySpecError,
    MultiplierWord,
    check_family_condition,
    cohen_family,
    cohen_params,
    cohen_phi0,
    family_sum,
    gamma02_decompose,
    multiplier_value,
    vector_phi_hat,
    verify_c_independence,
    verify_cohen_identity,
    verify_eigenfunction,
    verify_multiplier,
    verify_vector_transforms,
)

__version__ = "0.1.0"
