"""Riesz constants and nod (cardinal) functions of integer-shift systems
generated by the Gaussian and the Cauchy-Lorentz function."""

from .errors import ConditioningError, ConvergenceError, DomainError
from .theta import (
    DEFAULT_POLICY,
    EvalPolicy,
    ThetaArgs,
    log_abs_theta,
    p_ratio,
    theta1,
    theta2,
    theta3,
    theta4,
    theta23_ratio_derivative,
    theta23_ratio_gaps,
    theta_ratio,
    watson_residual,
)
from .systems import (
    Family,
    GeneratorSpec,
    RieszBounds,
    fourier_image,
    generator_value,
    log_riesz_constants,
    mask_phi,
    nod_riesz_constants,
    nod_spectral_p,
    riesz_constants,
    spectral_p,
)
from .nodal import (
    NodCoefficients,
    TruncationWarning,
    coefficient_mask,
    gauss_nod_coefficients,
    interpolate,
    lorentz_nod_coefficients,
    nod_coefficients,
    nod_function_eval,
    sign_alternation_violations,
    sinc,
    sinc_distance_closed_form,
)
from .quadrature import adaptive_quadrature
from .oracle import (
    GramSummary,
    MonotonicityReport,
    direct_mask_sum,
    direct_spectral_sum,
    gram_eigen_bounds,
    gram_matrix,
    monotonicity_check,
)

__version__ = "0.1.0"
