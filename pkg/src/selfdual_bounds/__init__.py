"""Two-sided bounds on Fourier uncertainty constants.

Certified upper bounds from sign-change radii of self-dual Gaussian
combinations and Hermite eigenfunction combinations; closed-form lower
bounds; exact rational verification of the underlying series identities;
and discriminant-margin calculators for number-field applications.
"""

from .bounds import (BoundReport, ceiling, exact_gamma_half, lambda_const,
                     lower_bound, lower_bound_d1, lower_bound_volume,
                     sinc_stationary_point, upper_bound_assembly)
from .combos import (CertificationError, CorrectionError, CorrectionResult,
                     GaussianCombo, LPConfig, LPInfeasibleError, LPResult,
                     NegativeAtInfinityError, RadiusCertificate, combo_H,
                     correction_cap, correction_scan, certify_nonnegative,
                     last_sign_change, lp_min_radius, minimize_correction,
                     tail_threshold)
from .gaussian import (GaussianParams, RootBracketError, eval_H,
                       eval_H_deriv, eval_g, limit_profile, minimize_family,
                       radius_from_X, scan_family, solve_Xa)
from .hermite import (HermiteCombo, HermiteSearchConfig, HermiteSearchResult,
                      combo_radius, eigenfunction, fourier_eigenvalue,
                      hermite_poly, hermite_search, hermite_value_at_zero)
from .number_fields import (NumberFieldParams, ODLYZKO_ROOT_DISC, TWO_PI_E,
                            TowerLevel, exceeds_odlyzko_threshold,
                            prop1_margin, root_discriminant, tower)
from .series import (IdentityCheck, RationalPolynomial, linear_exp_coeff,
                     p56_check, q4_polynomial, residue_q, run_identity_checks,
                     substitute_k_of_h, taylor_h_d1, taylor_k_general)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CertificationError", "CorrectionError",
    "CorrectionResult", "GaussianCombo", "GaussianParams", "HermiteCombo",
    "HermiteSearchConfig", "HermiteSearchResult", "IdentityCheck",
    "LPConfig", "LPInfeasibleError", "LPResult", "NegativeAtInfinityError",
    "NumberFieldParams", "ODLYZKO_ROOT_DISC", "RadiusCertificate",
    "RationalPolynomial", "RootBracketError", "TWO_PI_E", "TowerLevel",
    "ceiling", "certify_nonnegative", "combo_H", "combo_radius",
    "correction_cap", "correction_scan", "eigenfunction", "eval_H",
    "eval_H_deriv", "eval_g", "exact_gamma_half",
    "exceeds_odlyzko_threshold", "fourier_eigenvalue", "hermite_poly",
    "hermite_search", "hermite_value_at_zero", "lambda_const",
    "last_sign_change", "limit_profile", "linear_exp_coeff", "lower_bound",
    "lower_bound_d1", "lower_bound_volume", "lp_min_radius",
    "minimize_correction", "minimize_family", "p56_check", "prop1_margin",
    "q4_polynomial", "radius_from_X", "residue_q", "root_discriminant",
    "run_identity_checks", "scan_family", "sinc_stationary_point",
    "solve_Xa", "substitute_k_of_h", "tail_threshold", "taylor_h_d1",
    "taylor_k_general", "tower", "upper_bound_assembly",
]
