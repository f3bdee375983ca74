"""Inversion of the heat-equation integral I(a) = c.

Fast evaluators and asymptotic inverse schemes for the dimensionless
integral ``I(a) = (i/pi) int_C exp(-a k^2) / (k cos k) dk``, and their use in
drain-spacing, drainage-time and soil-diffusivity estimation.
"""

from heatinv._kernels import available_backends, current_backend, use_backend
from heatinv.composite import CompositeScheme, ErrorReport, composite_invert, relative_error
from heatinv.contour import DimensionlessPair, QuadratureSpec, eval_bn, eval_h, eval_I, eval_theta
from heatinv.errors import (
    AdmissibilityError,
    DomainError,
    HeatInvError,
    NumericalError,
    ToleranceError,
)
from heatinv.invert_large import (
    EpsilonExpansion,
    InversionCoefficients,
    gen_inversion_coeffs,
    invert_epsilon_poly,
    invert_first_order,
    invert_fourier_N,
)
from heatinv.invert_small import invert_erfc, invert_lambert, invert_p_expansion
from heatinv.oracle import RootFindSpec, error_sweep, true_a
from heatinv.physics import (
    DrainageScenario,
    InfiltrationScenario,
    glover_dumm,
    reduce_drainage,
    reduce_infiltration,
    simulate_moisture,
    solve_ip,
)
from heatinv.schemes import get_solver, solve_a
from heatinv.series import I_erfc_sum, I_fourier, I_series, SeriesTruncation, eval_bn_residue
from heatinv.specfn import SpecFnConfig, erfc, erfc_inv, lambert_w0

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "CompositeScheme",
    "DimensionlessPair",
    "DomainError",
    "DrainageScenario",
    "EpsilonExpansion",
    "ErrorReport",
    "HeatInvError",
    "I_erfc_sum",
    "I_fourier",
    "I_series",
    "InfiltrationScenario",
    "InversionCoefficients",
    "NumericalError",
    "QuadratureSpec",
    "RootFindSpec",
    "SeriesTruncation",
    "SpecFnConfig",
    "ToleranceError",
    "available_backends",
    "composite_invert",
    "current_backend",
    "erfc",
    "erfc_inv",
    "error_sweep",
    "eval_I",
    "eval_bn",
    "eval_bn_residue",
    "eval_h",
    "eval_theta",
    "gen_inversion_coeffs",
    "get_solver",
    "glover_dumm",
    "invert_epsilon_poly",
    "invert_erfc",
    "invert_first_order",
    "invert_fourier_N",
    "invert_lambert",
    "invert_p_expansion",
    "lambert_w0",
    "reduce_drainage",
    "reduce_infiltration",
    "relative_error",
    "simulate_moisture",
    "solve_a",
    "solve_ip",
    "true_a",
    "use_backend",
]
