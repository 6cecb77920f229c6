"""Alternating zeta and Xi functions in double precision.

The package evaluates the Dirichlet eta function, Riemann zeta, the Xi
function and its alternating counterpart xi_a(s) = (1 - 2^s) pi^(-s/2)
Gamma(s/2) eta(s), together with the theta-type kernel varphi whose Mellin
transform xi_a is, and the incomplete gamma functions the series need.
"""

from .complex_gamma import gamma
from .errors import AltXiError, ConvergenceError, DomainError
from .incomplete_gamma import lower_gamma, upper_gamma
from .mellin_oracle import QuadratureSpec, mellin_xi_a, special_integrals
from .settings import DEFAULT_SETTINGS, EvalResult, EvalSettings
from .theta_kernel import phi_series, varphi, varphi_minimum
from .zeta_family import (
    eta,
    scan_critical_line,
    xi,
    xi_a_critical,
    xi_a_direct,
    xi_a_gamma_series,
    xi_a_lower_series,
    zeta,
)

__all__ = [
    "AltXiError", "ConvergenceError", "DomainError",
    "EvalResult", "EvalSettings", "DEFAULT_SETTINGS", "QuadratureSpec",
    "gamma", "lower_gamma", "upper_gamma",
    "phi_series", "varphi", "varphi_minimum",
    "eta", "zeta", "xi", "xi_a_direct", "xi_a_gamma_series", "xi_a_lower_series", "xi_a_critical",
    "scan_critical_line", "mellin_xi_a", "special_integrals",
]
