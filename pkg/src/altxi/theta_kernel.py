"""Real theta-type kernels on the positive axis.

    phi(x)    = sum_{n>=1} (-1)^(n+1) exp(-pi n^2 x)
    varphi(x) = phi(x) - phi(x/4)
              = sum_{m>=0} [-exp(-A_m x) + 2 exp(-B_m x) - exp(-C_m x)]

with A_m, B_m, C_m = pi (4m+1)^2/4, pi (4m+2)^2/4, pi (4m+3)^2/4.  varphi
satisfies varphi(1/x) = sqrt(x) varphi(x), which is used to evaluate it on
(0, 1) from the fast-converging sum on [1, inf).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from .errors import ConvergenceError, DomainError
from .settings import DEFAULT_SETTINGS, EvalSettings

REFLECTION_THRESHOLD = 1.0


@dataclass(frozen=True)
class QuartetCoefficients:
    m: int
    A: float
    B: float
    C: float

    @classmethod
    def for_index(cls, m: int) -> "QuartetCoefficients":
        if m < 0:
            raise DomainError(f"quartet index must be >= 0, got {m}")
        q = math.pi / 4.0
        return cls(m, q * (4 * m + 1) ** 2, q * (4 * m + 2) ** 2, q * (4 * m + 3) ** 2)

    def __iter__(self):
        return iter((self.A, self.B, self.C))


def _check_x(x):
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"kernel argument must be a finite x > 0, got {x!r}")
    return x


def phi_series(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """Alternating Gaussian sum phi(x)."""
    x = _check_x(x)
    total = 0.0
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * x)
        if term < settings.rel_tol * max(abs(total), 1e-300):
            return total
        total += term if n % 2 else -term
        if term == 0.0:
            return total
        n += 1
        if n > settings.max_terms:
            raise ConvergenceError(
                f"phi series did not converge in {settings.max_terms} terms at x={x:g}",
                partial=total,
                terms_used=n - 1,
            )


def phi_difference(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """varphi(x) as phi(x) - phi(x/4), straight from the definition."""
    return phi_series(x, settings) - phi_series(x / 4.0, settings)


def quartet_term(m: int, x: float) -> float:
    x = _check_x(x)
    A, B, C = QuartetCoefficients.for_index(m)
    return -math.exp(-A * x) + 2.0 * math.exp(-B * x) - math.exp(-C * x)


def quartet_sum(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """sum_m T_m(x) by direct summation, whatever the size of x."""
    x = _check_x(x)
    total = 0.0
    m = 0
    while True:
        t = quartet_term(m, x)
        total += t
        if abs(t) <= settings.rel_tol * abs(total) or t == 0.0:
            return total
        m += 1
        if m >= settings.max_terms:
            raise ConvergenceError(
                f"quartet sum did not converge in {settings.max_terms} terms at x={x:g}",
                partial=total,
                terms_used=m,
            )


def varphi(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """The kernel varphi(x); strictly negative for every x > 0."""
    x = _check_x(x)
    if x >= REFLECTION_THRESHOLD:
        return quartet_sum(x, settings)
    return quartet_sum(1.0 / x, settings) / math.sqrt(x)


def varphi_log(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> tuple[int, float]:
    """(sign, ln|varphi(x)|), usable where varphi itself underflows (x > ~950 or x < ~1e-3).

    On x >= 1 the quartet sum is factored as -exp(-A_0 x) * (1 - 2 e^{-(B_0-A_0) x} + ...),
    whose bracket is evaluated without underflow; x < 1 goes through the
    reflection law.
    """
    x = _check_x(x)
    shift = 0.0
    if x < REFLECTION_THRESHOLD:
        x, shift = 1.0 / x, 0.5 * math.log(x)  # varphi(1/y) = sqrt(y) varphi(y)
    a0 = QuartetCoefficients.for_index(0).A
    total = 0.0
    m = 0
    while True:
        A, B, C = QuartetCoefficients.for_index(m)
        term = -math.exp(-(A - a0) * x) + 2.0 * math.exp(-(B - a0) * x) - math.exp(-(C - a0) * x)
        total += term
        if abs(term) <= settings.rel_tol * abs(total) or term == 0.0:
            break
        m += 1
        if m >= settings.max_terms:
            raise ConvergenceError(f"scaled quartet sum did not converge at x={x:g}", partial=total, terms_used=m)
    sign = -1 if total < 0 else (1 if total > 0 else 0)
    return sign, math.log(abs(total)) - a0 * x - shift


def varphi_derivative(x: float, h: float = 1e-5, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """Central difference (varphi(x+h) - varphi(x-h)) / 2h."""
    x = _check_x(x)
    if not (0.0 < h < x / 2.0):
        raise DomainError(f"step h must satisfy 0 < h < x/2, got h={h!r} at x={x!r}")
    return (varphi(x + h, settings) - varphi(x - h, settings)) / (2.0 * h)


def varphi_minimum(settings: EvalSettings = DEFAULT_SETTINGS) -> tuple[float, float]:
    """Location and value of the global minimum of varphi (golden-section search)."""
    res = minimize_scalar(
        lambda x: varphi(x, settings), bracket=(0.5, 0.9, 1.5), method="golden", tol=1e-10
    )
    return float(res.x), float(res.fun)


def _half_sum(weight, shift, x, settings):
    # sum_{n>=0} weight(n) exp(-pi (n+shift)^2 x), terms monotone in n.
    total = 0.0
    n = 0
    while True:
        term = math.exp(-math.pi * (n + shift) ** 2 * x)
        if term == 0.0 or (n > 0 and term < settings.rel_tol * max(abs(total), 1e-300)):
            return total
        total += weight(n) * term
        n += 1
        if n > settings.max_terms:
            raise ConvergenceError(
                f"theta series did not converge in {settings.max_terms} terms at x={x:g}",
                partial=total,
                terms_used=n,
            )


def theta_trio(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> tuple[float, float, float]:
    """(theta, theta~, theta~~) at z = ix.

    theta(ix)   = sum_{n in Z} exp(-pi n^2 x)
    theta~(ix)  = sum_{n in Z} (-1)^n exp(-pi n^2 x)
    theta~~(ix) = 2 sum_{n>=0} exp(-pi (n+1/2)^2 x)
    """
    x = _check_x(x)
    plain = 1.0 + 2.0 * _half_sum(lambda n: 1.0, 1, x, settings)
    alternating = 1.0 + 2.0 * _half_sum(lambda n: -1.0 if n % 2 == 0 else 1.0, 1, x, settings)
    shifted = 2.0 * _half_sum(lambda n: 1.0, 0.5, x, settings)
    return plain, alternating, shifted


def varphi_from_theta(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """varphi(x) = (theta - theta~ - theta~~) / 2."""
    t, ta, ts = theta_trio(x, settings)
    return 0.5 * (t - ta - ts)


def theta_transform_residuals(x: float, settings: EvalSettings = DEFAULT_SETTINGS) -> tuple[float, float, float]:
    """Residuals of the theta inversion laws at x.

    theta(i/x) = sqrt(x) theta(ix); theta~ and theta~~ swap under x -> 1/x:
    theta~(i/x) = sqrt(x) theta~~(ix), theta~~(i/x) = sqrt(x) theta~(ix).
    """
    x = _check_x(x)
    t, ta, ts = theta_trio(x, settings)
    ti, tai, tsi = theta_trio(1.0 / x, settings)
    r = math.sqrt(x)
    return abs(ti - r * t), abs(tai - r * ts), abs(tsi - r * ta)
