"""Lower and upper incomplete gamma functions, complex order, real argument.

    gamma(a, z) = int_0^z t^(a-1) e^(-t) dt
    Gamma(a, z) = int_z^inf t^(a-1) e^(-t) dt

The lower function is the classical power series.  The upper function is
either Gamma(a) - gamma(a, z) or the Legendre continued fraction evaluated
with the modified Lentz recurrence; the latter is chosen whenever the
difference would cancel (large z, tiny upper tail) and near the poles of
Gamma(a), where the difference is meaningless but the tail itself is finite.
"""

from __future__ import annotations

import cmath
import math

from .complex_gamma import POLE_GUARD, gamma, pole_distance
from .errors import ConvergenceError, DomainError
from .settings import DEFAULT_SETTINGS, EvalResult, EvalSettings

_EPS = 2.220446049250313e-16
_TINY = 1e-30

# Above this the series partial sums (~e^z) overflow a double.
SERIES_Z_MAX = 500.0
# Use the continued fraction once the estimated ratio |Gamma(a,z)|/|Gamma(a)|
# falls below this; the difference would lose more than one digit.
CANCELLATION_RATIO = 0.1
# Poles of Gamma(a) closer than this force the continued fraction.
POLE_AVOID = 0.25


def _check_z(z, strict):
    z = float(z)
    if not math.isfinite(z) or z < 0.0 or (strict and z == 0.0):
        raise DomainError(f"incomplete gamma needs real z {'>' if strict else '>='} 0, got {z!r}")
    return z


def _check_order(a):
    a = complex(a)
    if pole_distance(a) < POLE_GUARD:
        raise DomainError(f"order {a!r} is within {POLE_GUARD:g} of a pole of Gamma(a)")
    return a


def _prefactor(a: complex, z: float) -> complex:
    return cmath.exp(a * math.log(z) - z)


def _series_sum(a: complex, z: float, settings: EvalSettings) -> tuple[complex, float, complex, int]:
    """sum_n z^n / (a (a+1) ... (a+n)) as (sum, sum of |terms|, last term, n).

    The terms are added with math.fsum so the sum carries no rounding
    beyond that of the individual terms.
    """
    term = 1.0 / a
    re_parts = [term.real]
    im_parts = [term.imag]
    total = term
    abs_total = abs(term)
    n = 0
    # Terms grow until n ~ z, so never test convergence before n > z.
    while True:
        n += 1
        term *= z / (a + n)
        re_parts.append(term.real)
        im_parts.append(term.imag)
        total += term
        abs_total += abs(term)
        if n > z and abs(term) < settings.rel_tol * abs(total):
            break
        if n >= settings.max_terms:
            raise ConvergenceError(
                f"lower gamma series did not converge in {settings.max_terms} terms "
                f"(a={a!r}, z={z:g})",
                partial=_prefactor(a, z) * total,
                terms_used=n,
            )
    return complex(math.fsum(re_parts), math.fsum(im_parts)), abs_total, term, n


def lower_series(a: complex, z: float, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """gamma(a, z) = z^a e^-z sum_n z^n / (a (a+1) ... (a+n))."""
    a = _check_order(a)
    z = _check_z(z, strict=False)
    if z == 0.0:
        return EvalResult(0j, 0.0, 0, "series")
    if z > SERIES_Z_MAX:
        raise DomainError(f"series would overflow for z = {z:g} > {SERIES_Z_MAX:g}")
    total, abs_total, term, n = _series_sum(a, z, settings)
    pre = _prefactor(a, z)
    ratio = z / abs(a + n + 1)
    tail = abs(term) * ratio / (1.0 - ratio)
    est = abs(pre) * (tail + 4.0 * _EPS * abs_total)
    return EvalResult(pre * total, est, n + 1, "series")


def _cf_backward(a: complex, z: float, depth: int) -> complex:
    # 1/(b_0 + a_1/(b_1 + ... a_depth/b_depth)) evaluated from the bottom up
    f = z + 2 * depth + 1.0 - a
    for i in range(depth - 1, -1, -1):
        f = (z + 2 * i + 1.0 - a) - (i + 1) * (i + 1 - a) / f
    return 1.0 / f


def upper_continued_fraction(
    a: complex, z: float, settings: EvalSettings = DEFAULT_SETTINGS
) -> EvalResult:
    """Gamma(a, z) from the continued fraction
    e^-z z^a / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(z+5-a - ...))).

    Works for any complex a, including the poles of Gamma(a); converges
    slowly as z -> 0.  Forward (modified Lentz) iteration finds the depth
    at which successive convergents agree to rel_tol; for slowly
    converging cases that criterion stops early, so the fraction is then
    re-evaluated bottom-up at twice that depth.
    """
    a = complex(a)
    z = _check_z(z, strict=True)
    # Modified Lentz on 1/(b_0 + a_1/(b_1 + ...)), b_i = z + 2i + 1 - a, a_i = -i(i - a).
    h = _TINY
    c = h
    d = 0j
    i = 0
    while True:
        an = 1.0 if i == 0 else -i * (i - a)
        b = z + 2 * i + 1.0 - a
        d = b + an * d
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = c * d
        h *= delta
        i += 1
        if i > 1 and abs(delta - 1.0) < settings.rel_tol:
            break
        if i >= settings.max_terms:
            raise ConvergenceError(
                f"upper gamma continued fraction did not converge in {settings.max_terms} "
                f"iterations (a={a!r}, z={z:g})",
                partial=_prefactor(a, z) * h,
                terms_used=i,
            )
    # Confirm the depth bottom-up: keep doubling until depth and 3/4 depth agree.
    pre = _prefactor(a, z)
    depth = min(2 * i, settings.max_terms)
    while True:
        value = pre * _cf_backward(a, z, depth)
        check = pre * _cf_backward(a, z, max(1, (3 * depth) // 4))
        diff = abs(value - check)
        if diff <= settings.rel_tol * abs(value) or depth >= settings.max_terms:
            break
        depth = min(2 * depth, settings.max_terms)
    if diff > 1e3 * settings.rel_tol * abs(value):
        raise ConvergenceError(
            f"upper gamma continued fraction unsettled at depth {depth} (a={a!r}, z={z:g})",
            partial=value,
            terms_used=depth,
        )
    est = diff + 2.0 * _EPS * math.sqrt(depth) * abs(value)
    return EvalResult(value, est, depth, "continued_fraction")


def _tail_ratio_estimate(a: complex, z: float) -> float:
    """Crude |Gamma(a,z)| / |Gamma(a)| from the leading asymptotic term.

    Below the peak of t^(a-1) e^-t the tail holds most of Gamma(a): ratio ~1.
    """
    if z < a.real - 1.0:
        return 1.0
    log_tail = (a.real - 1.0) * math.log(z) - z
    g = abs(gamma(a))
    if g == 0.0:
        return math.inf
    return math.exp(log_tail - math.log(g))


def prefer_continued_fraction(a: complex, z: float) -> bool:
    a = complex(a)
    if pole_distance(a) < POLE_AVOID:
        return True
    if z > abs(a) + 10.0:
        return True
    return _tail_ratio_estimate(a, z) < CANCELLATION_RATIO


def lower_gamma(a: complex, z: float, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """Lower incomplete gamma.

    Power series up to ``SERIES_Z_MAX``; beyond that Gamma(a) minus the
    continued-fraction tail, which is then negligible.
    """
    a = _check_order(a)
    z = _check_z(z, strict=False)
    if z <= SERIES_Z_MAX:
        return lower_series(a, z, settings)
    g = gamma(a)
    up = upper_continued_fraction(a, z, settings)
    est = up.est_error + 4.0 * _EPS * abs(g)
    return EvalResult(g - up.value, est, up.terms_used, "difference")


def upper_gamma(a: complex, z: float, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """Upper incomplete gamma Gamma(a, z) for complex a and real z > 0.

    Unlike :func:`lower_gamma` this accepts orders at (or near) the poles
    0, -1, -2, ... of Gamma(a), where Gamma(a, z) is still finite.
    """
    a = complex(a)
    z = _check_z(z, strict=True)
    if prefer_continued_fraction(a, z):
        return upper_continued_fraction(a, z, settings)
    low = lower_series(a, z, settings)
    g = gamma(a)
    est = low.est_error + 4.0 * _EPS * abs(g)
    return EvalResult(g - low.value, est, low.terms_used, "difference")


def check_additivity(a: complex, z: float, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """|gamma(a,z) + Gamma(a,z) - Gamma(a)| / |Gamma(a)|, series against continued fraction.

    Both incomplete functions are z^a e^-z times a sum (series, continued
    fraction), so the residual is formed from the two sums with the common
    factor divided out of Gamma(a).  Near the poles of the order the two
    halves can be ~10^8 times larger than Gamma(a); multiplying each back by
    the prefactor first would add a rounding of that size to the residual.
    """
    a = _check_order(a)
    z = _check_z(z, strict=True)
    series, _, _, _ = _series_sum(a, z, settings)
    up = upper_continued_fraction(a, z, settings)
    cf = _cf_backward(a, z, up.terms_used)
    target = gamma(a) * cmath.exp(z - a * math.log(z))
    return abs(series + cf - target) / abs(target)
