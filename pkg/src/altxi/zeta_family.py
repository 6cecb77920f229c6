"""eta, zeta, the alternating Xi function xi_a and the classical xi.

    xi_a(s) = (1 - 2^s) pi^(-s/2) Gamma(s/2) eta(s)

is evaluated three ways:

* ``xi_a_direct``        the product above, with eta from the quartet sum;
* ``xi_a_gamma_series``  a rapidly convergent sum of upper incomplete gamma
                         functions over the quartet exponents A_m, B_m, C_m;
                         valid in the whole plane;
* ``xi_a_lower_series``  the companion sum of lower incomplete gammas,
                         valid in the critical strip only.

The quartet form of eta,

    (1 - 2^-s) eta(s) = sum_m [(4m+1)^-s - 2 (4m+2)^-s + (4m+3)^-s],

converges absolutely for Re s > -1 but only like m^(-Re s - 1); its tail is
summed with Euler-Maclaurin, which also continues it analytically.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial

from scipy.special import bernoulli

from .complex_gamma import expm1c, gamma, pole_distance, real_pow_complex
from .errors import ConvergenceError, DomainError
from .incomplete_gamma import lower_gamma, upper_gamma
from .settings import DEFAULT_SETTINGS, EvalResult, EvalSettings
from .theta_kernel import QuartetCoefficients

LN2 = math.log(2.0)
EXTRA_ZERO_SPACING = 2.0 * math.pi / LN2
_EPS = 2.220446049250313e-16

# |1 - 2^-s| below this sends eta to the accelerated alternating sum.
REMOVABLE_GUARD = 0.1
ZETA_GUARD = 1e-8
XI_A_DIRECT_GUARD = 1e-6
CONVERSION_GUARD = 1e-8
SIGN_BAND = 1e-15
MIN_GAMMA_BRACKETS = 2
MIN_LOWER_BRACKETS = 8
_EM_MAX_ORDER = 30
_QUARTET_WEIGHTS = ((1, 1.0), (2, -2.0), (3, 1.0))


@dataclass(frozen=True)
class SPoint:
    """A point s of the complex plane; ``t`` is set for s = 1/2 + it."""

    s: complex
    t: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        if self.t is not None and self.s != complex(0.5, self.t):
            raise ValueError("critical-line shorthand requires s = 1/2 + it")

    @classmethod
    def critical(cls, t: float) -> "SPoint":
        return cls(complex(0.5, t), float(t))

    def __complex__(self):
        return self.s


def as_s(s) -> complex:
    return complex(s.s) if isinstance(s, SPoint) else complex(s)


def pow2(s: complex) -> complex:
    return cmath.exp(complex(s) * LN2)


# ---------------------------------------------------------------- quartet eta


@lru_cache(maxsize=None)
def _bernoulli_factorial_ratios(n: int) -> tuple[float, ...]:
    # B_{2k} / (2k)! for k = 1..n
    b = bernoulli(2 * n)
    return tuple(float(b[2 * k]) / math.factorial(2 * k) for k in range(1, n + 1))


def _expm1_ratio(u: complex) -> complex:
    return 1.0 + 0j if u == 0 else expm1c(u) / u


def _quartet_tail(s: complex, start: int, settings: EvalSettings) -> tuple[complex, float, int]:
    """Euler-Maclaurin value of sum_{m >= start} [(4m+1)^-s - 2(4m+2)^-s + (4m+3)^-s].

    Returns (value, error estimate, correction terms used).
    """
    logs = [(w, math.log(4 * start + c)) for c, w in _QUARTET_WEIGHTS]
    # Integral from `start` to infinity; the weights sum to zero so the
    # s = 1 singularity of each piece cancels.
    integral = sum(-w * L * _expm1_ratio((1.0 - s) * L) for w, L in logs) / 4.0
    half = 0.5 * sum(w * cmath.exp(-s * L) for w, L in logs)
    total = integral + half
    ratios = _bernoulli_factorial_ratios(_EM_MAX_ORDER)
    # rising(j) = s (s+1) ... (s+j-1); d^j/dm^j (4m+c)^-s = (-4)^j rising(j) (4m+c)^(-s-j)
    rising = s
    last = math.inf
    used = 0
    for k in range(1, _EM_MAX_ORDER + 1):
        j = 2 * k - 1
        if k > 1:
            rising *= (s + j - 2) * (s + j - 1)
        deriv = -(4.0**j) * rising * sum(w * cmath.exp(-(s + j) * L) for w, L in logs)
        corr = -ratios[k - 1] * deriv
        used = k
        if abs(corr) > last and k > 2:
            # asymptotic series has started to diverge
            break
        total += corr
        last = abs(corr)
        if last <= 0.1 * settings.rel_tol * max(abs(total), 1e-300):
            break
    return total, last, used


def _quartet_start(s: complex) -> int:
    return 8 + math.ceil(abs(s) / 2.0)


def quartet_sum(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """sum_m [(4m+1)^-s - 2(4m+2)^-s + (4m+3)^-s], equal to (1 - 2^-s) eta(s)."""
    s = as_s(s)
    start = _quartet_start(s)
    if start + _EM_MAX_ORDER > settings.max_terms:
        raise ConvergenceError(
            f"quartet sum at s={s!r} needs {start + _EM_MAX_ORDER} terms, max_terms={settings.max_terms}"
        )
    head = 0j
    abs_head = 0.0
    for m in range(start):
        term = sum(w * cmath.exp(-s * math.log(4 * m + c)) for c, w in _QUARTET_WEIGHTS)
        head += term
        abs_head += abs(term)
    tail, tail_err, used = _quartet_tail(s, start, settings)
    est = tail_err + 8.0 * _EPS * (abs_head + abs(tail))
    return EvalResult(head + tail, est, start + used, "quartet")


def quartet_eta(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """eta(s) = quartet_sum(s) / (1 - 2^-s), with no region switching."""
    s = as_s(s)
    div = 1.0 - pow2(-s)
    if abs(div) < 1e-300:
        raise DomainError(f"1 - 2^-s vanishes at s={s!r}")
    q = quartet_sum(s, settings)
    return EvalResult(q.value / div, q.est_error / abs(div), q.terms_used, "quartet")


def alternating_eta(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """eta(s) from sum (-1)^(n+1) n^-s with Cohen-Villegas-Zagier acceleration.

    The accelerated sum converges for every s; cost grows with |Im s| because
    the error bound carries a factor exp(pi |Im s| / 2).
    """
    s = as_s(s)
    t = abs(s.imag)
    digits = -math.log(settings.rel_tol) + 0.5 * math.pi * t + math.log1p(2.0 * t) + 4.0
    if s.real < 0:
        digits += -s.real * math.log(10.0 + t)
    n = max(8, math.ceil(digits / math.log(3.0 + math.sqrt(8.0))))
    if n > settings.max_terms:
        raise ConvergenceError(f"alternating eta at s={s!r} needs {n} terms")
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = 0j
    abs_acc = 0.0
    for k in range(n):
        c = b - c
        term = c * cmath.exp(-s * math.log(k + 1.0))
        acc += term
        abs_acc += abs(term)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    value = acc / d
    est = 4.0 * _EPS * abs_acc / d + abs(value) * settings.rel_tol
    return EvalResult(value, est, n, "series")


def _near_removable(s: complex) -> bool:
    return abs(1.0 - pow2(-s)) < REMOVABLE_GUARD or abs(1.0 - pow2(s)) < REMOVABLE_GUARD


def eta_reflection_factor(s: complex) -> complex:
    """(2^s - 2)/(1 - 2^s) pi^(s-1) Gamma(1-s) sin(pi s/2), the eta functional-equation factor."""
    s = complex(s)
    p = pow2(s)
    return (p - 2.0) / (1.0 - p) * real_pow_complex(math.pi, s - 1.0) * gamma(1.0 - s) * cmath.sin(0.5 * math.pi * s)


def eta(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """Dirichlet eta function, entire.

    Re s > 0 uses the quartet sum, Re s <= 0 the functional equation, and
    the neighbourhoods of s = 2k pi i / ln 2 (where the quartet divisor
    1 - 2^-s vanishes) the accelerated alternating sum.
    """
    s = as_s(s)
    if _near_removable(s):
        return alternating_eta(s, settings)
    if s.real > 0.0:
        return quartet_eta(s, settings)
    inner = quartet_eta(1.0 - s, settings)
    f = eta_reflection_factor(s)
    return EvalResult(f * inner.value, abs(f) * inner.est_error + 4.0 * _EPS * abs(f * inner.value), inner.terms_used, "reflection")


def eta_extra_zero(n: int, sign: str = "+") -> complex:
    """The zero 1 +/- 2 n pi i / ln 2 of eta inherited from 1 - 2^(1-s)."""
    if n < 1:
        raise DomainError(f"extra zeros are indexed from n = 1, got {n}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    im = n * EXTRA_ZERO_SPACING
    return complex(1.0, im if sign == "+" else -im)


def _nearest_lattice(s: complex, shift: float) -> complex:
    k = round(s.imag / EXTRA_ZERO_SPACING)
    return complex(shift, k * EXTRA_ZERO_SPACING)


def zeta(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """Riemann zeta as eta(s) / (1 - 2^(1-s))."""
    s = as_s(s)
    point = _nearest_lattice(s, 1.0)
    if abs(s - point) < ZETA_GUARD:
        what = "pole" if point == 1 else "removable point"
        raise DomainError(f"zeta: s={s!r} is within {ZETA_GUARD:g} of the {what} {point!r}")
    e = eta(s, settings)
    div = 1.0 - pow2(1.0 - s)
    return EvalResult(e.value / div, e.est_error / abs(div), e.terms_used, e.method)


# ---------------------------------------------------------------- xi_a


def xi_a_direct(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """(1 - 2^s) pi^(-s/2) Gamma(s/2) eta(s), evaluated literally."""
    s = as_s(s)
    if pole_distance(0.5 * s) < 0.5 * XI_A_DIRECT_GUARD:
        raise DomainError(
            f"xi_a_direct: s={s!r} is within {XI_A_DIRECT_GUARD:g} of a pole of Gamma(s/2); "
            "use xi_a_gamma_series there"
        )
    e = eta(s, settings)
    f = (1.0 - pow2(s)) * real_pow_complex(math.pi, -0.5 * s) * gamma(0.5 * s)
    value = f * e.value
    return EvalResult(value, abs(f) * e.est_error + 8.0 * _EPS * abs(value), e.terms_used, e.method)


def _gamma_bracket(a: complex, coeffs: QuartetCoefficients, settings) -> tuple[complex, float]:
    """-Gamma(a,A)/A^a + 2 Gamma(a,B)/B^a - Gamma(a,C)/C^a."""
    total = 0j
    err = 0.0
    for weight, K in zip((-1.0, 2.0, -1.0), coeffs):
        r = upper_gamma(a, K, settings)
        scale = real_pow_complex(K, -a)
        total += weight * r.value * scale
        err += abs(weight * scale) * r.est_error
    return total, err


def _lower_bracket(a: complex, coeffs: QuartetCoefficients, settings) -> tuple[complex, float]:
    total = 0j
    err = 0.0
    for weight, K in zip((-1.0, 2.0, -1.0), coeffs):
        r = lower_gamma(a, K, settings)
        scale = real_pow_complex(K, -a)
        total += weight * r.value * scale
        err += abs(weight * scale) * r.est_error
    return total, err


def xi_a_gamma_series(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """xi_a(s) as sum_m of upper incomplete gamma brackets in s/2 and (1-s)/2.

    Valid for every s, including s = 0, -2, -4, ...; the two halves are
    added symmetrically so xi_a(s) and xi_a(1-s) come out bit-identical.
    """
    s = as_s(s)
    a1 = 0.5 * s
    a2 = 0.5 * (1.0 - s)
    acc = 0j
    err = 0.0
    m = 0
    while True:
        q = QuartetCoefficients.for_index(m)
        b1, e1 = _gamma_bracket(a1, q, settings)
        b2, e2 = _gamma_bracket(a2, q, settings)
        bracket = b1 + b2
        acc += bracket
        err += e1 + e2
        m += 1
        if m >= MIN_GAMMA_BRACKETS and (
            bracket == 0 or abs(bracket) < settings.rel_tol * max(abs(acc), 1e-300)
        ):
            break
        if m >= settings.max_terms:
            raise ConvergenceError(
                f"xi_a gamma series did not converge in {m} brackets at s={s!r}",
                partial=acc,
                terms_used=m,
            )
    return EvalResult(acc, err + abs(bracket) + 4.0 * _EPS * abs(acc), m, "series")


def critical_brackets(t: float, m: int, settings: EvalSettings = DEFAULT_SETTINGS) -> tuple[float, float, float]:
    """(alpha_m, beta_m, gamma_m) = 2 Re[Gamma(w, K)/K^w] for K = A_m, B_m, C_m, w = 1/4 + it/2."""
    w = complex(0.25, 0.5 * t)
    return tuple(
        2.0 * (upper_gamma(w, K, settings).value * real_pow_complex(K, -w)).real
        for K in QuartetCoefficients.for_index(m)
    )


def xi_a_critical(t: float, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """xi_a(1/2 + it), real by construction: 2 Re of the one-sided gamma series."""
    t = float(t)
    w = complex(0.25, 0.5 * t)
    acc = 0j
    err = 0.0
    m = 0
    while True:
        b, e = _gamma_bracket(w, QuartetCoefficients.for_index(m), settings)
        acc += b
        err += e
        m += 1
        if m >= MIN_GAMMA_BRACKETS and (b == 0 or abs(b) < settings.rel_tol * max(abs(acc), 1e-300)):
            break
        if m >= settings.max_terms:
            raise ConvergenceError(
                f"critical-line series did not converge in {m} brackets at t={t!r}",
                partial=complex(2.0 * acc.real, 0.0),
                terms_used=m,
            )
    value = 2.0 * acc.real
    return EvalResult(complex(value, 0.0), 2.0 * (err + abs(b)) + 4.0 * _EPS * abs(value), m, "series")


def xi_a_lower_series(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """xi_a(s) from the lower incomplete gamma brackets, 0 < Re s < 1 only.

    The brackets decay only polynomially.  The first ``M`` (at least 8)
    are summed explicitly; beyond them gamma(a, A_m) equals Gamma(a) to
    double precision, so the remaining tail is Gamma(a) times a quartet
    tail, summed by Euler-Maclaurin.
    """
    s = as_s(s)
    if not (0.0 < s.real < 1.0):
        raise DomainError(f"xi_a_lower_series needs 0 < Re s < 1, got s={s!r}")
    a1 = 0.5 * s
    a2 = 0.5 * (1.0 - s)
    start = max(MIN_LOWER_BRACKETS, _quartet_start(s))
    acc = 0j
    err = 0.0
    for m in range(start):
        q = QuartetCoefficients.for_index(m)
        b1, e1 = _lower_bracket(a1, q, settings)
        b2, e2 = _lower_bracket(a2, q, settings)
        acc += b1 + b2
        err += e1 + e2
    terms = start
    if terms + 2 * _EM_MAX_ORDER > settings.max_terms:
        raise ConvergenceError(
            f"lower series at s={s!r} needs {start} brackets plus tail, max_terms={settings.max_terms}",
            partial=acc,
            terms_used=start,
        )
    for a in (a1, a2):
        # sum_{m>=start} [-A^-a + 2B^-a - C^-a] = -(pi/4)^-a * quartet tail at 2a
        tail, tail_err, used = _quartet_tail(2.0 * a, start, settings)
        g = gamma(a)
        scale = g * real_pow_complex(math.pi / 4.0, -a)
        acc -= scale * tail
        err += abs(scale) * tail_err
        terms += used
    return EvalResult(acc, err + 8.0 * _EPS * abs(acc), terms, "series")


# ---------------------------------------------------------------- conversions


def _check_conversion_point(s: complex, what: str) -> None:
    for shift in (0.0, 1.0):
        point = _nearest_lattice(s, shift)
        if abs(s - point) < CONVERSION_GUARD:
            raise DomainError(f"{what}: s={s!r} is within {CONVERSION_GUARD:g} of {point!r}")


def xi_from_xi_a(s, xi_a: complex) -> complex:
    """xi(s) = s (s-1) xi_a(s) / (2 (1 - 2^s)(1 - 2^(1-s)))."""
    s = as_s(s)
    _check_conversion_point(s, "xi_from_xi_a")
    return s * (s - 1.0) * complex(xi_a) / (2.0 * (1.0 - pow2(s)) * (1.0 - pow2(1.0 - s)))


def eta_from_xi_a(s, xi_a: complex) -> complex:
    """eta(s) = xi_a(s) pi^(s/2) / ((1 - 2^s) Gamma(s/2))."""
    s = as_s(s)
    point = _nearest_lattice(s, 0.0)
    if abs(s - point) < CONVERSION_GUARD:
        raise DomainError(f"eta_from_xi_a: s={s!r} is within {CONVERSION_GUARD:g} of {point!r}")
    if pole_distance(0.5 * s) < 0.5 * CONVERSION_GUARD:
        raise DomainError(f"eta_from_xi_a: s={s!r} is at a pole of Gamma(s/2)")
    return complex(xi_a) * real_pow_complex(math.pi, 0.5 * s) / ((1.0 - pow2(s)) * gamma(0.5 * s))


def xi_classical(s, settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """xi(s) = s (s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s), independent of xi_a."""
    s = as_s(s)
    return 0.5 * s * (s - 1.0) * real_pow_complex(math.pi, -0.5 * s) * gamma(0.5 * s) * zeta(s, settings).value


def xi(s, settings: EvalSettings = DEFAULT_SETTINGS) -> EvalResult:
    """xi(s) through xi_a and the conversion factor."""
    s = as_s(s)
    r = xi_a_gamma_series(s, settings)
    value = xi_from_xi_a(s, r.value)
    scale = abs(value / r.value) if r.value != 0 else 0.0
    return EvalResult(value, scale * r.est_error, r.terms_used, r.method)


def eta_functional_residual(s, settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """Relative residual of eta(s) = factor(s) * eta(1-s), both sides from quartet sums."""
    s = as_s(s)
    p = pow2(s)
    if abs(1.0 - p) < 1e-8:
        raise DomainError(f"functional equation undefined at s={s!r}: 1 - 2^s vanishes")
    if pole_distance(1.0 - s) < 1e-8:
        raise DomainError(f"functional equation undefined at s={s!r}: Gamma(1-s) has a pole")
    lhs = quartet_eta(s, settings).value
    rhs = eta_reflection_factor(s) * quartet_eta(1.0 - s, settings).value
    return abs(lhs - rhs) / abs(lhs)


# ---------------------------------------------------------------- scanning


@dataclass(frozen=True)
class ScanRecord:
    t: float
    xi_a: float
    sign: int

    @classmethod
    def at(cls, t: float, value: float) -> "ScanRecord":
        return cls(t, value, sign_with_band(value))


@dataclass
class ScanResult:
    records: list[ScanRecord] = field(default_factory=list)
    zeros: list[float] = field(default_factory=list)


def sign_with_band(value: float, band: float = SIGN_BAND) -> int:
    if abs(value) < band:
        return 0
    return 1 if value > 0 else -1


def scan_grid(t_min: float, t_max: float, step: float) -> list[float]:
    if not step > 0:
        raise DomainError(f"scan step must be > 0, got {step!r}")
    if t_max < t_min:
        raise DomainError(f"scan needs t_min <= t_max, got [{t_min}, {t_max}]")
    count = int(math.floor((t_max - t_min) / step + 1e-9))
    return [t_min + k * step for k in range(count + 1)]


def _xi_a_critical_value(t: float, settings: EvalSettings) -> float:
    return xi_a_critical(t, settings).real


def bisect_sign_change(f, lo: float, hi: float, f_lo: float, tol: float = 1e-9) -> float:
    """Midpoint of a bracket [lo, hi] shrunk below ``tol`` around a sign change of f."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_critical_line(
    t_min: float,
    t_max: float,
    step: float,
    settings: EvalSettings = DEFAULT_SETTINGS,
    workers: int = 1,
    tol: float = 1e-9,
) -> ScanResult:
    """Evaluate xi_a(1/2 + it) on a grid and refine every sign change by bisection.

    Records come back in ascending t whatever ``workers`` is.  Each zero
    is located to within ``tol`` plus the series error divided by the slope
    of xi_a; the latter grows like exp(pi t/4) and reaches 1e-6 near t = 33.
    """
    grid = scan_grid(t_min, t_max, step)
    evaluate = partial(_xi_a_critical_value, settings=settings)
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(evaluate, grid))
    else:
        values = [evaluate(t) for t in grid]
    result = ScanResult(records=[ScanRecord.at(t, v) for t, v in zip(grid, values)])
    # Records inside the zero band carry no sign.  A run of them between
    # opposite signs is one bracketed change; any other run is not a zero.
    prev = None
    for rec in result.records:
        if rec.sign == 0:
            continue
        if prev is not None and rec.sign == -prev.sign:
            result.zeros.append(bisect_sign_change(evaluate, prev.t, rec.t, prev.xi_a, tol))
        prev = rec
    return result


def locate_zero_by_eta_modulus(
    t_lo: float,
    t_hi: float,
    settings: EvalSettings = DEFAULT_SETTINGS,
    h: float = 1e-7,
    tol: float = 1e-9,
) -> float:
    """Minimiser of |eta(1/2 + it)| on [t_lo, t_hi], found by bisecting the
    sign of its central-difference slope.  Uses the quartet sum only.
    """

    def slope(t):
        up = abs(quartet_eta(complex(0.5, t + h), settings).value)
        down = abs(quartet_eta(complex(0.5, t - h), settings).value)
        return up - down

    s_lo = slope(t_lo)
    s_hi = slope(t_hi)
    if not (s_lo < 0 < s_hi):
        raise DomainError(f"|eta| is not bracketed by a minimum on [{t_lo}, {t_hi}]")
    return bisect_sign_change(slope, t_lo, t_hi, s_lo, tol)
