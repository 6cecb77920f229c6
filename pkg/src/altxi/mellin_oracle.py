"""Brute-force quadrature of the Mellin integrals of varphi.

Used as an independent check on the series evaluators.  For any split
point c > 0 the reflection law of varphi folds the Mellin integral onto
two half lines,

    xi_a(s) = int_c^inf varphi(x) x^(s/2-1) dx + int_(1/c)^inf varphi(x) x^((1-s)/2-1) dx,

which for c = 1 is the symmetric form used by default.  varphi decays like
exp(-pi x/4), so the half lines are cut where the integrand drops below
1e-22.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError
from .settings import DEFAULT_SETTINGS, EvalResult, EvalSettings
from .theta_kernel import varphi
from .zeta_family import as_s

SCHEMES = ("tanh_sinh", "gauss_legendre_composite")
_TS_TMAX = 3.2
_GL_ORDER = 16
# Refinement differences above this are reported as non-convergence.
ACCEPT_ERROR = 1e-6


@dataclass(frozen=True)
class QuadratureSpec:
    scheme: str = "tanh_sinh"
    points: int = 2000
    split_at: float = 1.0

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}; choose from {SCHEMES}")
        if self.points < 16:
            raise ValueError(f"quadrature needs at least 16 points, got {self.points}")
        if not self.split_at > 0:
            raise ValueError(f"split_at must be > 0, got {self.split_at!r}")


DEFAULT_SPEC = QuadratureSpec()


@lru_cache(maxsize=32)
def _tanh_sinh_rule(points: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes on [-1, 1] as (x, 1 - |x|, w) for an odd count close to ``points``."""
    k_max = max(8, (points - 1) // 2)
    h = _TS_TMAX / k_max
    tau = h * np.arange(-k_max, k_max + 1)
    u = 0.5 * math.pi * np.sinh(tau)
    x = np.tanh(u)
    # 1 - |tanh u| without cancellation near the endpoints
    comp = 2.0 / (np.exp(2.0 * np.abs(u)) + 1.0)
    w = h * 0.5 * math.pi * np.cosh(tau) / np.cosh(u) ** 2
    return x, comp, w


@lru_cache(maxsize=32)
def _gauss_legendre_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _nodes(scheme: str, points: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    half = 0.5 * (b - a)
    if scheme == "tanh_sinh":
        x, comp, w = _tanh_sinh_rule(points)
        # measure from the nearer endpoint to keep nodes there distinct
        nodes = np.where(x < 0, a + half * comp, b - half * comp)
        return nodes, half * w
    panels = max(1, points // _GL_ORDER)
    gx, gw = _gauss_legendre_rule(_GL_ORDER)
    edges = np.linspace(a, b, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halves = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mids[:, None] + halves[:, None] * gx[None, :]).ravel()
    weights = (halves[:, None] * gw[None, :]).ravel()
    return nodes, weights


def integrate(f, a: float, b: float, spec: QuadratureSpec) -> tuple[complex, float]:
    """int_a^b f using ``spec.scheme``; returns (value, |value - half-resolution value|).

    ``f`` takes a numpy array of nodes and returns an array of values.
    """
    if b == a:
        return 0j, 0.0
    nodes, weights = _nodes(spec.scheme, spec.points, a, b)
    fine = complex(np.sum(weights * f(nodes)))
    nodes2, weights2 = _nodes(spec.scheme, max(16, spec.points // 2), a, b)
    coarse = complex(np.sum(weights2 * f(nodes2)))
    return fine, abs(fine - coarse)


def _varphi_array(x: np.ndarray, settings: EvalSettings) -> np.ndarray:
    return np.fromiter((varphi(float(v), settings) for v in x), dtype=float, count=len(x))


def _cutoff(power_re: float, start: float) -> float:
    """X >= start with |varphi(x) x^power| < 1e-22 for x > X (varphi ~ exp(-pi x/4))."""
    X = max(60.0, 2.0 * start)
    while -math.pi * X / 4.0 + power_re * math.log(X) > math.log(1e-22):
        X *= 1.5
    return X


def _half_line(power: complex, start: float, spec, settings) -> tuple[complex, float]:
    """int_start^inf varphi(x) x^power dx, integrated in u = ln x."""
    X = _cutoff(power.real + 1.0, start)
    lo, hi = math.log(start), math.log(X)

    def f(u):
        x = np.exp(u)
        return _varphi_array(x, settings) * np.exp((power + 1.0) * u)

    return integrate(f, lo, hi, spec)


def _finish(value: complex, err: float, spec: QuadratureSpec, what: str) -> EvalResult:
    if not err <= ACCEPT_ERROR * max(1.0, abs(value)):
        raise ConvergenceError(
            f"{what}: refinement difference {err:.2e} with {spec.points} points; increase the point count",
            partial=value,
            terms_used=spec.points,
        )
    return EvalResult(value, err, spec.points, "quadrature")


def mellin_xi_a(
    s,
    spec: QuadratureSpec = DEFAULT_SPEC,
    settings: EvalSettings = DEFAULT_SETTINGS,
    route: str = "symmetric",
) -> EvalResult:
    """xi_a(s) by quadrature of varphi.

    ``route="symmetric"`` folds the integral at ``spec.split_at`` (default 1)
    and is valid for every s.  ``route="direct"`` integrates
    int_0^inf varphi(x) x^(s/2-1) dx as it stands and needs Re s > 0.
    """
    s = as_s(s)
    if route == "symmetric":
        c = spec.split_at
        v1, e1 = _half_line(0.5 * s - 1.0, c, spec, settings)
        v2, e2 = _half_line(0.5 * (1.0 - s) - 1.0, 1.0 / c, spec, settings)
        return _finish(v1 + v2, e1 + e2, spec, f"mellin_xi_a({s})")
    if route == "direct":
        if not s.real > 0:
            raise DomainError(f"the direct Mellin integral needs Re s > 0, got s={s!r}")
        value, err = _whole_line(0.5 * s - 1.0, spec, settings)
        return _finish(value, err, spec, f"mellin_xi_a({s}, direct)")
    raise ValueError(f"unknown route {route!r}")


def _whole_line(power: complex, spec: QuadratureSpec, settings) -> tuple[complex, float]:
    """int_0^inf varphi(x) x^power dx, split at spec.split_at, in u = ln x."""
    c = spec.split_at
    # Below c the reflected kernel decays like exp(-pi/(4x)): mirror the cutoff.
    X = _cutoff(power.real + 1.0, max(c, 1.0))
    Y = _cutoff(-power.real - 0.5, max(1.0 / c, 1.0))
    lo, mid, hi = -math.log(Y), math.log(c), math.log(X)

    def f(u):
        x = np.exp(u)
        return _varphi_array(x, settings) * np.exp((power + 1.0) * u)

    v1, e1 = integrate(f, lo, mid, spec)
    v2, e2 = integrate(f, mid, hi, spec)
    return v1 + v2, e1 + e2


def mellin_xi_a_unit_interval(
    s, spec: QuadratureSpec = DEFAULT_SPEC, settings: EvalSettings = DEFAULT_SETTINGS
) -> EvalResult:
    """xi_a(s) = int_0^1 varphi(x) (dx/x) [x^(s/2) + x^((1-s)/2)], 0 < Re s < 1.

    Integrated in u = -ln x, which turns the x -> 0 end into a
    double-exponentially decaying tail of the reflected kernel.
    """
    s = as_s(s)
    if not (0.0 < s.real < 1.0):
        raise DomainError(f"unit-interval route needs 0 < Re s < 1, got s={s!r}")
    # varphi(e^-u) = e^(u/2) varphi(e^u): same decay as the [1, inf) side
    U = math.log(_cutoff(max(abs(s.real), abs(1.0 - s.real)), 1.0))

    def f(u):
        x = np.exp(-u)
        return _varphi_array(x, settings) * (np.exp(-0.5 * s * u) + np.exp(-0.5 * (1.0 - s) * u))

    value, err = integrate(f, 0.0, U, spec)
    return _finish(value, err, spec, f"mellin_xi_a_unit_interval({s})")


def special_integrals(
    spec: QuadratureSpec = DEFAULT_SPEC, settings: EvalSettings = DEFAULT_SETTINGS
) -> tuple[float, float, float]:
    """(int varphi dx/x, int varphi dx/sqrt(x), int varphi dx) over (0, inf).

    Exact values: -ln 2, -ln 2, -pi/4.
    """
    out = []
    for power in (-1.0, -0.5, 0.0):
        value, err = _whole_line(complex(power), spec, settings)
        out.append(_finish(value, err, spec, f"int varphi x^{power}").real)
    return tuple(out)


def special_integral(
    name: str, spec: QuadratureSpec = DEFAULT_SPEC, settings: EvalSettings = DEFAULT_SETTINGS
) -> EvalResult:
    """One of the special integrals by name: varphi_over_x, varphi_over_sqrtx, varphi_plain."""
    powers = {"varphi_over_x": -1.0, "varphi_over_sqrtx": -0.5, "varphi_plain": 0.0}
    if name not in powers:
        raise ValueError(f"unknown integral {name!r}; choose from {sorted(powers)}")
    value, err = _whole_line(complex(powers[name]), spec, settings)
    return _finish(value, err, spec, name)
