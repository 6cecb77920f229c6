"""Complex helpers and the complete gamma function.

Everything here works on plain Python ``complex``; the helpers only add
domain checking where ``cmath`` would otherwise raise a bare
``ZeroDivisionError``/``ValueError`` or silently return infinities.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError

POLE_GUARD = 1e-9

# Lanczos coefficients for g = 607/128, 15 terms (P. Godfrey).
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def cexp(a: complex) -> complex:
    return cmath.exp(a)


def clog(a: complex) -> complex:
    """Principal logarithm, imaginary part in (-pi, pi]."""
    if a == 0:
        raise DomainError("log of zero")
    return cmath.log(a)


def cdiv(a: complex, b: complex) -> complex:
    if b == 0:
        raise DomainError("division by zero")
    return complex(a) / complex(b)


def complex_op(name: str, a: complex, b: complex | None = None):
    """Dispatch one of add, sub, mul, div, conj, abs, exp, log by name."""
    a = complex(a)
    binary = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: cdiv(a, b),
    }
    unary = {
        "conj": a.conjugate,
        "abs": lambda: abs(a),
        "exp": lambda: cexp(a),
        "log": lambda: clog(a),
    }
    if name in binary:
        if b is None:
            raise TypeError(f"{name} needs two operands")
        b = complex(b)
        return binary[name]()
    if name in unary:
        return unary[name]()
    raise ValueError(f"unknown complex op {name!r}")


def real_pow_complex(x: float, a: complex) -> complex:
    """x**a for real x > 0 through the real logarithm of x."""
    if not x > 0.0:
        raise DomainError(f"real_pow_complex needs x > 0, got {x!r}")
    a = complex(a)
    # modulus from the real power (correctly rounded in practice), phase from ln x
    return math.pow(x, a.real) * cmath.exp(1j * (a.imag * math.log(x)))


def expm1c(z: complex) -> complex:
    """exp(z) - 1 without cancellation for small |z|."""
    z = complex(z)
    x, y = z.real, z.imag
    half_sin = math.sin(0.5 * y)
    re = math.expm1(x) * math.cos(y) - 2.0 * half_sin * half_sin
    im = math.exp(x) * math.sin(y)
    return complex(re, im)


def nearest_nonpositive_integer(z: complex) -> int | None:
    """The non-positive integer closest to z, or None when Re z > 0.5."""
    z = complex(z)
    if z.real > 0.5:
        return None
    return min(0, round(z.real))


def pole_distance(z: complex) -> float:
    """Distance from z to the nearest pole of gamma (inf in the right half plane)."""
    n = nearest_nonpositive_integer(z)
    if n is None:
        return math.inf
    return abs(complex(z) - n)


def _lanczos(z: complex) -> complex:
    # Valid for Re z >= 0.5.
    z = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc


def gamma(z: complex) -> complex:
    """Complete gamma function for complex z.

    Uses a Lanczos sum on Re z >= 1/2 and the reflection formula elsewhere.
    Inputs within ``POLE_GUARD`` of 0, -1, -2, ... are rejected.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"gamma of non-finite argument {z!r}")
    if pole_distance(z) < POLE_GUARD:
        raise DomainError(
            f"gamma pole: {z!r} is within {POLE_GUARD:g} of {nearest_nonpositive_integer(z)}"
        )
    if z.real >= 0.5:
        return _lanczos(z)
    return math.pi / (cmath.sin(math.pi * z) * _lanczos(1.0 - z))
