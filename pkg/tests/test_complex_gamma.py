import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from altxi.complex_gamma import (
    POLE_GUARD,
    complex_op,
    expm1c,
    gamma,
    pole_distance,
    real_pow_complex,
)
from altxi.errors import DomainError

mpmath = pytest.importorskip("mpmath")


def finite_complex(re_lo, re_hi, im_max):
    return st.builds(
        complex,
        st.floats(re_lo, re_hi, allow_nan=False, allow_infinity=False),
        st.floats(-im_max, im_max, allow_nan=False, allow_infinity=False),
    )


def test_complex_op_examples():
    assert complex_op("exp", 0) == 1
    assert abs(complex_op("log", complex_op("exp", 1 + 2j)) - (1 + 2j)) < 1e-15
    assert abs(complex_op("exp", 1j * math.pi) + 1) < 1e-15
    assert complex_op("div", 6 + 0j, 2) == 3
    assert complex_op("conj", 1 + 2j) == 1 - 2j
    assert complex_op("abs", 3 + 4j) == 5


def test_complex_op_domain_errors():
    with pytest.raises(DomainError):
        complex_op("div", 1, 0)
    with pytest.raises(DomainError):
        complex_op("log", 0)
    with pytest.raises(ValueError):
        complex_op("pow", 1, 2)


def test_log_principal_branch():
    assert complex_op("log", -1).imag == pytest.approx(math.pi)


def test_real_pow_complex():
    assert real_pow_complex(4.0, 0.5) == pytest.approx(2.0, rel=1e-15)
    assert real_pow_complex(1.0, 0.5 + 12j) == 1
    r = real_pow_complex(math.pi, -(0.25 + 6j))
    assert abs(abs(r) - math.pi ** -0.25) < 1e-14 * math.pi ** -0.25
    with pytest.raises(DomainError):
        real_pow_complex(0.0, 1j)
    with pytest.raises(DomainError):
        real_pow_complex(-2.0, 0.5)


@given(st.floats(1e-3, 1e3), finite_complex(-20, 20, 50))
def test_real_pow_modulus(x, a):
    r = real_pow_complex(x, a)
    assert abs(abs(r) - x ** a.real) <= 1e-14 * x ** a.real


def test_expm1c_small_and_large():
    for z in (1e-12 + 1e-13j, 1e-8j, -3e-10, 0.5 + 2j):
        ref = complex(mpmath.expm1(mpmath.mpc(z)))
        assert abs(expm1c(z) - ref) <= 1e-15 * abs(ref) + 1e-300


def test_gamma_examples():
    assert gamma(1) == pytest.approx(1.0, rel=1e-15)
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-15
    # published Gamma(1/4 + 6i)
    assert abs(gamma(0.25 + 6j) - (-0.000044667603 - 0.000121313951j)) < 1e-10


def test_gamma_pole_guard():
    for n in (0, -1, -7):
        with pytest.raises(DomainError, match=str(n)):
            gamma(n + 0.5 * POLE_GUARD)
    # just outside the guard is fine
    assert math.isfinite(abs(gamma(-3 + 2 * POLE_GUARD)))
    assert pole_distance(2 + 1j) == math.inf


@settings(max_examples=100)
@given(finite_complex(0.1, 10, 20))
def test_gamma_recurrence(z):
    g1 = gamma(z + 1)
    assert abs(g1 - z * gamma(z)) / abs(g1) < 1e-11


@given(finite_complex(-10, 10, 40))
def test_gamma_conjugate_symmetry(z):
    if pole_distance(z) < 1e-3:
        return
    g = gamma(z)
    assert abs(gamma(z.conjugate()) - g.conjugate()) <= 1e-12 * abs(g)


@given(finite_complex(-6, 6, 10))
def test_gamma_reflection(z):
    if min(abs(z - round(z.real)), 1.0) < 1e-3:
        return
    r = gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z) / math.pi
    assert abs(r - 1) < 1e-10


@settings(max_examples=200)
@given(finite_complex(-25, 35, 35))
def test_gamma_against_mpmath(z):
    if pole_distance(z) < 1e-3 or abs(z) > 50:
        return
    ref = complex(mpmath.gamma(mpmath.mpc(z)))
    assert abs(gamma(z) - ref) <= 1e-12 * abs(ref)
