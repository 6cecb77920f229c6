import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from altxi.errors import DomainError
from altxi.theta_kernel import (
    QuartetCoefficients,
    phi_difference,
    phi_series,
    quartet_sum,
    quartet_term,
    theta_transform_residuals,
    theta_trio,
    varphi,
    varphi_derivative,
    varphi_from_theta,
    varphi_log,
    varphi_minimum,
)

# 40-digit references
VARPHI_1 = -0.37036173254946281412
VARPHI_01 = -0.0012276063192397655324
VARPHI_PRIME_1 = 0.092590433137365703530
X_MIN, VARPHI_MIN = 0.86633468282254434279, -0.37706610481813683182


def test_coefficients():
    q = QuartetCoefficients.for_index(0)
    assert (q.A, q.B, q.C) == (math.pi / 4, math.pi, 9 * math.pi / 4)
    for m in range(20):
        A, B, C = QuartetCoefficients.for_index(m)
        assert A < B < C
        assert B == pytest.approx(math.pi * (4 * m + 2) ** 2 / 4, rel=1e-15)
    with pytest.raises(DomainError):
        QuartetCoefficients.for_index(-1)


def test_phi_series_examples():
    assert phi_series(1e6) == 0.0
    brute = sum((-1) ** (n + 1) * math.exp(-math.pi * n * n) for n in range(1, 11))
    assert phi_series(1.0) == pytest.approx(brute, rel=1e-15)
    assert abs(phi_series(1.0) - phi_series(0.25) - (-0.370361)) < 1e-6


def test_quartet_term_examples():
    assert abs(quartet_term(0, 1.0) - (-0.37036)) < 1e-5
    assert abs(quartet_term(0, 100.0)) < 1e-30
    ref = -math.exp(-25 * math.pi / 4) + 2 * math.exp(-9 * math.pi) - math.exp(-49 * math.pi / 4)
    assert quartet_term(1, 1.0) == pytest.approx(ref, rel=1e-14)
    assert -3e-9 < quartet_term(1, 1.0) < -2.9e-9


def test_varphi_examples():
    assert abs(varphi(1.0) - VARPHI_1) < 1e-15
    assert abs(varphi(1.0) - (-0.370361)) < 1e-6
    assert abs(varphi(0.1) - VARPHI_01) < 1e-17
    assert abs(varphi(0.1) - (-0.00122)) < 1e-5
    assert varphi(0.1) == pytest.approx(varphi(10.0) * math.sqrt(10.0), rel=1e-14)
    assert abs(varphi(0.8666) - (-0.377066)) < 1e-6


def test_varphi_domain():
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(DomainError):
            varphi(bad)


def test_derivative():
    d = varphi_derivative(1.0, 1e-5)
    assert abs(d - 0.092590) < 1e-5
    assert abs(d - VARPHI_PRIME_1) < 1e-9
    assert abs(d + varphi(1.0) / 4) < 1e-6
    x_min, _ = varphi_minimum()
    assert abs(varphi_derivative(x_min, 1e-5)) < 1e-4
    with pytest.raises(DomainError):
        varphi_derivative(1.0, 0.6)


def test_minimum():
    x_min, v_min = varphi_minimum()
    assert abs(x_min - X_MIN) < 1e-6
    assert abs(v_min - VARPHI_MIN) < 1e-12
    assert abs(x_min - 0.8666) < 1e-3
    assert abs(-v_min - 0.377066) < 1e-6
    # a global minimum, not a local one
    xs = np.geomspace(1e-2, 1e2, 400)
    assert all(varphi(x) >= v_min for x in xs)


@pytest.mark.parametrize("x", [1.1, 2.0, 5.0, 10.0, 20.0])
def test_reflection_two_routes(x):
    direct = quartet_sum(1.0 / x)  # forced direct sum below 1
    assert abs(direct - varphi(x) * math.sqrt(x)) < 1e-13


@given(st.floats(1e-3, 1e3))
def test_reflection_law(x):
    assert abs(varphi(1.0 / x) - varphi(x) * math.sqrt(x)) <= 1e-13 * max(1.0, abs(varphi(1.0 / x)))


def test_negativity_log_grid():
    # varphi(1e3) ~ -exp(-785) is below the double range; the sign comes from the log form
    for x in np.geomspace(1e-3, 1e3, 200):
        x = float(x)
        sign, log_abs = varphi_log(x)
        assert sign == -1
        v = varphi(x)
        if log_abs > -700:
            assert v < 0.0
            assert v == pytest.approx(-math.exp(log_abs), rel=1e-12)
        else:
            assert v <= 0.0


@given(st.floats(0.05, 20.0))
def test_varphi_log_matches_varphi(x):
    sign, log_abs = varphi_log(x)
    assert sign * math.exp(log_abs) == pytest.approx(varphi(x), rel=1e-13)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 4.0])
def test_quartet_matches_phi_difference(x):
    assert abs(quartet_sum(x) - phi_difference(x)) < 1e-13


def test_theta_trio_examples():
    t, ta, ts = theta_trio(100.0)
    assert t == 1.0 and ta == 1.0
    # only the n = 0 term of the half-integer series survives: 2 exp(-25 pi)
    assert ts == pytest.approx(2 * math.exp(-25 * math.pi), rel=1e-15)
    assert abs(ts) < 1e-33
    assert theta_trio(1.0)[0] == pytest.approx(1.0864348112133080146, rel=1e-15)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 3.0])
def test_theta_transformations(x):
    assert max(theta_transform_residuals(x)) < 1e-12


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 3.0])
def test_theta_decomposition(x):
    assert abs(varphi_from_theta(x) - varphi(x)) < 1e-13
