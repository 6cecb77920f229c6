import math

import pytest
from hypothesis import given, settings, strategies as st

from altxi.complex_gamma import gamma
from altxi.errors import ConvergenceError, DomainError
from altxi.incomplete_gamma import (
    check_additivity,
    lower_gamma,
    lower_series,
    prefer_continued_fraction,
    upper_continued_fraction,
    upper_gamma,
)
from altxi.settings import EvalSettings

OMEGA = 0.25 + 6j
PI = math.pi

# gamma(omega, z) and Gamma(omega, z) to 17 digits (mpmath, 40 digits working precision)
REFERENCE = {
    1: (-0.072862357185935991 - 0.0023699783275052917j, 0.072817689570255172 + 0.0022486643785538065j),
    4: (0.00052208946069844116 - 0.0091831347902084274j, -0.00056675707637926026 + 0.0090618208412569422j),
    9: (-0.00019109052675559231 - 9.245623721885387e-5j, 0.00014642291107477321 - 2.8857711732631329e-5j),
    25: (-4.4667840562602267e-5 - 0.0001213137558982496j, 2.2488178315998028e-10 - 1.9305323560024652e-10j),
    36: (-4.4667615687777715e-5 - 0.00012131394899190961j, 6.9586079524963037e-15 + 4.0424409922903686e-14j),
    49: (-4.4667615680817894e-5 - 0.00012131394895148513j, -1.2131448917220537e-18 - 7.1383433361389292e-20j),
}


def test_lower_gamma_examples():
    assert lower_gamma(2 + 1j, 0).value == 0
    assert abs(lower_gamma(1, 1).value - (1 - math.exp(-1))) < 1e-15
    assert abs(lower_gamma(OMEGA, PI / 4).value - (-0.072862357 - 0.002369978j)) < 1e-9
    assert abs(lower_gamma(OMEGA, 9 * PI / 4).value - (-0.000191090527 - 0.000092456237j)) < 1e-12


def test_upper_gamma_examples():
    assert abs(upper_gamma(1, 1).value - math.exp(-1)) < 1e-15
    assert abs(upper_gamma(OMEGA, PI / 4).value - (0.072817689397 + 0.00224866405j)) < 1e-9
    assert abs(upper_gamma(OMEGA, 25 * PI / 4).value - (0.000000000238 - 0.000000000194j)) < 2e-11


@pytest.mark.parametrize("k", sorted(REFERENCE))
def test_table_grid_relative_accuracy(k):
    low, up = REFERENCE[k]
    z = k * PI / 4
    assert abs(lower_gamma(OMEGA, z).value - low) <= 1e-12 * abs(low)
    assert abs(upper_gamma(OMEGA, z).value - up) <= 1e-11 * abs(up)


def test_upper_gamma_closed_form_integer_order():
    # Gamma(3, z) = (z^2 + 2z + 2) e^-z
    for z in (0.5, 2.0, 7.0, 40.0):
        ref = (z * z + 2 * z + 2) * math.exp(-z)
        assert abs(upper_gamma(3, z).value - ref) <= 1e-14 * ref
        assert abs(upper_continued_fraction(3, z).value - ref) <= 1e-13 * ref


def test_upper_gamma_at_poles_of_gamma():
    # Gamma(0, z) = E1(z), Gamma(-1, z) = e^-z / z - E1(z)
    e1 = 0.21938393439552027  # E1(1)
    assert abs(upper_gamma(0, 1.0).value - e1) < 1e-14
    assert abs(upper_gamma(-1, 1.0).value - (math.exp(-1) - e1)) < 1e-14


def test_method_routing():
    assert upper_gamma(OMEGA, PI / 4).method == "difference"
    assert upper_gamma(OMEGA, 25 * PI / 4).method == "continued_fraction"
    assert upper_gamma(2, 30).method == "continued_fraction"
    assert prefer_continued_fraction(-1.1 + 0j, 1.0)
    assert lower_gamma(2, 600).method == "difference"
    assert lower_gamma(2, 5).method == "series"


def test_large_z_uses_difference_without_overflow():
    assert abs(lower_gamma(2.5, 800).value - gamma(2.5)) < 1e-14


def test_domain_errors():
    with pytest.raises(DomainError):
        lower_gamma(0, 1)
    with pytest.raises(DomainError):
        lower_gamma(-2 + 1e-12j, 1)
    with pytest.raises(DomainError):
        lower_gamma(1, -1)
    with pytest.raises(DomainError):
        upper_gamma(1, 0)
    with pytest.raises(DomainError):
        lower_series(1, 501)


def test_convergence_error_carries_partial():
    with pytest.raises(ConvergenceError) as info:
        lower_series(OMEGA, 9 * PI / 4, EvalSettings(max_terms=5))
    assert info.value.partial is not None
    assert info.value.terms_used == 5


def test_terms_used_bounded_by_max_terms():
    s = EvalSettings(max_terms=200)
    for z in (0.1, 3.0, 30.0):
        for fn in (lower_gamma, upper_gamma):
            assert fn(OMEGA, z, s).terms_used <= s.max_terms


@pytest.mark.parametrize(
    "a, z, tol",
    [(1, 1, 1e-13), (OMEGA, PI, 1e-9), (3, 2, 1e-13)],
)
def test_additivity_examples(a, z, tol):
    assert check_additivity(a, z) < tol


ADDITIVITY_ORDERS = [0.25 + 6j, 0.25 - 6j, 0.5, 2.0] + [0.25 + s * 0.5j * t for t in (1, 12, 25) for s in (1, -1)]
ADDITIVITY_Z = [PI / 4, PI, 9 * PI / 4, 25 * PI / 4]


@pytest.mark.parametrize("a", ADDITIVITY_ORDERS)
@pytest.mark.parametrize("z", ADDITIVITY_Z)
def test_additivity_grid(a, z):
    assert check_additivity(a, z) < 1e-9


@pytest.mark.parametrize("a", ADDITIVITY_ORDERS)
@pytest.mark.parametrize("z", ADDITIVITY_Z)
def test_lower_recurrence(a, z):
    lhs = lower_gamma(a + 1, z).value
    rhs = a * lower_gamma(a, z).value - z ** a * math.exp(-z)
    assert abs(lhs - rhs) <= 1e-10 * abs(lhs)


@given(
    st.floats(0.05, 5.0),
    st.floats(-25.0, 25.0),
    st.floats(0.01, 60.0),
)
def test_lower_conjugate_symmetry(re, im, z):
    a = complex(re, im)
    v = lower_gamma(a, z).value
    assert abs(lower_gamma(a.conjugate(), z).value - v.conjugate()) <= 1e-12 * abs(v)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3.0, 5.0), st.floats(-20.0, 20.0), st.floats(0.2, 80.0))
def test_upper_gamma_against_mpmath(re, im, z):
    mpmath = pytest.importorskip("mpmath")
    a = complex(re, im)
    ref = complex(mpmath.gammainc(mpmath.mpc(a), z))
    got = upper_gamma(a, z)
    # relative accuracy, loosened where the difference route cancels
    scale = abs(ref) + 1e-13 * (abs(gamma(a)) if abs(a - round(re)) > 1e-6 or round(re) > 0 else 0.0)
    assert abs(got.value - ref) <= 1e-11 * scale


def _trapezoid_upper(a, z, width=60.0, n=20000):
    # plain composite Simpson on [z, z + width]
    h = width / n
    total = 0j
    for k in range(n + 1):
        t = z + k * h
        w = 1 if k in (0, n) else (4 if k % 2 else 2)
        total += w * t ** (a - 1) * math.exp(-t)
    return total * h / 3


@pytest.mark.parametrize("k", [1, 4, 9, 25])
def test_upper_gamma_against_quadrature(k):
    z = k * PI / 4
    ref = _trapezoid_upper(OMEGA, z)
    assert abs(upper_gamma(OMEGA, z).value - ref) <= 1e-8 * abs(ref)
