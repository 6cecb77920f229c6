import math

import pytest

from altxi.errors import ConvergenceError, DomainError
from altxi.mellin_oracle import (
    SCHEMES,
    QuadratureSpec,
    integrate,
    mellin_xi_a,
    mellin_xi_a_unit_interval,
    special_integral,
    special_integrals,
)
from altxi.zeta_family import xi_a_gamma_series

import numpy as np

LN2 = math.log(2)
S12 = 0.5 + 12j
XI_A_HALF = -0.68233953009744415546
XI_A_S12 = -0.00052180439356054198443


@pytest.fixture(params=SCHEMES)
def spec(request):
    return QuadratureSpec(scheme=request.param)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(scheme="simpson")
    with pytest.raises(ValueError):
        QuadratureSpec(points=8)
    with pytest.raises(ValueError):
        QuadratureSpec(split_at=0.0)


def test_integrate_polynomial_and_exponential(spec):
    v, err = integrate(lambda x: x ** 3, 0.0, 2.0, spec)
    assert abs(v - 4.0) < 1e-13 and err < 1e-12
    v, _ = integrate(np.exp, -1.0, 3.0, spec)
    assert abs(v - (math.e ** 3 - math.e ** -1)) < 1e-12


def test_mellin_examples(spec):
    assert abs(mellin_xi_a(2.0, spec).value + math.pi / 4) < 1e-8
    assert abs(mellin_xi_a(0.0, spec).value + LN2) < 1e-8
    assert abs(mellin_xi_a(S12, spec).value - (-0.000521803749)) < 1e-6
    assert abs(mellin_xi_a(S12, spec).value - XI_A_S12) < 1e-12


def test_direct_route(spec):
    assert abs(mellin_xi_a(2.0, spec, route="direct").value + math.pi / 4) < 1e-8
    assert abs(mellin_xi_a(0.5 + 3j, spec, route="direct").value - xi_a_gamma_series(0.5 + 3j).value) < 1e-8
    with pytest.raises(DomainError):
        mellin_xi_a(-0.5, spec, route="direct")
    with pytest.raises(ValueError):
        mellin_xi_a(0.5, spec, route="sideways")


@pytest.mark.parametrize("c", [0.5, 2.0, 3.0])
def test_split_point_does_not_matter(c):
    spec = QuadratureSpec(split_at=c)
    for s in (0.3 + 2j, 2.0, -1.0 + 1j):
        assert abs(mellin_xi_a(s, spec).value - xi_a_gamma_series(s).value) < 1e-9


def test_unit_interval_examples(spec):
    assert abs(mellin_xi_a_unit_interval(0.5, spec).value - (-0.6823392)) < 5e-7
    assert abs(mellin_xi_a_unit_interval(0.5, spec).value - XI_A_HALF) < 1e-10
    a = mellin_xi_a_unit_interval(0.3 + 2j, spec).value
    assert abs(a - mellin_xi_a(0.3 + 2j, spec).value) < 1e-8
    assert abs(mellin_xi_a_unit_interval(S12, spec).value - (-0.000521803749)) < 1e-6
    for bad in (0.0, 1.0, 1.2 + 1j):
        with pytest.raises(DomainError):
            mellin_xi_a_unit_interval(bad, spec)


def test_special_integrals(spec):
    over_x, over_sqrt, plain = special_integrals(spec)
    assert abs(over_x + LN2) < 1e-8
    assert abs(over_sqrt + LN2) < 1e-8
    assert abs(plain + math.pi / 4) < 1e-8
    assert special_integral("varphi_plain", spec).value.real == plain
    with pytest.raises(ValueError):
        special_integral("varphi_squared", spec)


def test_scheme_independence():
    a, b = (QuadratureSpec(scheme=s) for s in SCHEMES)
    for s in (0.0, 2.0, 0.5, S12, 0.3 + 2j):
        assert abs(mellin_xi_a(s, a).value - mellin_xi_a(s, b).value) < 1e-8
    assert abs(mellin_xi_a_unit_interval(0.4 + 5j, a).value - mellin_xi_a_unit_interval(0.4 + 5j, b).value) < 1e-8
    for x, y in zip(special_integrals(a), special_integrals(b)):
        assert abs(x - y) < 1e-8


def test_refinement_convergence(spec):
    doubled = QuadratureSpec(scheme=spec.scheme, points=2 * spec.points)
    assert abs(mellin_xi_a(0.5, spec).value - mellin_xi_a(0.5, doubled).value) < 1e-9


GRID = [complex(sig, t) for sig in (0.1, 0.3, 0.5, 0.7, 0.9) for t in (0.0, 1.0, 5.0, 12.0)]


@pytest.mark.parametrize("s", GRID)
def test_oracle_agrees_with_series(s):
    assert abs(mellin_xi_a(s).value - xi_a_gamma_series(s).value) < 1e-7


def test_undersampled_oscillation_is_reported():
    # x^(it/2) at t = 300 cannot be resolved with 64 nodes
    with pytest.raises(ConvergenceError):
        mellin_xi_a(0.5 + 300j, QuadratureSpec(points=64))


def test_error_estimate_reflects_point_count():
    coarse = mellin_xi_a(0.5 + 20j, QuadratureSpec(points=200))
    fine = mellin_xi_a(0.5 + 20j, QuadratureSpec(points=2000))
    assert fine.est_error < coarse.est_error
    assert abs(coarse.value - fine.value) <= coarse.est_error + fine.est_error
