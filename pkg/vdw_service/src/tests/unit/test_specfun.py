import math

import pytest

from src.domain.entities.quadrature import QuadSpec
from src.domain.entities.special import WeightedIntegralKey
from src.domain.services.specfun import (
    bessel_j,
    free_space_polys,
    m_nu,
    weighted_AB,
    weighted_AB_quadrature,
)
from src.utils.exceptions import DomainError

WEIGHTED_KEYS = ["A3+", "A4+", "A5+", "A3-", "A4-", "A5-", "B3", "B4", "B5"]


def test_bessel_values_at_origin():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j(2, 0.0) == 0.0


def test_bessel_known_value():
    assert bessel_j(0, 2.404825557695773) == pytest.approx(0.0, abs=1e-12)


def test_bessel_rejects_order_and_argument():
    with pytest.raises(DomainError):
        bessel_j(3, 1.0)
    with pytest.raises(DomainError):
        bessel_j(0, -1.0)


def test_free_space_polys_at_origin():
    a, b, g, h = free_space_polys(0.0)

    assert (a, b, g, h) == (1.0, 1.0, 6.0, 2.0)


def test_free_space_g_integral(integrator, spec):
    res = integrator.integrate_semiinf(lambda x: free_space_polys(x)[2], spec)

    assert res.value == pytest.approx(11.5, rel=1e-8)


def test_free_space_polys_reject_negative():
    with pytest.raises(DomainError):
        free_space_polys(-1.0)


@pytest.mark.parametrize("name", WEIGHTED_KEYS)
def test_weighted_integrals_match_quadrature(name, integrator):
    key = WeightedIntegralKey.parse(name)
    for lam in (0.5, 1.0, 2.0):
        size = math.factorial(key.order) / lam ** (key.order + 1)
        spec = QuadSpec(rel_tol=1e-10, abs_tol=1e-10 * size)
        for zeta in (0.0, 0.5, 1.0):
            closed = weighted_AB(key, lam, zeta)
            numeric = weighted_AB_quadrature(key, lam, zeta, integrator, spec)

            assert abs(closed - numeric) <= 1e-8 * size


def test_weighted_integral_without_oscillation():
    # zeta = 0 reduces every family to k!/lam^(k+1)
    for name in WEIGHTED_KEYS:
        key = WeightedIntegralKey.parse(name)
        assert weighted_AB(key, 2.0, 0.0) == pytest.approx(math.factorial(key.order) / 2.0 ** (key.order + 1))


def test_weighted_integral_exact_zero():
    assert weighted_AB(WeightedIntegralKey.parse("A4+"), 0.5, 1.0) == pytest.approx(0.0, abs=1e-14)


def test_weighted_integral_rejects_lambda():
    with pytest.raises(DomainError):
        weighted_AB(WeightedIntegralKey.parse("A3+"), 0.0, 1.0)
    with pytest.raises(DomainError):
        weighted_AB(WeightedIntegralKey.parse("M0"), 1.0, 1.0)


def test_weighted_key_parse():
    with pytest.raises(DomainError):
        WeightedIntegralKey.parse("A6+")
    with pytest.raises(DomainError):
        WeightedIntegralKey.parse("C3")


def test_m_nu_closed_values(integrator, spec):
    assert m_nu(0, 0.0, 0.0, 2.0, integrator, spec) == pytest.approx(720.0 / 2.0 ** 7)
    assert m_nu(1, 0.0, 0.5, 2.0, integrator, spec) == 0.0


def test_m_nu_matches_semi_infinite_quadrature(integrator, spec):
    value = m_nu(1, 0.3, 0.5, 2.0, integrator, spec)
    reference = integrator.integrate_semiinf(
        lambda x: x ** 6 * math.exp(-2.0 * x) * bessel_j(1, 0.3 * x) * bessel_j(1, 0.5 * x), spec, scale=0.5
    ).value

    assert value == pytest.approx(reference, rel=1e-7)


def test_m_nu_rejects_inputs(integrator, spec):
    with pytest.raises(DomainError):
        m_nu(3, 0.1, 0.1, 1.0, integrator, spec)
    with pytest.raises(DomainError):
        m_nu(0, 0.1, 0.1, 0.0, integrator, spec)
