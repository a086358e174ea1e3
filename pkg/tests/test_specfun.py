"""The odd Jacobi theta function: series evaluation, quasi-periodicity,
and the degenerations used by the spectral R-matrix families."""

import cmath
import math

import pytest

from dynrmat.specfun import theta, theta_prime, theta_log_deriv, \
    theta_trig, theta_rat

TAU = 0.8j


def brute_theta(u, tau, terms=60):
    """Independent oracle: direct two-sided sum over j in Z + 1/2."""
    total = 0.0
    for k in range(-terms, terms):
        j = k + 0.5
        total += cmath.exp(
            1j * math.pi * (j * j * tau + 2 * j * (u + 0.5)))
    return -total


@pytest.mark.parametrize("u", [0.13, 0.41 + 0.22j, -0.37 + 0.05j, 1.7,
                               2.3 + 1.1j])
def test_theta_matches_direct_sum(u):
    got = theta(u, TAU)
    ref = brute_theta(u, TAU)
    assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))


def test_theta_is_odd():
    for u in (0.23, 0.4 + 0.1j, -0.7 + 0.3j):
        a, b = theta(u, TAU), theta(-u, TAU)
        assert abs(a + b) <= 1e-13 * max(1.0, abs(a))


def test_theta_quasi_periodicity():
    u = 0.31 + 0.07j
    t1 = theta(u + 1, TAU)
    assert abs(t1 + theta(u, TAU)) <= 1e-12 * abs(t1)
    t2 = theta(u + TAU, TAU)
    fac = -cmath.exp(-1j * math.pi * (TAU + 2 * u))
    assert abs(t2 - fac * theta(u, TAU)) <= 1e-12 * abs(t2)


def test_theta_zero_at_origin_and_real_derivative():
    assert abs(theta(0.0, TAU)) < 1e-14
    d = theta_prime(0.0, TAU)
    assert abs(d.imag) <= 1e-12 * abs(d)
    assert d.real > 0


def test_theta_log_deriv_consistency():
    u = 0.27 + 0.12j
    h = 1e-6
    fd = (theta(u + h, TAU) - theta(u - h, TAU)) / (2 * h * theta(u, TAU))
    assert abs(theta_log_deriv(u, TAU) - fd) < 1e-8


def test_degenerations_are_sine_and_linear():
    assert theta_trig(0.3) == pytest.approx(math.sin(math.pi * 0.3))
    assert theta_rat(0.42) == 0.42
