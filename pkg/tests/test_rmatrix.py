"""Matrix families: shifted triangle identity, Hecke relation,
inversion symmetry, tensor-product representations."""

from fractions import Fraction as F

import numpy as np
import pytest

from dynrmat import rmatrix, verify
from dynrmat import fusion as fu

TAU, GAMMA = 0.8j, 0.23


def test_qdybe_rational():
    for n in (2, 3):
        rep = verify.qdybe_residual(rmatrix.basic_rational(n), 12, 1,
                                    1e-10)
        assert rep.passed, rep.residual_max


def test_qdybe_trigonometric():
    for n in (2, 3):
        rep = verify.qdybe_residual(rmatrix.basic_trigonometric(n, 0.37),
                                    12, 2, 1e-10)
        assert rep.passed, rep.residual_max


def test_qdybe_elliptic_spectral():
    for n in (2, 3):
        rep = verify.qdybe_spectral_residual(
            rmatrix.basic_elliptic(n, TAU, GAMMA), 8, 3, 1e-8)
        assert rep.passed, rep.residual_max


def test_qdybe_degenerations():
    for n in (2, 3):
        for fam in (rmatrix.spectral_trigonometric(n, GAMMA),
                    rmatrix.spectral_rational(n, GAMMA)):
            rep = verify.qdybe_spectral_residual(fam, 8, 4, 1e-10)
            assert rep.passed, (fam.name, rep.residual_max)


def test_hecke_relation():
    for fam in (rmatrix.basic_rational(2), rmatrix.basic_rational(3),
                rmatrix.basic_trigonometric(2, 0.37),
                rmatrix.basic_trigonometric(3, 0.37)):
        rep = verify.hecke_residual(fam, 12, 5, 1e-9)
        assert rep.passed, (fam.name, rep.residual_max)


def test_unitarity_elliptic():
    for n in (2, 3):
        rep = verify.unitarity_residual(
            rmatrix.basic_elliptic(n, TAU, GAMMA), 8, 6, 1e-8)
        assert rep.passed, rep.residual_max


def test_rll_tensor_representation():
    fam = rmatrix.basic_elliptic(2, TAU, GAMMA)
    rv = verify.vector_representation(fam)
    rep2 = verify.tensor_representation(fam, rv, rv)
    out = verify.rll_residual(fam, rep2, 5, 7, 1e-8)
    assert out.passed, out.residual_max


def test_exchange_closed_form_satisfies_identity():
    # frozen oracle values at lam = (7/3, 0), q = 1
    fam = rmatrix.exchange_closed_form(2, 1)
    m = fam.fun((F(7, 3), F(0)))
    # beta_01 = 1/(lam1 - lam0 - 1) = -3/10; alpha_10 = (d-1)(d+1)/d^2
    # with d = lam0 - lam1 + 1 = 10/3, giving 91/100
    d = F(7, 3) - F(0) + 1
    assert m[0 * 2 + 1, 1 * 2 + 0] == 1 / (F(0) - F(7, 3) - 1)
    assert m[1 * 2 + 0, 1 * 2 + 0] == (d - 1) * (d + 1) / (d * d)
    # and the family passes the identity check at rational points
    cl = [fu.HwParam(None, F(7, 3) + F(2 * k, 7)) for k in range(3)]
    assert fu.exchange_qdybe_defect(1, cl) == 0.0


def test_exchange_closed_form_quantum_prefactor():
    q = F(1, 2)
    fam = rmatrix.exchange_closed_form(2, q)
    m = fam.fun((3, 0))
    from dynrmat.ring import sqrt_of
    s = sqrt_of(q)
    # alpha_01 entry is q^(-1) times the q^(1/2) prefactor
    assert m[0 * 2 + 1, 0 * 2 + 1] == s / q


def test_pole_distance_guards():
    fam = rmatrix.exchange_closed_form(2, 1)
    assert fam.pole_dist((-1.0, 0.0)) == pytest.approx(0.0)
    assert fam.pole_dist((2.5, 0.0)) == pytest.approx(3.5)
