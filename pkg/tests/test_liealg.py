"""Classical r-matrices: structure constants, the classical dynamical
equation, coupling constants, and semiclassical limits of the quantum
families."""

from fractions import Fraction

import numpy as np

from dynrmat import la, liealg


def test_cartan_basis_orthonormal_and_traceless():
    for n in (2, 3, 4):
        basis = liealg.cartan_basis(n)
        assert len(basis) == n - 1
        for i, x in enumerate(basis):
            xf = la.to_float(x)
            assert abs(np.trace(xf)) < 1e-12
            for j, y in enumerate(basis):
                g = np.trace(xf @ la.to_float(y))
                assert abs(g - (1.0 if i == j else 0.0)) < 1e-12


def test_cartan_pair_matrix_entries():
    for n in (2, 3):
        m = liealg.cartan_pair_matrix(n)
        for a in range(n):
            for b in range(n):
                expect = (1 if a == b else 0) - Fraction(1, n)
                assert m[a * n + b, a * n + b] == expect


def test_casimir_is_permutation_minus_trace_part():
    for n in (2, 3):
        omega = liealg.casimir_tensor(n)
        expect = la.permutation_matrix(n) - Fraction(1, n) * la.eye(
            n * n, Fraction(1))
        assert la.sup_norm(la.to_float(omega) - la.to_float(expect)) == 0.0


def test_cdybe_rational_and_trigonometric():
    for n in (2, 3):
        for fam in (liealg.classical_rational(n),
                    liealg.classical_trigonometric(n)):
            rep = liealg.cdybe_residual(fam, count=10, seed=5, tol=1e-7)
            assert rep.passed, (fam.name, rep.residual_max)


def test_cdybe_spectral_elliptic():
    fam = liealg.classical_elliptic(2, 0.8j)
    rep = liealg.cdybe_spectral_residual(fam, count=8, seed=6, tol=1e-6)
    assert rep.passed, rep.residual_max


def test_coupling_constants():
    eps0, d0 = liealg.coupling_constant(liealg.classical_rational(3))
    assert abs(eps0) < 1e-10 and d0 < 1e-10
    eps1, d1 = liealg.coupling_constant(liealg.classical_trigonometric(3))
    assert abs(eps1 - 1) < 1e-10 and d1 < 1e-10


def test_elliptic_residue_matches_casimir():
    fam = liealg.classical_elliptic(2, 0.8j)
    anti, res_defect, eps = liealg.spectral_coupling(fam)
    assert anti < 1e-10
    assert res_defect < 1e-5
    assert abs(eps - 1) < 1e-5


def test_classical_limit_rational_exact():
    lam = np.array([1.7, 3.9, 6.2])
    errs = liealg.classical_limit("rational", 3,
                                  lam, [2.0 ** -k for k in range(3, 9)])
    assert max(errs) < 1e-12


def test_classical_limit_trig_first_order():
    lam = np.array([1.7, 3.9]) / 4
    hbars = [2.0 ** -k for k in range(3, 9)]
    errs = liealg.classical_limit("trig", 2, lam, hbars)
    assert liealg.convergence_order(hbars, errs) > 0.9


def test_classical_limit_elliptic_first_order():
    lam = np.array([1.7, 3.9]) / 4
    hbars = [2.0 ** -k for k in range(3, 9)]
    errs = liealg.classical_limit("elliptic", 2, lam, hbars,
                                  tau=0.8j, u=0.31 + 0.04j)
    assert liealg.convergence_order(hbars, errs) > 0.9
