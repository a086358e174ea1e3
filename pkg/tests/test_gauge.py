"""Gauge moves must preserve the shifted triangle identity; a non-closed
twist must break it."""

import math

import numpy as np

from dynrmat import gauge, rmatrix, verify

GAMMA = 0.23


def _xi(lam, a):
    return 1.3 + 0.2 * lam[a] ** 2 + 0.1 * a


def test_exact_form_is_closed_and_antisymmetric():
    form = gauge.exact_form_from_potential(3, _xi)
    lam = np.array([0.4, 1.3, 2.9])
    assert form.is_antisymmetric(lam)
    assert form.closedness_defect(lam) < 1e-12


def test_alpha_twist_preserves_identity():
    fam = rmatrix.basic_trigonometric(3, 0.37)
    form = gauge.exact_form_from_potential(3, _xi)
    rep = verify.qdybe_residual(gauge.apply_alpha_twist(fam, form), 10, 8,
                                1e-9)
    assert rep.passed, rep.residual_max


def test_relabel_translate_rescale_preserves_identity():
    fam = rmatrix.basic_rational(3)
    out = gauge.apply_relabel(fam, perm=[2, 0, 1], nu=[0.3, -0.2, 0.7],
                              scale=1.7)
    rep = verify.qdybe_residual(out, 10, 9, 1e-9)
    assert rep.passed, rep.residual_max


def test_potential_twist_preserves_spectral_identity():
    fam = rmatrix.spectral_trigonometric(2, GAMMA)
    out = gauge.apply_potential_twist(
        fam, lambda lam: 0.3 * lam[0] ** 2 - 0.2 * lam[0] * lam[1])
    rep = verify.qdybe_spectral_residual(out, 8, 10, 1e-9)
    assert rep.passed, rep.residual_max


def test_potential_twist_rejects_nonspectral():
    fam = rmatrix.basic_rational(2)
    import pytest
    with pytest.raises(ValueError):
        gauge.apply_potential_twist(fam, lambda lam: lam[0])


def test_spectral_rescale_preserves_identity():
    fam = rmatrix.spectral_rational(2, GAMMA)
    rep = verify.qdybe_spectral_residual(gauge.apply_spectral_scale(
        fam, 1.9), 8, 11, 1e-9)
    assert rep.passed, rep.residual_max


def test_broken_twist_breaks_identity():
    fam = rmatrix.basic_rational(3)
    bad = gauge.broken_twist(fam)
    rep = verify.qdybe_residual(bad, 10, 12, 1e-3)
    assert rep.residual_max > 1e-3


def test_broken_twist_is_antisymmetric_but_not_closed():
    fam = rmatrix.basic_rational(3)
    bad = gauge.broken_twist(fam)
    form = bad.params["form"] if hasattr(bad, "params") else None
    # reconstruct the control form directly for the structural check
    eps = 1e-2

    def phi(lam, a, b):
        c = min(i for i in range(3) if i not in (a, b))
        s = 1.0 if a < b else -1.0
        return math.exp(s * eps * float(lam[c]) ** 2)

    f = gauge.MultiplicativeTwoForm(3, phi, fam.step)
    lam = np.array([0.4, 1.3, 2.9])
    assert f.is_antisymmetric(lam)
    assert f.closedness_defect(lam) > 1e-4
    assert form is None or form is not f
