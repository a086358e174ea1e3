"""sl_n structure data, classical r-matrix families, and their checks.

The classical counterpart of the shifted triangle identity is the
differential equation

    sum_i ( x_i^(1) d r^23/dx_i - x_i^(2) d r^13/dx_i + x_i^(3) d r^12/dx_i )
    + [r^12, r^13] + [r^12, r^23] + [r^13, r^23] = 0

for r : h* -> g (x) g, with x_i an orthonormal basis of the Cartan
subalgebra h.  Everything here is realized concretely in the vector
representation of sl_n: root elements are matrix units, the invariant
pairing is the trace form, and the key simplification

    sum_i (x_i)_aa x_i = E_aa - Id/n        (exactly)

lets the derivative terms be assembled from exact rational coefficient
matrices and per-coordinate derivatives of r.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import la, specfun
from . import tensorcore as tc


def cartan_basis(n):
    """Orthonormal (trace form) basis of traceless diagonal n x n matrices.

    Gram-Schmidt on E_aa - E_{a+1,a+1} gives the standard choice
    x_i = diag(1, ..., 1, -i, 0, ..., 0) / sqrt(i(i+1)) with i ones.
    """
    out = []
    for i in range(1, n):
        d = np.zeros(n)
        d[:i] = 1.0
        d[i] = -float(i)
        out.append(np.diag(d / math.sqrt(i * (i + 1))))
    return out


def cartan_pair_matrix(n):
    """sum_i x_i (x) x_i on C^n (x) C^n, exactly: diag entries
    delta_ab - 1/n at positions (ab, ab)."""
    m = la.zeros((n * n, n * n))
    for a in range(n):
        for b in range(n):
            m[a * n + b, a * n + b] = (1 if a == b else 0) - Fraction(1, n)
    return m


def casimir_tensor(n):
    """Omega = sum_i x_i (x) x_i + sum_{a != b} E_ab (x) E_ba, which in the
    vector representation equals P - Id/n exactly."""
    return la.permutation_matrix(n) - Fraction(1, n) * la.eye(n * n, 1)


def rho_weights(n):
    """Half-sum of positive roots as diagonal weights ((n-1)/2, ..., -(n-1)/2)."""
    return [Fraction(n - 1, 2) - a for a in range(n)]


def sl_data(n):
    """Bundle of sl_n structure constants used across the package."""
    roots = [(a, b) for a in range(n) for b in range(n) if a != b]
    return {
        "n": n,
        "cartan": cartan_basis(n),
        "cartan_pair": cartan_pair_matrix(n),
        "casimir": casimir_tensor(n),
        "roots": roots,
        "positive_roots": [(a, b) for a, b in roots if a < b],
        "rho": rho_weights(n),
    }


def _wedge_block(n, coeff):
    """sum_{a<b} coeff(a, b) (E_ab (x) E_ba - E_ba (x) E_ab)."""
    m = la.zeros((n * n, n * n))
    for a in range(n):
        for b in range(n):
            if a < b:
                c = coeff(a, b)
                m[a * n + b, b * n + a] = c
                m[b * n + a, a * n + b] = -c
    return m


@dataclass
class ClassicalFamily:
    """A classical r-matrix family in the vector representation of sl_n."""

    name: str
    n: int
    spectral: bool
    fun: object
    pole_dist: object


def _diff_pole_dist(lam, lattice=False):
    best = float("inf")
    n = len(lam)
    for a in range(n):
        for b in range(n):
            if a != b:
                d = float(lam[a]) - float(lam[b])
                if lattice:
                    d = abs(d - round(d))
                best = min(best, abs(d))
    return best


def classical_rational(n):
    """r(lam) = sum_{a<b} (E_ab ^ E_ba) / (lam_a - lam_b); coupling 0."""
    def fun(lam):
        return _wedge_block(n, lambda a, b: 1 / (lam[a] - lam[b]))

    return ClassicalFamily("classical-rational", n, False, fun,
                           _diff_pole_dist)


def classical_trigonometric(n):
    """r = Omega/2 + sum_{a<b} coth((lam_a - lam_b)/2)/2 E_ab ^ E_ba;
    coupling 1."""
    omega = casimir_tensor(n)

    def fun(lam):
        def coeff(a, b):
            x = complex(lam[a] - lam[b]) / 2
            return cmath.cosh(x) / cmath.sinh(x) / 2

        return la.to_float(omega) / 2 + _wedge_block(n, coeff)

    return ClassicalFamily("classical-trig", n, False, fun, _diff_pole_dist)


def classical_elliptic(n, tau):
    """r(u, lam) = (theta'(u)/theta(u)) sum_i x_i (x) x_i
    + sum over all roots of theta(u + lam_a - lam_b) theta'(0)
      / (theta(lam_a - lam_b) theta(u)) E_ab (x) E_ba; coupling 1."""
    tau = complex(tau)
    cart = la.to_float(cartan_pair_matrix(n)).astype(complex)
    tprime0 = specfun.theta_prime(0.0, tau)

    def fun(u, lam):
        m = specfun.theta_log_deriv(u, tau) * cart
        m = np.array(m, dtype=object)
        tu = specfun.theta(u, tau)
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                d = complex(lam[a] - lam[b])
                m[a * n + b, b * n + a] = m[a * n + b, b * n + a] + \
                    specfun.theta(u + d, tau) * tprime0 / \
                    (specfun.theta(d, tau) * tu)
        return m

    def pole_dist(lam):
        return _diff_pole_dist(lam, lattice=True)

    return ClassicalFamily("classical-elliptic", n, True, fun, pole_dist)


def _partial(fun, lam, b, h=1e-4):
    """Fourth-order central difference of fun in coordinate lam_b."""
    lam = np.array(lam, dtype=float)

    def at(s):
        shifted = lam.copy()
        shifted[b] += s
        return np.asarray(fun(shifted), dtype=complex)

    return (8 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12 * h)


def _cartan_projector_legs(n):
    """H_a = E_aa - Id/n for a = 0..n-1 (exact object matrices)."""
    out = []
    for a in range(n):
        m = la.zeros((n, n))
        for c in range(n):
            m[c, c] = (1 if c == a else 0) - Fraction(1, n)
        out.append(m)
    return out


def cdybe_residual_at(rfun, lam, n, h=1e-4):
    """Residual of the classical equation at a single parameter point.

    ``rfun(lam)`` must return the n^2 x n^2 matrix of r on the first two
    legs; derivative terms use exact Cartan projectors and fourth-order
    finite differences.
    """
    v = tc.vector_rep(n)
    spaces = [v, v, v]
    legs = {(0, 1): None, (0, 2): None, (1, 2): None}
    rmat = np.asarray(rfun(np.array(lam, dtype=float)), dtype=complex)
    emb = {pair: tc.embed(rmat, spaces, list(pair)) for pair in legs}
    acc = np.zeros((n ** 3, n ** 3), dtype=complex)
    hmats = [la.to_float(m).astype(complex) for m in
             _cartan_projector_legs(n)]
    sign = {(1, 2): 1.0, (0, 2): -1.0, (0, 1): 1.0}
    carrier = {(1, 2): 0, (0, 2): 1, (0, 1): 2}
    for pair in legs:
        for b in range(n):
            dmat = _partial(rfun, lam, b, h)
            acc += sign[pair] * \
                tc.embed(hmats[b], spaces, [carrier[pair]]) @ \
                tc.embed(dmat, spaces, list(pair))
    acc += emb[(0, 1)] @ emb[(0, 2)] - emb[(0, 2)] @ emb[(0, 1)]
    acc += emb[(0, 1)] @ emb[(1, 2)] - emb[(1, 2)] @ emb[(0, 1)]
    acc += emb[(0, 2)] @ emb[(1, 2)] - emb[(1, 2)] @ emb[(0, 2)]
    return la.sup_norm(acc)


def cdybe_residual(family, count=10, seed=42, tol=1e-7, h=1e-4,
                   pole_min=0.05):
    from .verify import ResidualReport, sample_lambdas
    as_quantum = _SamplerShim(family)
    res = [cdybe_residual_at(family.fun, lam, family.n, h)
           for lam in sample_lambdas(as_quantum, count, seed,
                                     pole_min=pole_min)]
    return ResidualReport("cdybe:" + family.name, res, tol, seed,
                          {"n": family.n})


def cdybe_spectral_residual_at(family, us, lam, h=1e-4):
    """Spectral variant: r^ij carries u_i - u_j; shape otherwise equal."""
    n = family.n
    v = tc.vector_rep(n)
    spaces = [v, v, v]
    pairs = [(0, 1), (0, 2), (1, 2)]
    uu = {(0, 1): us[0] - us[1], (0, 2): us[0] - us[2],
          (1, 2): us[1] - us[2]}
    emb = {}
    for pair in pairs:
        rmat = np.asarray(family.fun(uu[pair], np.array(lam, dtype=float)),
                          dtype=complex)
        emb[pair] = tc.embed(rmat, spaces, list(pair))
    acc = np.zeros((n ** 3, n ** 3), dtype=complex)
    hmats = [la.to_float(m).astype(complex) for m in
             _cartan_projector_legs(n)]
    sign = {(1, 2): 1.0, (0, 2): -1.0, (0, 1): 1.0}
    carrier = {(1, 2): 0, (0, 2): 1, (0, 1): 2}
    for pair in pairs:
        for b in range(n):
            dmat = _partial(lambda l: family.fun(uu[pair], l), lam, b, h)
            acc += sign[pair] * \
                tc.embed(hmats[b], spaces, [carrier[pair]]) @ \
                tc.embed(dmat, spaces, list(pair))
    acc += emb[(0, 1)] @ emb[(0, 2)] - emb[(0, 2)] @ emb[(0, 1)]
    acc += emb[(0, 1)] @ emb[(1, 2)] - emb[(1, 2)] @ emb[(0, 1)]
    acc += emb[(0, 2)] @ emb[(1, 2)] - emb[(1, 2)] @ emb[(0, 2)]
    return la.sup_norm(acc)


class _SamplerShim:
    """Adapts a ClassicalFamily to the sampler interface (step 1)."""

    def __init__(self, family):
        self.n = family.n
        self.step = 1
        self.pole_dist = family.pole_dist


def cdybe_spectral_residual(family, count=10, seed=42, tol=1e-6, h=1e-4,
                            pole_min=0.05):
    from .verify import ResidualReport, sample_spectral
    shim = _SamplerShim(family)
    shim.step = 0.23  # keep u differences away from this offset too
    res = [cdybe_spectral_residual_at(family, (u1, u2, u3), lam, h)
           for u1, u2, u3, lam in sample_spectral(shim, count, seed,
                                                  pole_min=pole_min)]
    return ResidualReport("cdybe-spectral:" + family.name, res, tol, seed,
                          {"n": family.n})


def coupling_constant(family, count=10, seed=42):
    """Least-squares fit of eps in r + r^21 = eps * Omega.

    Returns (eps, defect) where defect is the largest residual entry of
    the fit over the sampled points.
    """
    from .verify import sample_lambdas
    n = family.n
    p = la.to_float(la.permutation_matrix(n))
    omega = la.to_float(casimir_tensor(n)).astype(complex).ravel()
    num = 0.0 + 0j
    den = 0.0
    mats = []
    for lam in sample_lambdas(_SamplerShim(family), count, seed):
        r = np.asarray(family.fun(lam), dtype=complex)
        s = r + p @ r @ p
        mats.append(s)
        num += s.ravel() @ omega.conj()
        den += omega @ omega.conj()
    eps = (num / den).real
    defect = max(la.sup_norm(s - eps * omega.reshape(s.shape))
                 for s in mats)
    return eps, defect


def spectral_coupling(family, count=5, seed=42, u0=0.16):
    """For spectral families: check r(u, lam) + r^21(-u, lam) = 0 and
    extrapolate the residue of r at u = 0, comparing it to Omega.

    Returns (antisym_defect, residue_defect, eps) where eps is the fitted
    scalar with residue ~ eps * Omega.
    """
    from .verify import sample_lambdas
    n = family.n
    p = la.to_float(la.permutation_matrix(n))
    omega = la.to_float(casimir_tensor(n)).astype(complex)
    anti = 0.0
    res_defect = 0.0
    eps_fit = []
    for lam in sample_lambdas(_SamplerShim(family), count, seed):
        u = u0 + 0.03j
        r = np.asarray(family.fun(u, lam), dtype=complex)
        r21m = p @ np.asarray(family.fun(-u, lam), dtype=complex) @ p
        anti = max(anti, la.sup_norm(r + r21m))
        # Richardson extrapolation of u * r(u) to u = 0
        nodes = [u0 * (0.5 ** k) for k in range(5)]
        vals = [nodes[k] * np.asarray(family.fun(nodes[k], lam),
                                      dtype=complex) for k in range(5)]
        for step in range(1, 5):
            for k in range(5 - step):
                vals[k] = (nodes[k + step] * vals[k] - nodes[k] *
                           vals[k + 1]) / (nodes[k + step] - nodes[k])
        residue = vals[0]
        eps = (residue.ravel() @ omega.ravel()) / \
            (omega.ravel() @ omega.ravel())
        eps_fit.append(eps.real)
        res_defect = max(res_defect, la.sup_norm(residue - eps * omega))
    return anti, res_defect, sum(eps_fit) / len(eps_fit)


# ---------------------------------------------------------------------------
# classical limits of the quantum families


def _cartan_form(n, coeff):
    """sum_{a != b} coeff(a, b) E_aa (x) E_bb (antisymmetric Cartan form
    when coeff(b, a) = -coeff(a, b))."""
    m = np.zeros((n * n, n * n), dtype=complex)
    for a in range(n):
        for b in range(n):
            if a != b:
                m[a * n + b, a * n + b] = coeff(a, b)
    return m


def classical_limit(kind, n, lam, hbars, tau=0.8j, u=None):
    """Deviation of the first-order expansion of a quantum family from its
    classical counterpart, after gauge alignment.

    For each hbar in ``hbars`` this computes D(hbar) = (1 - R_hbar)/hbar
    with the family's small-step embedding (argument lam/hbar for the
    rational and trigonometric families, step gamma = hbar at fixed lam
    for the elliptic one) and subtracts the matching classical r-matrix
    plus an explicit closed Cartan 2-form and central term:

    * rational:  D = r_cl(lam) + sum_{a!=b} E_aa (x) E_bb/(lam_a - lam_b),
      exactly for every hbar;
    * trigonometric (q = exp(-hbar/2)):  D -> -r_cl(-lam/2)/2
      + (1/4) sum coth((lam_a - lam_b)/4) E_aa (x) E_bb + ((n-1)/(4n)) Id;
    * elliptic:  D -> r_cl(u, lam)
      - sum (theta'(lam_a - lam_b)/theta(lam_a - lam_b)) E_aa (x) E_bb
      - (1 - 1/n)(theta'(u)/theta(u)) Id.

    Returns the list of sup-norm deviations, one per hbar.
    """
    from . import rmatrix as rm
    lam = np.array(lam, dtype=float)
    ident = np.eye(n * n, dtype=complex)
    errs = []
    if kind == "rational":
        fam = rm.basic_rational(n)
        target = np.asarray(classical_rational(n).fun(lam),
                            dtype=complex) + \
            _cartan_form(n, lambda a, b: 1 / (lam[a] - lam[b]))
        for hb in hbars:
            d = (ident - np.asarray(fam.fun(lam / hb),
                                    dtype=complex)) / hb
            errs.append(la.sup_norm(d - target))
    elif kind == "trig":
        rcl = classical_trigonometric(n)
        target = -np.asarray(rcl.fun(-lam / 2), dtype=complex) / 2 + \
            _cartan_form(n, lambda a, b: (cmath.cosh((lam[a] - lam[b]) / 4) /
                                          cmath.sinh((lam[a] - lam[b]) / 4))
                         / 4) + \
            ((n - 1) / (4 * n)) * ident
        for hb in hbars:
            fam = rm.basic_trigonometric(n, math.exp(-hb / 2))
            d = (ident - np.asarray(fam.fun(lam / hb),
                                    dtype=complex)) / hb
            errs.append(la.sup_norm(d - target))
    elif kind == "elliptic":
        rcl = classical_elliptic(n, tau)
        if u is None:
            u = 0.31 + 0.05j
        ld = lambda x: specfun.theta_log_deriv(x, tau)
        target = np.asarray(rcl.fun(u, lam), dtype=complex) - \
            _cartan_form(n, lambda a, b: ld(lam[a] - lam[b])) - \
            (1 - 1 / n) * ld(u) * ident
        for hb in hbars:
            fam = rm.basic_elliptic(n, tau, hb)
            d = (ident - np.asarray(fam.fun(u, lam),
                                    dtype=complex)) / hb
            errs.append(la.sup_norm(d - target))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return errs


def convergence_order(hbars, errs):
    """Least-squares slope of log(err) against log(hbar)."""
    xs = np.log(np.array(hbars, dtype=float))
    ys = np.log(np.maximum(np.array(errs, dtype=float), 1e-300))
    a = np.vstack([xs, np.ones_like(xs)]).T
    slope, _ = np.linalg.lstsq(a, ys, rcond=None)[0]
    return slope
