"""Trace functions of intertwiners and the difference operators they
diagonalize, for the rank-one quantum and classical cases.

For a module V with one-dimensional zero-weight space, the trace of the
highest-weight intertwiner with leading term v in V[0], weighted by
q^(2 lam), is a power series

    Psi_V(lam, mu) = q^(2 (lam, mu)) * sum_m c_m(mu) x^m,   x = q^(-2 lam)

(in rank-one coordinates (lam, mu) = l_lam l_mu / 2 and x = q^(-2 l_lam);
the classical case replaces q-powers by nothing and the series variable
by a formal one).  The normalized trace function divides out the Weyl
denominator and the antipode contraction of the fusion operator at the
reflected weight:

    F_V(lam, mu) = delta_q(lam) Psi_V(lam, -mu - rho) Q(-mu - rho)^-1
                 = q^(-l_lam l_mu) phi_V(x; g),   g = q^(l_mu),

and this module computes the reduced series phi_V exactly (coefficients
rational in g and q).  The exchange-operator difference operators

    (D_W f)(lam) = sum_nu Tr|_W[nu] ( R_WV(-lam - rho) ) f(lam + nu)

act on such functions; their coefficients are rational functions of x,
obtained exactly by evaluating the exchange operator at the reflected
parameter y = q^(-2 l_lam - 2) = q^(-2) x.  The key identities checked
downstream: D_W phi_V = chi_W(g^-1) phi_V, commutativity of the D_W, and
multiplicativity in W; plus the numeric lam <-> mu symmetry of F_V.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import la
from . import fusion as fu
from .ring import Poly, RatFunc


def weight_zero_index(mod):
    idx = [i for i, w in enumerate(mod.weights) if w == 0]
    if len(idx) != 1:
        raise ValueError("module needs a one-dimensional zero-weight space")
    return idx[0]


def psi_coefficients(mv, hw, order, g=None):
    """Series coefficients c_0..c_order of the weighted intertwiner trace.

    ``hw`` is the highest weight mu of the trace module (classical), or
    None with ``g`` = q^mu (quantum).  c_m is the coefficient of the
    diagonal basis vector at depth m, i.e. the V[0]-component of the
    image of f^m x_mu lying over f^m x_mu itself.
    """
    q = mv.q
    iz = weight_zero_index(mv)
    v = la.zeros((mv.dim,))
    v[iz] = 1
    if q is None:
        us = fu.intertwiner_components(mv, v, hw)
    else:
        us = fu.intertwiner_components(mv, v, None, g)
    depth = order + mv.dim + 1
    if q is None:
        eM, fM, kM = fu.verma_matrices(hw, None, depth)
    else:
        eM, fM, kM = fu.verma_matrices(None, g, depth, q)
    d = depth + 1
    vec = la.zeros((d * mv.dim,))
    for k, u in enumerate(us):
        for a in range(mv.dim):
            vec[k * mv.dim + a] = u[a]
    # coproduct action of f on M (x) V
    iV = la.eye(mv.dim, 1)
    if q is None:
        df = np.kron(fM, iV) + np.kron(la.eye(d, 1), mv.f)
    else:
        kinv = la.zeros((d, d))
        for i in range(d):
            kinv[i, i] = 1 / kM[i, i]
        df = np.kron(fM, iV) + np.kron(kinv, mv.f)
    out = []
    cur = vec
    for m in range(order + 1):
        out.append(cur[m * mv.dim + iz])
        if m < order:
            cur = df @ cur
    return out


def reflected_param(q, gmu):
    """Fusion parameter at the reflected weight -mu - rho.

    Classical: lam = -l_mu - 1 with gmu = l_mu.
    Quantum:   g' = q^(-l_mu - 1) = 1/(gmu q), y' = g'^2.
    """
    if q is None:
        return fu.HwParam(None, -gmu - 1), None
    gref = 1 / (gmu * q)
    return fu.HwParam(q, gref * gref), gref


def reduced_trace_series(mv, q, gmu, order):
    """Coefficients of phi_V(x; g) = (1 - x) Psi-series(-mu - rho) / Q.

    ``gmu`` is l_mu (classical) or q^(l_mu) (quantum).  Exact when gmu
    is exact; works with floats too.
    """
    param, gref = reflected_param(q, gmu)
    if q is None:
        cs = psi_coefficients(mv, param.val, order)
    else:
        cs = psi_coefficients(mv, None, order, gref)
    iz = weight_zero_index(mv)
    qsc = fu.q_operator(mv, param)[iz, iz]
    if fu._is_zero_scalar(qsc):
        raise fu.ResonanceError("vanishing antipode contraction")
    out = []
    for m in range(order + 1):
        v = cs[m] - (cs[m - 1] if m else 0)
        if isinstance(v, int):
            v = Fraction(v)
        out.append(v / qsc)
    return out


def macdonald_coefficients(mw, mv, q):
    """The difference operator attached to W acting on V[0]-valued
    functions: dict nu -> coefficient, an exact rational function of
    x = q^(-2 l_lam) (quantum) or of l_lam (classical).

    The coefficient of the shift by nu is the trace over the nu-weight
    space of W of the exchange operator on W (x) V at -lam - rho.
    """
    if q is None:
        lam = RatFunc.x(Fraction(1))
        param = fu.HwParam(None, -lam - 1)
    else:
        x = RatFunc.x(Fraction(1))
        param = fu.HwParam(q, x * q ** (-2))
    rmat = fu.exchange(mw, mv, param)
    iz = weight_zero_index(mv)
    dv = mv.dim
    out = {}
    for iw, nu in enumerate(mw.weights):
        idx = iw * dv + iz
        out[nu] = out.get(nu, 0) + rmat[idx, idx]
    return {nu: c for nu, c in out.items()}


def character_value(mw, q, gmu):
    """chi_W evaluated at the reflected torus point: sum over the
    weights m of W of g^(-m) (quantum, g = q^(l_mu)) or of the dimension
    (classical limit uses the same weighted sum with l_mu entering via
    exp; here the quantum form is used whenever q is given)."""
    if q is None:
        return Fraction(len(mw.weights))
    return sum(gmu ** (-m) for m in mw.weights)


def apply_macdonald(op, series, q, gmu):
    """Apply the reduced difference operator to a phi-series.

    op is produced by :func:`macdonald_coefficients` (quantum); the
    shift lam -> lam + nu sends x -> q^(-2 nu) x and multiplies the
    suppressed prefactor q^(-l_lam l_mu) by g^(-nu), so

    (D phi)(x) = sum_nu a_nu(x) g^(-nu) phi(q^(-2 nu) x),

    returned as series coefficients up to the input order.
    """
    order = len(series) - 1
    out = [0] * (order + 1)
    for nu, coeff in op.items():
        a = coeff.series(order)
        scale = q ** (-2 * nu)
        pref = gmu ** (-nu)
        shifted = [series[m] * scale ** m * pref for m in range(order + 1)]
        for m in range(order + 1):
            acc = 0
            for j in range(m + 1):
                acc = acc + a[j] * shifted[m - j]
            out[m] = out[m] + acc
    return out


def eigen_defect(mw, mv, q, gmu, order):
    """Coefficientwise defect of D_W phi_V = chi_W phi_V, exact."""
    phi = reduced_trace_series(mv, q, gmu, order)
    op = macdonald_coefficients(mw, mv, q)
    lhs = apply_macdonald(op, phi, q, gmu)
    chi = character_value(mw, q, gmu)
    return [lhs[m] - chi * phi[m] for m in range(order + 1)]


def compose_operators(op1, op2, q):
    """Composition of difference operators (quantum reduction),
    (D1 D2 f)(lam) = sum a1_nu1(x) a2_nu2(q^(-2 nu1) x) f(lam+nu1+nu2)."""
    out = {}
    for n1, a1 in op1.items():
        for n2, a2 in op2.items():
            c = a1 * a2.shift_scale(q ** (-2 * n1))
            key = n1 + n2
            out[key] = out.get(key, 0) + c
    return out


def operator_defect(opa, opb):
    """Max over shifts of the (exact) difference of two operators;
    returns a list of nonzero entries (empty means equal)."""
    keys = set(opa) | set(opb)
    bad = []
    for k in keys:
        d = opa.get(k, 0) - opb.get(k, 0)
        if isinstance(d, RatFunc):
            if not d.is_zero():
                bad.append(k)
        elif not fu._is_zero_scalar(d):
            bad.append(k)
    return bad


def commutator_defect(l1, l2, mv, q):
    """Shifts at which [D_{L_l1}, D_{L_l2}] fails to vanish (exact)."""
    w1 = fu.Module.irreducible(l1, q)
    w2 = fu.Module.irreducible(l2, q)
    op1 = macdonald_coefficients(w1, mv, q)
    op2 = macdonald_coefficients(w2, mv, q)
    return operator_defect(compose_operators(op1, op2, q),
                           compose_operators(op2, op1, q))


def tensor_factorization_defect(l1, l2, mv, q):
    """Shifts at which D_{L_l1 (x) L_l2} differs from D_{L_l1} D_{L_l2}
    (exact)."""
    w1 = fu.Module.irreducible(l1, q)
    w2 = fu.Module.irreducible(l2, q)
    wt = fu.Module.tensor(w1, w2)
    op1 = macdonald_coefficients(w1, mv, q)
    op2 = macdonald_coefficients(w2, mv, q)
    opt = macdonald_coefficients(wt, mv, q)
    return operator_defect(opt, compose_operators(op1, op2, q))


def trace_function_value(mv, q, llam, lmu, order):
    """Numeric value of F_V(lam, mu) = q^(-l_lam l_mu) phi_V(x; g) with
    x = q^(-2 l_lam), g = q^(l_mu), summing the series to ``order``."""
    qf = float(q)
    x = qf ** (-2.0 * llam)
    g = qf ** lmu
    phi = reduced_trace_series(mv, q, g, order)
    s = 0.0
    for m in range(order, -1, -1):
        s = s * x + float(phi[m])
    return qf ** (-llam * lmu) * s


def symmetry_defect(mv, q, pairs, order):
    """|F_V(lam, mu) - F_V(mu, lam)| for sample pairs (l_lam, l_mu);
    the conjugate-dual symmetry specializes to plain exchange symmetry
    for a self-dual module and real parameters."""
    out = []
    for llam, lmu in pairs:
        a = trace_function_value(mv, q, llam, lmu, order)
        b = trace_function_value(mv, q, lmu, llam, order)
        out.append(abs(a - b))
    return out
