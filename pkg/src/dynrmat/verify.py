"""Residual checks for the weight-dependent Yang-Baxter identities.

Each check draws pole-avoiding random parameters, evaluates both sides of
an operator identity on a tensor cube (or V (x) V (x) W), and reports the
largest entrywise deviation.  Results come back as
:class:`ResidualReport` objects that serialize to plain dicts for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import la
from . import tensorcore as tc


@dataclass
class ResidualReport:
    """Outcome of one residual suite."""

    name: str
    residuals: list
    tol: float
    seed: int = None
    params: dict = field(default_factory=dict)

    @property
    def residual_max(self):
        return max(self.residuals) if self.residuals else 0.0

    @property
    def residual_mean(self):
        return sum(self.residuals) / len(self.residuals) if self.residuals \
            else 0.0

    @property
    def passed(self):
        return bool(self.residual_max < self.tol)

    def to_dict(self):
        return {
            "suite": self.name,
            "params": self.params,
            "samples": len(self.residuals),
            "seed": self.seed,
            "residual_max": float(self.residual_max),
            "residual_mean": float(self.residual_mean),
            "tol": float(self.tol),
            "pass": self.passed,
        }


POLE_MIN = 1e-3


def sample_lambdas(family, count, seed, box=5.0, pole_min=POLE_MIN):
    """Draw real diagonal parameters, rejecting near-singular ones.

    A draw is kept only if the family stays away from its singular locus
    both at lam and at every one-coordinate shift lam - step * e_c, since
    those shifted arguments appear inside the identities.
    """
    rng = np.random.default_rng(seed)
    n = family.n
    g = float(abs(family.step)) or 1.0
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * count:
            raise RuntimeError("sampler failed to find pole-free parameters")
        lam = rng.uniform(-box, box, size=n)
        ok = family.pole_dist(lam) > pole_min
        for c in range(n):
            if not ok:
                break
            shifted = lam.copy()
            shifted[c] -= g
            ok = family.pole_dist(shifted) > pole_min
        if ok:
            out.append(lam)
    return out


def _dist_to_integers(z):
    z = complex(z)
    return abs(z - round(z.real))


def sample_spectral(family, count, seed, pole_min=POLE_MIN):
    """Draw (u1, u2, u3, lam) tuples for spectral-parameter checks.

    The u_i carry a small common imaginary offset; differences u_i - u_j
    are kept away from the step and from zeros of the building-block
    function at (shifted) integers.
    """
    rng = np.random.default_rng(seed)
    lams = sample_lambdas(family, count, seed + 1 if seed is not None
                          else None, pole_min=pole_min)
    g = complex(family.step)
    out = []
    attempts = 0
    i = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * count:
            raise RuntimeError("sampler failed to find pole-free parameters")
        us = rng.uniform(0.1, 0.9, size=3) + 0.05j
        ok = True
        for a in range(3):
            for b in range(3):
                if a == b:
                    continue
                d = us[a] - us[b]
                if _dist_to_integers(d - g) < pole_min or \
                        _dist_to_integers(d + g) < pole_min or \
                        _dist_to_integers(d) < pole_min:
                    ok = False
        if ok:
            out.append((us[0], us[1], us[2], lams[i]))
            i += 1
    return out


def qdybe_terms(rfun, lam, spaces, rule):
    """The six operators entering the triangle identity on legs 1,2,3."""
    def term(act, shift):
        return tc.shifted_embed(rfun, lam, spaces, act, shift, rule,
                                dtype=object)

    lhs = term([0, 1], [2]) @ term([0, 2], []) @ term([1, 2], [0])
    rhs = term([1, 2], []) @ term([0, 2], [1]) @ term([0, 1], [])
    return lhs, rhs


def qdybe_residual(family, count=20, seed=42, tol=1e-10):
    """Shifted triangle identity
    R12(lam - g h3) R13(lam) R23(lam - g h1) = R23(lam) R13(lam - g h2) R12(lam)."""
    v = tc.vector_rep(family.n)
    spaces = [v, v, v]
    rule = tc.vector_shift(float(family.step))
    res = []
    for lam in sample_lambdas(family, count, seed):
        lhs, rhs = qdybe_terms(family.fun, lam, spaces, rule)
        res.append(la.sup_norm(lhs - rhs))
    return ResidualReport("qdybe:" + family.name, res, tol, seed,
                          {"n": family.n})


def qdybe_spectral_residual(family, count=20, seed=42, tol=1e-8):
    """Spectral variant: R12 carries u1 - u2, R13 u1 - u3, R23 u2 - u3."""
    v = tc.vector_rep(family.n)
    spaces = [v, v, v]
    rule = tc.vector_shift(complex(family.step).real)
    res = []
    for u1, u2, u3, lam in sample_spectral(family, count, seed):
        uu = {(0, 1): u1 - u2, (0, 2): u1 - u3, (1, 2): u2 - u3}

        def term(act, shift):
            du = uu[tuple(act)]
            return tc.shifted_embed(lambda l: family.fun(du, l), lam,
                                    spaces, act, shift, rule, dtype=object)

        lhs = term([0, 1], [2]) @ term([0, 2], []) @ term([1, 2], [0])
        rhs = term([1, 2], []) @ term([0, 2], [1]) @ term([0, 1], [])
        res.append(la.sup_norm(lhs - rhs))
    return ResidualReport("qdybe-spectral:" + family.name, res, tol, seed,
                          {"n": family.n})


def hecke_residual(family, count=20, seed=42, tol=1e-9, q=None):
    """(PR - 1)(PR + q) = 0 with the family's Hecke parameter."""
    if q is None:
        q = family.hecke_q
    n = family.n
    p = la.permutation_matrix(n)
    ident = la.eye(n * n, 1)
    res = []
    for lam in sample_lambdas(family, count, seed):
        pr = p @ np.asarray(family.fun(lam))
        res.append(la.sup_norm((pr - ident) @ (pr + q * ident)))
    return ResidualReport("hecke:" + family.name, res, tol, seed,
                          {"n": n, "q": float(q)})


def unitarity_residual(family, count=20, seed=42, tol=1e-8):
    """R(u, lam) R21(-u, lam) = 1 for spectral families."""
    n = family.n
    p = la.permutation_matrix(n)
    ident = la.eye(n * n, 1)
    res = []
    for u1, u2, _, lam in sample_spectral(family, count, seed):
        u = u1 - u2
        r = np.asarray(family.fun(u, lam))
        r21 = p @ np.asarray(family.fun(-u, lam)) @ p
        res.append(la.sup_norm(r @ r21 - ident))
    return ResidualReport("unitarity:" + family.name, res, tol, seed,
                          {"n": n})


@dataclass
class Representation:
    """A module over a spectral family: a weight space W together with an
    invertible function L(u, lam) acting on V (x) W."""

    space: tc.WeightSpace
    lfun: object


def vector_representation(family):
    """(V, R) with L = R itself."""
    return Representation(tc.vector_rep(family.n), family.fun)


def tensor_space(a, b):
    """Weight space of a tensor product, basis ordered row-major."""
    return tc.WeightSpace(tuple(
        tc.weight_sum([wa, wb]) for wa in a.weights for wb in b.weights))


def tensor_representation(family, rw, ru):
    """L on W (x) U: L_W acting through legs (V, W) with argument shifted
    by the U leg, times L_U acting through legs (V, U)."""
    rule = tc.vector_shift(complex(family.step).real)

    def lfun(u, lam):
        spaces = [tc.vector_rep(family.n), rw.space, ru.space]
        first = tc.shifted_embed(lambda l: rw.lfun(u, l), lam, spaces,
                                 [0, 1], [2], rule, dtype=object)
        second = tc.embed(np.asarray(ru.lfun(u, lam)), spaces, [0, 2])
        mat = first @ second
        return mat

    return Representation(tensor_space(rw.space, ru.space), lfun)


def rll_residual(family, rep, count=10, seed=42, tol=1e-8):
    """Exchange relation between R on V (x) V and L on V (x) W:
    R12(u12, lam - g h3) L13(u13, lam) L23(u23, lam - g h1)
      = L23(u23, lam) L13(u13, lam - g h2) R12(u12, lam)."""
    v = tc.vector_rep(family.n)
    spaces = [v, v, rep.space]
    rule = tc.vector_shift(complex(family.step).real)
    res = []
    for u1, u2, u3, lam in sample_spectral(family, count, seed):
        def emb(fun, act, shift):
            return tc.shifted_embed(fun, lam, spaces, act, shift, rule,
                                    dtype=object)

        r12 = lambda l: family.fun(u1 - u2, l)
        l13 = lambda l: rep.lfun(u1 - u3, l)
        l23 = lambda l: rep.lfun(u2 - u3, l)
        lhs = emb(r12, [0, 1], [2]) @ emb(l13, [0, 2], []) @ \
            emb(l23, [1, 2], [0])
        rhs = emb(l23, [1, 2], []) @ emb(l13, [0, 2], [1]) @ \
            emb(r12, [0, 1], [])
        res.append(la.sup_norm(lhs - rhs))
    return ResidualReport("rll:" + family.name, res, tol, seed,
                          {"n": family.n, "dim_w": rep.space.dim})


def morphism_residual(family, f, rep_w, rep_w2, count=10, seed=42,
                      tol=1e-8):
    """(1 (x) f(lam)) L_W(u, lam) = L_W'(u, lam) (1 (x) f(lam - g h1))."""
    v = tc.vector_rep(family.n)
    spaces = [v, rep_w.space]
    rule = tc.vector_shift(complex(family.step).real)
    res = []
    for u1, u2, _, lam in sample_spectral(family, count, seed):
        u = u1 - u2
        lhs = tc.shifted_embed(f, lam, spaces, [1], [], rule,
                               dtype=object) @ np.asarray(rep_w.lfun(u, lam))
        rhs = np.asarray(rep_w2.lfun(u, lam)) @ tc.shifted_embed(
            f, lam, spaces, [1], [0], rule, dtype=object)
        res.append(la.sup_norm(lhs - rhs))
    return ResidualReport("morphism:" + family.name, res, tol, seed, {})
