"""Tensor-leg plumbing for operators with weight-dependent shifts.

A "dynamical" operator is an operator-valued function F(lam) on a tensor
factor of a product V_1 (x) ... (x) V_k of weight-graded spaces.  The
identities checked in this package involve expressions like F^{12}(lam - g
h^{(3)}): F acts on legs 1 and 2, while its argument is shifted by the
weight of whatever basis vector sits in leg 3.  This module provides

* :class:`WeightSpace` -- a vector space with a weight attached to each
  basis vector (a tuple for gl_n vector representations, an int for sl2
  modules),
* :func:`embed` -- place an operator on chosen legs of a tensor product,
* :func:`shifted_embed` -- same, with the operator's argument shifted by
  the weights of designated spectator legs.

Everything is dtype-agnostic: complex matrices and exact object-dtype
matrices go through the same code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from . import la


@dataclass(frozen=True)
class WeightSpace:
    """A finite-dimensional space with one weight per basis vector."""

    weights: tuple

    @property
    def dim(self):
        return len(self.weights)


def vector_rep(n):
    """C^n with basis weights e_1, ..., e_n (gl_n vector representation)."""
    return WeightSpace(tuple(tuple(1 if j == a else 0 for j in range(n))
                             for a in range(n)))


def sl2_module(l):
    """(l+1)-dimensional space with weights l, l-2, ..., -l."""
    return WeightSpace(tuple(l - 2 * k for k in range(l + 1)))


def weight_sum(ws):
    """Add weights (ints or equal-length tuples)."""
    ws = list(ws)
    if not ws:
        return 0
    if isinstance(ws[0], tuple):
        return tuple(sum(col) for col in zip(*ws))
    return sum(ws)


def _flat(multi, dims):
    idx = 0
    for m, d in zip(multi, dims):
        idx = idx * d + m
    return idx


def embed(mat, spaces, legs):
    """Embed ``mat`` (acting on the listed legs, in that order) into the
    full tensor product over ``spaces``, acting as identity elsewhere."""
    dims = [s.dim for s in spaces]
    n = len(dims)
    rest = [i for i in range(n) if i not in legs]
    mat = np.asarray(mat)
    if mat.dtype == object:
        ident = la.eye(prod(dims[i] for i in rest) if rest else 1, 1)
        big = np.kron(mat, ident)
    else:
        ident = np.eye(prod(dims[i] for i in rest) if rest else 1,
                       dtype=mat.dtype)
        big = np.kron(mat, ident)
    order = list(legs) + rest
    shaped = big.reshape([dims[i] for i in order] * 2)
    row_perm = [order.index(i) for i in range(n)]
    col_perm = [n + p for p in row_perm]
    d = prod(dims)
    return shaped.transpose(row_perm + col_perm).reshape(d, d)


def shifted_embed(fun, lam, spaces, act_legs, shift_legs, shift_rule,
                  dtype=complex):
    """Assemble F^{act_legs}(shifted lam) on the full tensor product.

    ``fun(lam')`` must return the matrix of F on the product of the acting
    legs' spaces.  For every joint basis choice of the shift legs, the
    argument is moved by ``shift_rule(lam, w)`` where w is the summed
    weight of that choice; the operator is diagonal in the shift legs and
    in all remaining spectator legs.
    """
    dims = [s.dim for s in spaces]
    D = prod(dims)
    act_dims = [dims[i] for i in act_legs]
    rest = [i for i in range(len(dims)) if i not in act_legs]
    rest_dims = [dims[i] for i in rest]
    if dtype is object:
        out = la.zeros((D, D))
    else:
        out = np.zeros((D, D), dtype=dtype)
    cache = {}
    for rest_multi in np.ndindex(*rest_dims) if rest_dims else [()]:
        assign = dict(zip(rest, rest_multi))
        w = weight_sum(spaces[i].weights[assign[i]] for i in shift_legs)
        if w not in cache:
            cache[w] = np.asarray(fun(shift_rule(lam, w)))
        small = cache[w]
        idxs = []
        for act_multi in np.ndindex(*act_dims):
            full = [0] * len(dims)
            for leg, m in zip(act_legs, act_multi):
                full[leg] = m
            for leg, m in assign.items():
                full[leg] = m
            idxs.append(_flat(full, dims))
        out[np.ix_(idxs, idxs)] = small
    return out


def no_shift(lam, w):
    """Shift rule ignoring weights (plain spectator legs)."""
    return lam


def vector_shift(gamma):
    """Shift rule lam -> lam - gamma * w for vector-valued lam."""
    def rule(lam, w):
        return np.asarray(lam) - gamma * np.asarray(w)
    return rule


def weight_defect(mat, spaces):
    """Largest entry connecting basis vectors of different total weight.

    Zero means the operator preserves the weight grading of the product.
    """
    dims = [s.dim for s in spaces]
    total = []
    for multi in np.ndindex(*dims):
        total.append(weight_sum(s.weights[m] for s, m in zip(spaces, multi)))
    mat = np.asarray(mat)
    worst = 0.0
    for i in range(mat.shape[0]):
        for j in range(mat.shape[1]):
            if total[i] != total[j]:
                v = mat[i, j]
                a = abs(complex(v)) if isinstance(v, (int, float, complex)) \
                    else abs(v)
                worst = max(worst, a)
    return worst
