"""Leg embedding and weight-shifted embedding on tensor products."""

import numpy as np
import pytest

from dynrmat import tensorcore as tc


def brute_embed_two_legs(mat, dims, i, j):
    """Oracle: act with mat on legs (i, j) by explicit index loops."""
    total = int(np.prod(dims))
    out = np.zeros((total, total), dtype=complex)
    strides = [int(np.prod(dims[k + 1:])) for k in range(len(dims))]

    def unflat(idx):
        rest, res = idx, []
        for s in strides:
            res.append(rest // s)
            rest %= s
        return res

    for col in range(total):
        cidx = unflat(col)
        for ai in range(dims[i]):
            for aj in range(dims[j]):
                v = mat[ai * dims[j] + aj, cidx[i] * dims[j] + cidx[j]]
                if v == 0:
                    continue
                ridx = list(cidx)
                ridx[i], ridx[j] = ai, aj
                row = sum(r * s for r, s in zip(ridx, strides))
                out[row, col] += v
    return out


def test_embed_matches_brute_force():
    rng = np.random.default_rng(5)
    spaces = [tc.WeightSpace((1, -1)), tc.WeightSpace((2, 0, -2)),
              tc.WeightSpace((1, -1))]
    dims = [s.dim for s in spaces]
    for legs in ([0, 1], [1, 2], [0, 2]):
        di, dj = dims[legs[0]], dims[legs[1]]
        d = di * dj
        mat = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        got = np.asarray(tc.embed(mat, spaces, legs), dtype=complex)
        ref = brute_embed_two_legs(mat, dims, *legs)
        assert np.max(np.abs(got - ref)) < 1e-13


def test_embed_leg_order_is_respected():
    # acting on legs [1, 0] must equal flipping the matrix legs
    spaces = [tc.WeightSpace((1, -1)), tc.WeightSpace((1, -1))]
    rng = np.random.default_rng(7)
    mat = rng.normal(size=(4, 4))
    p = np.zeros((4, 4))
    for a in range(2):
        for b in range(2):
            p[b * 2 + a, a * 2 + b] = 1
    got = np.asarray(tc.embed(mat, spaces, [1, 0]), dtype=float)
    ref = p @ mat @ p
    assert np.max(np.abs(got - ref)) < 1e-13


def test_shifted_embed_blocks_by_spectator_weight():
    """Acting on legs (0, 1) with a shift driven by leg 2 must reproduce
    placing fun(rule(lam, w)) on each leg-2 weight block."""
    spaces = [tc.WeightSpace((1, -1))] * 3
    gamma = 0.3

    def fun(lam):
        return np.array([[lam[0], 1.0], [0.0, lam[1]],
                         ]).repeat(2, axis=0)[:4].reshape(2, 2) \
            if False else np.array([[lam[0], 1.0], [2.0, lam[1]]])

    big = np.kron(fun([0.5, 0.7]), np.eye(1))

    def rule(lam, w):
        return [lam[0] - gamma * w, lam[1] - gamma * w]

    lam = [0.5, 0.7]
    got = tc.shifted_embed(lambda l: np.kron(fun(l), fun(l)), lam, spaces,
                           [0, 1], [2], rule)
    got = np.asarray(got, dtype=complex)
    # brute force: columns with leg-2 basis index k carry weight w = +-1
    total = 8
    ref = np.zeros((8, 8), dtype=complex)
    for k, w in enumerate((1, -1)):
        blk = np.kron(fun(rule(lam, w)), fun(rule(lam, w)))
        emb = tc.embed(blk, spaces, [0, 1])
        for col in range(total):
            if col % 2 == k:
                ref[:, col] += np.asarray(emb, dtype=complex)[:, col]
    assert np.max(np.abs(got - ref)) < 1e-13
    assert big is not None


def test_weight_space_helpers():
    v = tc.vector_rep(3)
    assert v.dim == 3
    m = tc.sl2_module(2)
    assert tuple(m.weights) == (2, 0, -2)
