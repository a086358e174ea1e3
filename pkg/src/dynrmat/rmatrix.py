"""Weight-dependent R-matrix families on C^n (x) C^n.

Every family here has the same shape in the standard basis v_a (x) v_b:

    R = sum_a E_aa (x) E_aa + sum_{a != b} alpha_ab E_aa (x) E_bb
                            + sum_{a != b} beta_ab  E_ab (x) E_ba,

where alpha and beta are scalar functions of the diagonal parameter
lam = (lam_1, ..., lam_n) (and of a spectral variable u for the elliptic
family and its degenerations).  Matrices are returned as object-dtype
numpy arrays, so exact scalars (Fraction, SqrtExt) pass through unchanged
when the inputs are exact.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import la, ring, specfun


def assemble(n, alpha, beta, diag=1, prefactor=1):
    """Build the n^2 x n^2 matrix from coefficient callbacks.

    ``alpha(a, b)`` and ``beta(a, b)`` give the coefficients for a != b
    (0-based indices); ``diag`` sits at the (aa, aa) positions.
    """
    m = la.zeros((n * n, n * n))
    for a in range(n):
        m[a * n + a, a * n + a] = diag * prefactor
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            m[a * n + b, a * n + b] = alpha(a, b) * prefactor
            m[a * n + b, b * n + a] = beta(a, b) * prefactor
    return m


@dataclass
class RMatrixFamily:
    """An R-matrix family: call ``fun(lam)`` (or ``fun(u, lam)``).

    ``step`` is the shift quantum g appearing in the identities the family
    satisfies; ``hecke_q`` is the parameter of (PR - 1)(PR + q) = 0 when
    the family satisfies a Hecke relation, else None.  ``pole_dist(lam)``
    gives a lower bound on the distance from lam to the singular locus,
    used by samplers to reject bad draws.
    """

    name: str
    n: int
    step: object
    spectral: bool
    hecke_q: object
    fun: object
    pole_dist: object


def _diff_pole_dist(lam, lattice=False):
    n = len(lam)
    best = float("inf")
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            d = float(lam[a]) - float(lam[b])
            if lattice:
                d = abs(d - round(d))
            else:
                d = abs(d)
            best = min(best, d)
    return best


def basic_rational(n):
    """beta_ab = 1/(lam_b - lam_a), alpha_ab = 1 + beta_ab, step 1."""
    def fun(lam):
        def beta(a, b):
            return 1 / (lam[b] - lam[a])

        return assemble(n, lambda a, b: 1 + beta(a, b), beta)

    return RMatrixFamily("rational", n, 1, False, 1, fun, _diff_pole_dist)


def basic_trigonometric(n, q):
    """beta_ab = (q-1)/(q^(lam_b - lam_a) - 1), alpha_ab = q + beta_ab."""
    q = float(q)

    def fun(lam):
        def beta(a, b):
            return (q - 1) / (q ** (float(lam[b]) - float(lam[a])) - 1)

        return assemble(n, lambda a, b: q + beta(a, b), beta)

    return RMatrixFamily("trig", n, 1, False, q, fun, _diff_pole_dist)


def _spectral_family(name, n, gamma, th):
    """Shared shape of the elliptic family and its degenerations."""
    gamma = complex(gamma)

    def fun(u, lam):
        def beta(a, b):
            return th(u - lam[b] + lam[a]) * th(gamma) / \
                (th(u - gamma) * th(lam[b] - lam[a]))

        def alpha(a, b):
            return th(lam[a] - lam[b] + gamma) * th(u) / \
                (th(lam[a] - lam[b]) * th(u - gamma))

        return assemble(n, alpha, beta)

    lattice = name == "elliptic"

    def pole_dist(lam):
        return _diff_pole_dist(lam, lattice=lattice)

    return RMatrixFamily(name, n, gamma, True, None, fun, pole_dist)


def basic_elliptic(n, tau, gamma):
    """Felder's elliptic solution with spectral parameter, step gamma."""
    tau = complex(tau)
    return _spectral_family("elliptic", n, gamma,
                            lambda x: specfun.theta(x, tau))


def spectral_trigonometric(n, gamma):
    """Degeneration of the elliptic family with theta(x) -> sin(x)."""
    return _spectral_family("spectral-trig", n, gamma,
                            lambda x: cmath.sin(complex(x)))


def spectral_rational(n, gamma):
    """Degeneration of the elliptic family with theta(x) -> x."""
    return _spectral_family("spectral-rational", n, gamma,
                            lambda x: complex(x))


def _qpow(q, e):
    """q**e, staying exact when q is exact and e is an integer."""
    if isinstance(e, Fraction) and e.denominator == 1:
        e = int(e)
    if isinstance(e, int):
        return q ** e
    return float(q) ** float(e)


def exchange_closed_form(n, q=1, prefactor=True):
    """Closed form of the exchange matrix for the vector representation.

    For q != 1 the entries involve q^(2(lam_a - lam_b - a + b)); exact
    scalars survive when lam has integer-spaced exact entries.  The q = 1
    variant is the rational limit.  ``prefactor`` multiplies by q^(1-1/n)
    (exact via sqrt(q) when n = 2 and q is a Fraction).
    """
    if q == 1:
        def fun(lam):
            def beta(a, b):
                return 1 / (lam[b] - lam[a] - (b - a))

            def alpha(a, b):
                if a < b:
                    return 1
                d = lam[b] - lam[a] + (a - b)
                return (d - 1) * (d + 1) / (d * d)

            return assemble(n, alpha, beta)

        return RMatrixFamily("exchange", n, 1, False, 1, fun,
                             _exchange_pole_dist)

    if prefactor:
        if n == 2 and isinstance(q, (int, Fraction)):
            pre = ring.sqrt_of(q)
        else:
            pre = float(q) ** (1 - 1 / n)
    else:
        pre = 1

    def fun(lam):
        def beta(a, b):
            return (_qpow(q, -2) - 1) / \
                (_qpow(q, 2 * (lam[a] - lam[b] - (a - b))) - 1)

        def alpha(a, b):
            if a < b:
                return _qpow(q, -1)
            t = _qpow(q, 2 * (lam[b] - lam[a] + (a - b)))
            return (t - _qpow(q, -2)) * (t - _qpow(q, 2)) / \
                (q * (t - 1) ** 2)

        return assemble(n, alpha, beta, prefactor=pre)

    return RMatrixFamily("exchange", n, 1, False, None, fun,
                         _exchange_pole_dist)


def _exchange_pole_dist(lam):
    # every denominator vanishes exactly on lam_b - lam_a = b - a
    n = len(lam)
    best = float("inf")
    for a in range(n):
        for b in range(n):
            if a != b:
                best = min(best, abs(float(lam[b] - lam[a]) - (b - a)))
    return best
