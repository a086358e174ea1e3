"""First Jacobi theta function and friends.

The elliptic matrix families are built from the odd theta function

    theta(u, tau) = - sum_{j in Z + 1/2} exp(pi*i*(j^2 tau + 2 j (u + 1/2)))

with Im(tau) > 0.  It satisfies theta(-u) = -theta(u) and the
quasi-periodicity laws

    theta(u + 1)   = -theta(u)
    theta(u + tau) = -exp(-pi*i*tau - 2*pi*i*u) theta(u)

which are used below to pull arguments back into the fundamental strip
|Im u| <= Im(tau)/2 before summing, so the series converges fast for any
input.  Truncation is adaptive: at least MIN_TERMS terms, then stop once a
term drops below the target tolerance.
"""

from __future__ import annotations

import cmath
import math

MIN_TERMS = 8


def _reduce(u, tau):
    """Write u = u0 + k + m*tau with u0 in the fundamental strip.

    Returns (u0, scale, dscale) with theta(u) = scale * theta(u0) and, by
    differentiating the law, theta'(u) = dscale * theta(u0) + scale *
    theta'(u0).
    """
    b = u.imag / tau.imag
    m = round(b)
    u1 = u - m * tau
    k = round(u1.real)
    u0 = u1 - k
    # theta(u0 + k + m*tau) = (-1)^(k+m) exp(-pi i m^2 tau - 2 pi i m u0) theta(u0)
    sign = -1.0 if (k + m) % 2 else 1.0
    expo = -1j * math.pi * (m * m * tau + 2 * m * u0)
    scale = sign * cmath.exp(expo)
    dscale = scale * (-2j * math.pi * m)
    return u0, scale, dscale


def _theta_strip(u, tau, tol, deriv):
    total = 0j
    k = 0
    while True:
        j = k + 0.5
        tp = cmath.exp(1j * math.pi * (j * j * tau + 2 * j * (u + 0.5)))
        tm = cmath.exp(1j * math.pi * (j * j * tau - 2 * j * (u + 0.5)))
        if deriv == 1:
            tp *= 2j * math.pi * j
            tm *= -2j * math.pi * j
        total += tp + tm
        if k + 1 >= MIN_TERMS and abs(tp) < tol and abs(tm) < tol:
            break
        k += 1
        if k > 4000:
            raise RuntimeError("theta series failed to converge")
    return -total


def theta(u, tau, tol=1e-15):
    """theta(u, tau), valid for all complex u."""
    u = complex(u)
    tau = complex(tau)
    u0, scale, _ = _reduce(u, tau)
    return scale * _theta_strip(u0, tau, tol, 0)


def theta_prime(u, tau, tol=1e-15):
    """d/du theta(u, tau)."""
    u = complex(u)
    tau = complex(tau)
    u0, scale, dscale = _reduce(u, tau)
    return dscale * _theta_strip(u0, tau, tol, 0) + \
        scale * _theta_strip(u0, tau, tol, 1)


def theta_log_deriv(u, tau, tol=1e-15):
    """theta'(u)/theta(u)."""
    return theta_prime(u, tau, tol) / theta(u, tau, tol)


def theta_trig(u):
    """Trigonometric degeneration of theta, up to a constant factor.

    As Im(tau) -> +inf, theta(u, tau) ~ 2 exp(pi*i*tau/4) sin(pi*u); the
    constant prefactor cancels in all ratios used by the matrix families.
    """
    return cmath.sin(math.pi * complex(u))


def theta_rat(u):
    """Rational degeneration of theta: just u (prefactors cancel in ratios)."""
    return complex(u)
