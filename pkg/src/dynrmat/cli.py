"""Command-line runner for the verification suites.

Usage:
    dynrmat list
    dynrmat run SUITE [SUITE ...] [--seed N] [--tol T] [--samples K]
        [--json]
    dynrmat run --all [...]

Exit status: 0 if every selected check passed, 1 if any failed, 2 on a
resonance or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from . import fusion as fu
from . import gauge, liealg, rmatrix, trace, verify
from .verify import ResidualReport

_Q = Fraction(1, 2)


def _exact_report(name, flags, params=None, seed=None):
    """Wrap a list of booleans (True = identity held exactly) as a
    report: residual 0.0 for exact agreement, 1.0 otherwise."""
    return ResidualReport(name, [0.0 if ok else 1.0 for ok in flags],
                          tol=1e-12, seed=seed, params=params or {})


def _all_zero(mat):
    import numpy as np
    return all(fu._is_zero_scalar(v) for v in np.asarray(mat).ravel())


# ---------------------------------------------------------------------------
# suite implementations; each returns a list of ResidualReport


def suite_qdybe_rational(seed, tol, samples):
    tol = tol or 1e-10
    return [verify.qdybe_residual(rmatrix.basic_rational(n), samples, seed,
                                  tol) for n in (2, 3)]


def suite_qdybe_trigonometric(seed, tol, samples):
    tol = tol or 1e-10
    return [verify.qdybe_residual(rmatrix.basic_trigonometric(n, 0.37),
                                  samples, seed, tol) for n in (2, 3)]


def suite_qdybe_elliptic(seed, tol, samples):
    tol = tol or 1e-8
    return [verify.qdybe_spectral_residual(
        rmatrix.basic_elliptic(n, 0.8j, 0.23), samples, seed, tol)
        for n in (2, 3)]


def suite_qdybe_degenerate(seed, tol, samples):
    tol = tol or 1e-10
    out = []
    for n in (2, 3):
        out.append(verify.qdybe_spectral_residual(
            rmatrix.spectral_trigonometric(n, 0.23), samples, seed, tol))
        out.append(verify.qdybe_spectral_residual(
            rmatrix.spectral_rational(n, 0.23), samples, seed, tol))
    return out


def suite_hecke(seed, tol, samples):
    out = []
    for fam in (rmatrix.basic_rational(2), rmatrix.basic_rational(3),
                rmatrix.basic_trigonometric(2, 0.37),
                rmatrix.basic_trigonometric(3, 0.37)):
        out.append(verify.hecke_residual(fam, samples, seed, tol or 1e-9))
    for n in (2, 3):
        out.append(verify.unitarity_residual(
            rmatrix.basic_elliptic(n, 0.8j, 0.23), samples, seed,
            tol or 1e-8))
    return out


def suite_gauge(seed, tol, samples):
    tol = tol or 1e-9
    out = []
    fam = rmatrix.basic_trigonometric(3, 0.37)
    form = gauge.exact_form_from_potential(
        3, lambda lam, a: 1.3 + 0.2 * lam[a] ** 2 + 0.1 * a)
    out.append(verify.qdybe_residual(gauge.apply_alpha_twist(fam, form),
                                     samples, seed, tol))
    out.append(verify.qdybe_residual(
        gauge.apply_relabel(fam, perm=[2, 0, 1], nu=[0.3, -0.2, 0.7],
                            scale=1.7), samples, seed, tol))
    sfam = rmatrix.spectral_trigonometric(2, 0.23)
    out.append(verify.qdybe_spectral_residual(
        gauge.apply_potential_twist(
            sfam, lambda lam: 0.3 * lam[0] ** 2 - 0.2 * lam[0] * lam[1]),
        samples, seed, tol))
    out.append(verify.qdybe_spectral_residual(
        gauge.apply_spectral_scale(sfam, 1.9), samples, seed, tol))
    return out


def suite_gauge_control(seed, tol, samples):
    """Negative control: a non-closed twist must break the identity."""
    fam = rmatrix.basic_rational(3)
    rep = verify.qdybe_residual(gauge.broken_twist(fam), samples, seed,
                                1e-3)
    fired = rep.residual_max > 1e-3
    return [ResidualReport(
        "gauge-control", [0.0 if fired else 1.0], tol=0.5, seed=seed,
        params={"control_residual": float(rep.residual_max)})]


def suite_cdybe(seed, tol, samples):
    tol = tol or 1e-7
    out = []
    for n in (2, 3):
        out.append(liealg.cdybe_residual(liealg.classical_rational(n),
                                         samples, seed, tol))
        out.append(liealg.cdybe_residual(liealg.classical_trigonometric(n),
                                         samples, seed, tol))
    return out


def suite_cdybe_spectral(seed, tol, samples):
    tol = tol or 1e-6
    return [liealg.cdybe_spectral_residual(
        liealg.classical_elliptic(n, 0.8j), samples, seed, tol)
        for n in (2, 3)]


def suite_coupling(seed, tol, samples):
    out = []
    for fam, target in ((liealg.classical_rational(3), 0),
                        (liealg.classical_trigonometric(3), 1)):
        eps, defect = liealg.coupling_constant(fam, samples, seed)
        out.append(ResidualReport(
            f"coupling-{fam.name}",
            [abs(eps - target), defect], tol=tol or 1e-10, seed=seed,
            params={"eps": float(abs(eps)), "target": target}))
    anti, resdef, eps = liealg.spectral_coupling(
        liealg.classical_elliptic(2, 0.8j), 3, seed)
    out.append(ResidualReport(
        "coupling-elliptic-residue", [anti, resdef, abs(eps - 1)],
        tol=tol or 1e-5, seed=seed, params={"eps": float(abs(eps))}))
    return out


def suite_classical_limit(seed, tol, samples):
    import numpy as np
    rng = np.random.default_rng(seed)
    lam = rng.uniform(1.0, 2.5, size=3)
    lam = lam + np.arange(3) * 2.0
    hbars = [2.0 ** -k for k in range(3, 8)]
    out = []
    errs = liealg.classical_limit("rational", 3, lam, hbars)
    out.append(ResidualReport("limit-rational", [max(errs)],
                              tol=tol or 1e-10, seed=seed,
                              params={"note": "exact alignment"}))
    for kind in ("trig", "elliptic"):
        kwargs = {"u": 0.31 + 0.04j} if kind == "elliptic" else {}
        errs = liealg.classical_limit(kind, 2, lam[:2] / 4.0, hbars,
                                      **kwargs)
        order = liealg.convergence_order(hbars, errs)
        out.append(ResidualReport(
            f"limit-{kind}", [0.9 - order], tol=0.0, seed=seed,
            params={"order": float(order)}))
    return out


def suite_fusion(seed, tol, samples):
    """Three independent constructions of the weight-shift operator must
    agree exactly, and the classical coefficients match their product
    formula."""
    flags = []
    qs = [(None, None), (_Q, Fraction(5, 3))]
    for l in (1, 2):
        for q, g in qs:
            mod = fu.Module.irreducible(l, q)
            for k in range(samples if samples else 5):
                if q is None:
                    p = fu.HwParam(None, Fraction(7 + 3 * k, 3))
                    j_int = fu.fusion_via_intertwiners(mod, mod, p)
                    j_mat = fu.abrr_solve(mod, mod, p)
                else:
                    gk = g + Fraction(k, 7)
                    p = fu.HwParam(q, gk * gk)
                    j_int = fu.fusion_via_intertwiners(mod, mod, p, g=gk)
                    j_mat = fu.abrr_solve(mod, mod, p, g=gk)
                j_rec = fu.fusion_matrix(mod, mod, p)
                flags.append(_all_zero(j_rec - j_mat))
                flags.append(_all_zero(j_rec - j_int))
    # classical coefficient product formula
    lam = Fraction(7, 3)
    p = fu.HwParam(None, lam)
    ok = True
    for m in (-2, 0, 1, 3):
        for n in (1, 2, 3):
            t = fu.t_coefficients(p, m, n)[n]
            ref = Fraction((-1) ** n)
            for j in range(1, n + 1):
                ref /= j
            for j in range(n + 1, 2 * n + 1):
                ref /= lam - (m + 2 * n) + j
            ok = ok and t == ref
    flags.append(ok)
    return [_exact_report("fusion-oracles", flags, seed=seed)]


def suite_exchange(seed, tol, samples):
    flags = []
    cl = [fu.HwParam(None, Fraction(7, 3) + Fraction(2 * k, 7))
          for k in range(5)]
    qu = [fu.HwParam(_Q, (Fraction(5, 3) + Fraction(k, 5)) ** 2)
          for k in range(5)]
    for l in (1, 2):
        flags.append(fu.exchange_qdybe_defect(l, cl) == 0.0)
        flags.append(fu.exchange_qdybe_defect(l, qu, q=_Q) == 0.0)
    # closed-form dictionary on a 5-point grid
    fam_cl = rmatrix.exchange_closed_form(2, 1)
    fam_q = rmatrix.exchange_closed_form(2, _Q)
    L1c = fu.Module.irreducible(1)
    L1q = fu.Module.irreducible(1, _Q)
    for k in range(5):
        lam = Fraction(7, 3) + Fraction(2 * k, 7)
        flags.append(_all_zero(
            fu.exchange(L1c, L1c, fu.HwParam(None, lam)) -
            fam_cl.fun((lam, Fraction(0)))))
        kk = k + 2
        flags.append(_all_zero(
            fu.exchange(L1q, L1q, fu.HwParam(_Q, _Q ** (2 * kk))) -
            fam_q.fun((kk, 0))))
    return [_exact_report("exchange-identities", flags, seed=seed)]


def suite_twist(seed, tol, samples):
    flags = []
    for q, pv in ((None, fu.HwParam(None, Fraction(7, 3))),
                  (_Q, fu.HwParam(_Q, Fraction(25, 9)))):
        L1 = fu.Module.irreducible(1, q)
        L2 = fu.Module.irreducible(2, q)
        for mods in ((L1, L1, L1), (L1, L1, L2)):
            flags.append(_all_zero(fu.twist_defect(*mods, pv)))
    return [_exact_report("twist-identity", flags, seed=seed)]


def suite_macdonald(seed, tol, samples):
    V = fu.Module.irreducible(2, _Q)
    flags = [trace.commutator_defect(1, 2, V, _Q) == [],
             trace.tensor_factorization_defect(1, 1, V, _Q) == []]
    return [_exact_report("difference-op-commutativity", flags, seed=seed)]


def suite_eigen(seed, tol, samples):
    flags = []
    # trivial module: identity of rational functions, all orders at once
    L0 = fu.Module.irreducible(0, _Q)
    L1 = fu.Module.irreducible(1, _Q)
    L2 = fu.Module.irreducible(2, _Q)
    g = Fraction(5, 3)
    op = trace.macdonald_coefficients(L1, L0, _Q)
    tot = 0
    for nu, c in op.items():
        tot = c * g ** (-nu) + tot
    d = tot - trace.character_value(L1, _Q, g)
    flags.append(d.is_zero() if hasattr(d, "is_zero") else d == 0)
    for W in (L1, L2):
        dd = trace.eigen_defect(W, L2, _Q, g, 8)
        flags.append(all(fu._is_zero_scalar(v) for v in dd))
    return [_exact_report("trace-eigenfunction", flags, seed=seed)]


def suite_symmetry(seed, tol, samples):
    import numpy as np
    rng = np.random.default_rng(seed)
    count = samples if samples else 5
    pairs = [(-(1.0 + 2 * rng.random()), -(1.0 + 2 * rng.random()))
             for _ in range(count)]
    V = fu.Module.irreducible(2, _Q)
    res = trace.symmetry_defect(V, _Q, pairs, 12)
    return [ResidualReport("trace-symmetry", res, tol=tol or 1e-6,
                           seed=seed, params={"series_order": 12})]


SUITES = {
    "qdybe-rational": (
        suite_qdybe_rational,
        "shifted triangle identity, difference-of-coordinates family"),
    "qdybe-trigonometric": (
        suite_qdybe_trigonometric,
        "shifted triangle identity, q-exponential family"),
    "qdybe-elliptic": (
        suite_qdybe_elliptic,
        "spectral shifted triangle identity, theta-function family"),
    "qdybe-degenerate": (
        suite_qdybe_degenerate,
        "spectral identity for the sine and linear degenerations"),
    "hecke": (
        suite_hecke,
        "quadratic (Hecke) relation and spectral inversion symmetry"),
    "gauge": (
        suite_gauge,
        "identity preservation under closed twists, relabeling, "
        "potential twists, spectral rescaling"),
    "gauge-control": (
        suite_gauge_control,
        "negative control: a non-closed twist must break the identity"),
    "cdybe": (
        suite_cdybe,
        "classical shifted identity with derivative terms"),
    "cdybe-spectral": (
        suite_cdybe_spectral,
        "classical spectral identity, theta-function coefficients"),
    "coupling": (
        suite_coupling,
        "symmetric part r + r^21 and the u -> 0 residue vs the "
        "invariant pairing tensor"),
    "classical-limit": (
        suite_classical_limit,
        "first-order expansion of quantum families against classical "
        "ones, after gauge alignment"),
    "fusion": (
        suite_fusion,
        "weight-shift operator: graded solve vs coefficient recursion "
        "vs intertwiner composition, plus product formula"),
    "exchange": (
        suite_exchange,
        "exchange operator: exact shifted triangle identity and "
        "closed-form dictionary"),
    "twist": (
        suite_twist,
        "dynamical twist identity on grouped tensor legs"),
    "macdonald": (
        suite_macdonald,
        "commuting difference operators and tensor multiplicativity"),
    "eigen": (
        suite_eigen,
        "trace functions as eigenfunctions of the difference operators"),
    "symmetry": (
        suite_symmetry,
        "numeric exchange symmetry of the normalized trace function"),
}


def run_suite(name, seed=42, tol=None, samples=None):
    fn, _ = SUITES[name]
    return fn(seed, tol, samples or 10)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="dynrmat",
        description="verification suites for weight-dependent R-matrices")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd")
    sub.add_parser("list", help="list available suites")
    runp = sub.add_parser("run", help="run one or more suites")
    runp.add_argument("suites", nargs="*")
    runp.add_argument("--all", action="store_true")
    runp.add_argument("--seed", type=int, default=42)
    runp.add_argument("--tol", type=float, default=None)
    runp.add_argument("--samples", type=int, default=None)
    runp.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    if args.cmd == "list":
        for name, (_, desc) in SUITES.items():
            print(f"{name:22s} {desc}")
        return 0
    if args.cmd != "run":
        parser.print_help()
        return 2
    names = list(SUITES) if args.all else args.suites
    if not names:
        print("no suites selected (use --all or name suites)",
              file=sys.stderr)
        return 2
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        print(f"unknown suite(s): {', '.join(unknown)}", file=sys.stderr)
        return 2

    reports = []
    try:
        for name in names:
            reports.extend(run_suite(name, args.seed, args.tol,
                                     args.samples))
    except fu.ResonanceError as exc:
        print(f"resonance error: {exc}", file=sys.stderr)
        return 2

    ok = all(r.passed for r in reports)
    if args.json:
        payload = {
            "backend": "exact+float",
            "version": __version__,
            "reports": [r.to_dict() for r in reports],
            "pass": ok,
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"[{status}] {r.name:34s} max {r.residual_max:.3e} "
                  f"tol {r.tol:.1e} n={len(r.residuals)}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
