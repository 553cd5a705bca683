"""Desk-scale verification sweeps.

Each runner exercises one identity from the kernel/quantum/chain layers over
explicit finite windows with pinned tolerances, and returns a list of JSON-
ready report dicts.  `run_all` is the full suite the CLI exposes as
`verify all`.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .sigcore import Signature, signatures_in_box
from . import kernels as K
from . import quantum as Q
from . import chains as C
from .symfunc import lr_support
from .kernels import (
    SpectralFunction,
    alpha_minus,
    alpha_plus,
    beta_minus,
    beta_plus,
    gamma_minus,
    gamma_plus,
    laurent,
    product,
    tn_entry,
)

EPS = Fraction(1, 10**9)
GAMMA_EPS = 1e-6


def window(n: int, bound: int = 3) -> list[Signature]:
    return list(signatures_in_box(n, -bound, bound))


def _one(n: int) -> tuple[Fraction, ...]:
    return (Fraction(1),) * n


def run_stochastic() -> list[dict]:
    reports = []
    half = Fraction(1, 2)
    for n in (1, 2, 3):
        win = window(n, 3)
        for F in (beta_minus(half), beta_plus(half),
                  product(beta_minus(half), beta_plus(Fraction(1, 3))),
                  laurent({0: 1})):
            reports.append(K.check_stochastic(F, n, win, EPS))
        for F in (alpha_minus(half), alpha_plus(half)):
            reports.append(K.check_stochastic(F, n, win, EPS))
        for F in (gamma_minus(0.5), gamma_plus(0.5)):
            reports.append(K.check_stochastic(F, n, win, GAMMA_EPS))
    return reports


def run_semigroup() -> list[dict]:
    reports = []
    exact_set = [beta_plus(Fraction(1, 2)), beta_minus(Fraction(1, 3)),
                 product(beta_plus(Fraction(1, 2)), beta_minus(Fraction(1, 3)))]
    for n in (1, 2, 3):
        win = window(n, 3 if n <= 2 else 2)
        for F1 in exact_set:
            for F2 in exact_set:
                reports.append(K.check_semigroup(_one(n), F1, F2, win, EPS))
    # truncated alpha pairs
    for F1, F2 in ((alpha_minus(Fraction(1, 3)), beta_minus(Fraction(1, 2))),
                   (alpha_minus(Fraction(1, 3)), alpha_minus(Fraction(1, 4)))):
        reports.append(K.check_semigroup(_one(2), F1, F2, window(2, 2), EPS))
    return reports


def run_star() -> list[dict]:
    reports = []
    betas = [beta_minus(Fraction(1, 2)), beta_plus(Fraction(1, 2)),
             product(beta_minus(Fraction(1, 2)), beta_minus(Fraction(1, 3)))]
    thetas2 = [(Fraction(1), Fraction(1)),
               (Fraction(1), Fraction(1, 2)),
               (Fraction(2), Fraction(1, 3))]
    for F in betas:
        worst = None
        for theta in thetas2:
            for lam in window(2, 2):
                for tau in window(2, 2):
                    rep = K.check_star(theta, F, lam, tau, EPS)
                    if worst is None or not rep["pass"]:
                        worst = rep
        reports.append(_summary("star", worst, F=str(F), n=2))
    for F in betas:
        worst = None
        for lam in window(3, 1):
            for tau in window(3, 1):
                rep = K.check_star(_one(3), F, lam, tau, EPS)
                if worst is None or not rep["pass"]:
                    worst = rep
        reports.append(_summary("star", worst, F=str(F), n=3))
    for F in (alpha_minus(Fraction(1, 2)), alpha_plus(Fraction(1, 2))):
        worst = None
        for lam in window(2, 2):
            for tau in window(2, 2):
                rep = K.check_star(_one(2), F, lam, tau, EPS)
                if worst is None or not rep["pass"]:
                    worst = rep
        reports.append(_summary("star", worst, F=str(F), n=2))
    return reports


def _summary(check: str, rep: dict | None, **extra) -> dict:
    if rep is None:
        return {"check": check, "pass": True, "max_abs_error": "0", **extra}
    out = dict(rep)
    out.update(extra)
    out["check"] = check
    return out


def run_qrw() -> list[dict]:
    reports = []
    half = Fraction(1, 2)
    for n in (1, 2, 3):
        win = window(n, 3 if n <= 2 else 2)
        for F in (beta_minus(half), beta_plus(half)):
            reports.append(Q.check_qrw(F, n, win, EPS))
    for F in (alpha_minus(Fraction(1, 3)), alpha_plus(Fraction(1, 3))):
        reports.append(Q.check_qrw(F, 2, window(2, 2), EPS))
    for F in (gamma_minus(0.5), gamma_plus(0.5)):
        reports.append(Q.check_qrw(F, 2, window(2, 2), GAMMA_EPS))
    return reports


def _small_partitions(n: int, max_boxes: int) -> list[Signature]:
    out = []
    for b in range(max_boxes + 1):
        if b == 0:
            out.append((0,) * n)
            continue
        for part in Q._partitions(b, n):
            out.append(tuple(part) + (0,) * (n - len(part)))
    return out


def run_center() -> list[dict]:
    reports = []
    for n in (2, 3):
        win = window(n, 2 if n == 2 else 1)
        kappas = [Q.normalized_character(b) for b in _small_partitions(n, 3)]
        kappas.append(Q.kappa_of(beta_plus(Fraction(1, 2)), n))
        for kappa in kappas:
            worst = None
            for lam in win:
                for tau in win:
                    rep = Q.check_center_intertwining(kappa, lam, tau)
                    if worst is None or not rep["pass"]:
                        worst = rep
            reports.append(_summary("center", worst, kappa=kappa.label, n=n))
    return reports


def run_torus() -> list[dict]:
    reports = []
    rng = random.Random(2024)
    for n in (2, 3):
        parts = _small_partitions(n, 3)
        worst = None
        for lam in parts:
            for mu in parts:
                rep = Q.check_torus_convolution(lam, mu)
                if worst is None or not rep["pass"]:
                    worst = rep
        reports.append(_summary("torus-convolution", worst, n=n))
        # Weyl and translation invariance on random data
        kappa = Q.kappa_of(beta_plus(Fraction(1, 2)), n)
        triples = []
        for _ in range(50):
            x = tuple(rng.randint(-3, 3) for _ in range(n))
            y = tuple(rng.randint(-3, 3) for _ in range(n))
            sigma = tuple(rng.sample(range(n), n))
            triples.append((x, y, sigma))
        reports.append(Q.check_weyl_invariance(kappa, triples))
        shift_ok = all(
            Q.pn_entry(kappa, x, y)
            == Q.pn_entry(kappa, tuple(a + c for a in x), tuple(b + c for b in y))
            for x, y, _ in triples for c in (-2, 5)
        )
        reports.append(K._report("torus-translation", shift_ok, 0, n=n))
    return reports


def run_doob() -> list[dict]:
    reports = []
    for n in (1, 2, 3):
        win = window(n, 3 if n <= 2 else 2)
        reports.append(C.check_doob(beta_minus(Fraction(1, 2)), n, win))
    for n in (1, 2):
        reports.append(C.check_doob(gamma_minus(0.5), n, window(n, 2), 1e-9))
    return reports


def run_lemma212(params=(Fraction(1, 3), Fraction(1, 2))) -> list[dict]:
    """The four closed-form evaluations of the kernel determinant."""
    from .sigcore import interlaces
    from .symfunc import schur_eval

    reports = []
    for n in (1, 2, 3):
        win = window(n, 3)
        theta = _one(n)
        for param in params:
            fams = {
                "beta-": (beta_minus(param),
                          lambda lam, mu: (sum(mu) - sum(lam))
                          if all(m - l in (0, 1) for l, m in zip(lam, mu)) else None),
                "beta+": (beta_plus(param),
                          lambda lam, mu: (sum(lam) - sum(mu))
                          if all(m - l in (-1, 0) for l, m in zip(lam, mu)) else None),
                "alpha-": (alpha_minus(param),
                           lambda lam, mu: (sum(mu) - sum(lam))
                           if interlaces(lam, mu) else None),
                "alpha+": (alpha_plus(param),
                           lambda lam, mu: (sum(lam) - sum(mu))
                           if interlaces(mu, lam) else None),
            }
            for name, (F, strip_size) in fams.items():
                norm = K.norm_factor(F, theta)
                max_err = Fraction(0)
                failures = []
                for lam in win:
                    s_lam = schur_eval(lam, theta)
                    for mu in win:
                        k = strip_size(lam, mu)
                        if k is None:
                            expected = Fraction(0)
                        else:
                            expected = (param ** k / norm
                                        * schur_eval(mu, theta) / s_lam)
                        got = tn_entry(theta, F, lam, mu)
                        if got != expected:
                            failures.append((lam, mu))
                            err = abs(got - expected)
                            if err > max_err:
                                max_err = err
                reports.append(K._report(
                    "lemma212", not failures, max_err,
                    F=str(F), n=n,
                    failures=[[list(a), list(b)] for a, b in failures[:5]]))
    return reports


def run_gamma_limit(t=Fraction(1, 2), n=2,
                    ks=(16, 64, 256, 1024), bound=2) -> list[dict]:
    """Bernoulli-power approximation of the Poisson-type kernel.

    (1 + (t/k)/z)^k converges to exp(t/z); the matched matrices must converge
    entrywise, monotonically over the given k schedule.
    """
    win = window(n, bound)
    theta = _one(n)
    target = gamma_minus(float(t))
    target_entries = {
        (lam, mu): tn_entry(theta, target, lam, mu)
        for lam in win for mu in win
    }
    devs = []
    for k in ks:
        p = Fraction(t, k)
        coeffs = {-j: math.comb(k, j) * p ** j for j in range(0, min(k, 4 * n * bound + 10) + 1)}
        Fk = laurent(coeffs)
        dev = 0.0
        for lam in win:
            for mu in win:
                v = tn_entry(theta, Fk, lam, mu)
                d = abs(float(v) - float(target_entries[(lam, mu)]))
                dev = max(dev, d)
        devs.append(dev)
    decreasing = all(devs[i + 1] < devs[i] for i in range(len(devs) - 1))
    passed = decreasing and devs[-1] <= 1e-3
    return [K._report("gamma-limit", passed, devs[-1], t=str(t), n=n,
                      ks=list(ks), deviations=devs)]


def run_empirical(samples: int = 100_000, seed: int = 2024) -> list[dict]:
    reports = []
    fams = [beta_minus(Fraction(1, 2)), beta_plus(Fraction(1, 2)),
            alpha_minus(Fraction(1, 2)), alpha_plus(Fraction(1, 2)),
            gamma_minus(0.5), gamma_plus(0.5)]
    for n in (1, 2):
        for F in fams:
            rep = C.empirical_check((0,) * n, F, samples, seed, 0.02)
            rep.pop("counts", None)
            reports.append(rep)
    return reports


CHECKS = {
    "stochastic": run_stochastic,
    "semigroup": run_semigroup,
    "star": run_star,
    "qrw": run_qrw,
    "center": run_center,
    "torus": run_torus,
    "doob": run_doob,
    "lemma212": run_lemma212,
    "gamma-limit": run_gamma_limit,
    "empirical": run_empirical,
}


def run_all() -> list[dict]:
    reports = []
    for name, runner in CHECKS.items():
        reports.extend(runner())
    return reports
