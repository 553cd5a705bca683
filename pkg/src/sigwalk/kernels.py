"""Spectral functions, their Laurent coefficients, and the determinantal
transition matrices on signatures.

The transition matrix entry is

    T_n(theta; F)(lam, mu)
        = (s_mu(theta) / s_lam(theta))
          * det[f(lam_j + j - mu_i - i)] / prod_j F(1/theta_j),

where f(m) is the z^m Laurent coefficient of F.  Six named one-parameter
families are supported (two geometric, two Bernoulli, two exponential-type),
plus finite Laurent polynomials and products.  Everything with rational
parameters is computed in exact rational arithmetic; the exponential-type
families use floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .sigcore import (
    DomainError,
    ResourceLimitError,
    Signature,
    signatures_with_sum,
)
from .symfunc import Scalar, det, schur_eval

ALPHA_PLUS = "alpha+"
ALPHA_MINUS = "alpha-"
BETA_PLUS = "beta+"
BETA_MINUS = "beta-"
GAMMA_PLUS = "gamma+"
GAMMA_MINUS = "gamma-"
LAURENT = "laurent"
PRODUCT = "prod"

NAMED_FAMILIES = (ALPHA_PLUS, ALPHA_MINUS, BETA_PLUS, BETA_MINUS,
                  GAMMA_PLUS, GAMMA_MINUS)

# shell caps for adaptive row enumeration
MAX_SHELLS = 2000
DEFAULT_DISPLACEMENT_CAP = 40


@dataclass(frozen=True)
class SpectralFunction:
    """One of the named families, a finite Laurent polynomial, or a product."""

    kind: str
    param: Fraction | float | None = None
    coeffs: tuple[tuple[int, Fraction], ...] = ()
    factors: tuple["SpectralFunction", ...] = ()

    def __str__(self) -> str:
        if self.kind == LAURENT:
            inner = ",".join(f"{m}:{v}" for m, v in self.coeffs)
            return "laurent{%s}" % inner
        if self.kind == PRODUCT:
            return "prod(%s)" % ",".join(str(f) for f in self.factors)
        return f"{self.kind}:{self.param}"

    @property
    def is_exact(self) -> bool:
        if self.kind in (GAMMA_PLUS, GAMMA_MINUS):
            return False
        if self.kind == PRODUCT:
            return all(f.is_exact for f in self.factors)
        return True


def alpha_plus(q) -> SpectralFunction:
    q = Fraction(q)
    if not 0 <= q < 1:
        raise ValueError(f"need 0 <= q < 1, got {q}")
    return SpectralFunction(ALPHA_PLUS, q)


def alpha_minus(q) -> SpectralFunction:
    q = Fraction(q)
    if not 0 <= q < 1:
        raise ValueError(f"need 0 <= q < 1, got {q}")
    return SpectralFunction(ALPHA_MINUS, q)


def beta_plus(p) -> SpectralFunction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"need 0 <= p <= 1, got {p}")
    return SpectralFunction(BETA_PLUS, p)


def beta_minus(p) -> SpectralFunction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"need 0 <= p <= 1, got {p}")
    return SpectralFunction(BETA_MINUS, p)


def gamma_plus(t) -> SpectralFunction:
    t = float(t)
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    return SpectralFunction(GAMMA_PLUS, t)


def gamma_minus(t) -> SpectralFunction:
    t = float(t)
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    return SpectralFunction(GAMMA_MINUS, t)


def laurent(coeffs: dict[int, Scalar]) -> SpectralFunction:
    items = tuple(sorted((int(m), Fraction(v)) for m, v in coeffs.items() if v != 0))
    return SpectralFunction(LAURENT, None, items)


def product(*factors: SpectralFunction) -> SpectralFunction:
    """Product of spectral functions; flattens nested products and folds
    adjacent Laurent factors by convolution."""
    flat: list[SpectralFunction] = []
    for f in factors:
        if f.kind == PRODUCT:
            flat.extend(f.factors)
        else:
            flat.append(f)
    named = [f for f in flat if f.kind != LAURENT]
    laurents = [f for f in flat if f.kind == LAURENT]
    if laurents:
        acc = dict(laurents[0].coeffs)
        for g in laurents[1:]:
            nxt: dict[int, Fraction] = {}
            for m1, v1 in acc.items():
                for m2, v2 in g.coeffs:
                    nxt[m1 + m2] = nxt.get(m1 + m2, Fraction(0)) + v1 * v2
            acc = nxt
        folded = laurent(acc)
        if not named:
            return folded
        named.append(folded)
    if len(named) == 1:
        return named[0]
    return SpectralFunction(PRODUCT, None, (), tuple(named))


def identity_spectral() -> SpectralFunction:
    return laurent({0: 1})


def invert(F: SpectralFunction) -> SpectralFunction:
    """The spectral function z -> F(1/z); swaps the +/- named families."""
    swap = {ALPHA_PLUS: ALPHA_MINUS, ALPHA_MINUS: ALPHA_PLUS,
            BETA_PLUS: BETA_MINUS, BETA_MINUS: BETA_PLUS,
            GAMMA_PLUS: GAMMA_MINUS, GAMMA_MINUS: GAMMA_PLUS}
    if F.kind in swap:
        return SpectralFunction(swap[F.kind], F.param)
    if F.kind == LAURENT:
        return laurent({-m: v for m, v in F.coeffs})
    return product(*(invert(f) for f in F.factors))


def parse_spectral(s: str) -> SpectralFunction:
    """Parse compact strings: "beta-:1/2", "alpha+:1/3", "gamma+:0.5",
    "prod(beta-:1/2,beta-:1/3)", "laurent{-1:1/2,0:1}"."""
    s = s.strip()
    if s.startswith("prod(") and s.endswith(")"):
        inner = s[5:-1]
        parts: list[str] = []
        depth = 0
        cur = ""
        for ch in inner:
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
            else:
                if ch in "({":
                    depth += 1
                elif ch in ")}":
                    depth -= 1
                cur += ch
        if cur:
            parts.append(cur)
        return product(*(parse_spectral(p) for p in parts))
    if s.startswith("laurent{") and s.endswith("}"):
        inner = s[len("laurent{"):-1]
        coeffs: dict[int, Fraction] = {}
        if inner:
            for item in inner.split(","):
                m, v = item.split(":")
                coeffs[int(m)] = Fraction(v)
        return laurent(coeffs)
    if ":" not in s:
        raise ValueError(f"cannot parse spectral function {s!r}")
    name, _, param = s.partition(":")
    makers = {"alpha+": alpha_plus, "alpha-": alpha_minus,
              "beta+": beta_plus, "beta-": beta_minus}
    if name in makers:
        return makers[name](Fraction(param))
    if name == "gamma+":
        return gamma_plus(float(Fraction(param)))
    if name == "gamma-":
        return gamma_minus(float(Fraction(param)))
    raise ValueError(f"unknown spectral family {name!r}")


# ---------------------------------------------------------------------------
# Laurent coefficients f(m) and pointwise evaluation

_INF = None  # sentinel for an unbounded support side


def fourier_support(F: SpectralFunction) -> tuple[int | None, int | None]:
    """(lo, hi) bounds of the support of f; None marks an unbounded side."""
    if F.kind == BETA_PLUS:
        return 0, 1
    if F.kind == BETA_MINUS:
        return -1, 0
    if F.kind == ALPHA_PLUS or F.kind == GAMMA_PLUS:
        return 0, _INF
    if F.kind == ALPHA_MINUS or F.kind == GAMMA_MINUS:
        return _INF, 0
    if F.kind == LAURENT:
        if not F.coeffs:
            return 0, 0
        return F.coeffs[0][0], F.coeffs[-1][0]
    lo = 0
    hi = 0
    for f in F.factors:
        l, h = fourier_support(f)
        lo = None if (lo is None or l is None) else lo + l
        hi = None if (hi is None or h is None) else hi + h
    return lo, hi


def fourier_coeff(F: SpectralFunction, m: int) -> Scalar:
    """The z^m Laurent coefficient of F on its annulus."""
    if F.kind == BETA_PLUS:
        return F.param if m == 1 else Fraction(1) if m == 0 else Fraction(0)
    if F.kind == BETA_MINUS:
        return F.param if m == -1 else Fraction(1) if m == 0 else Fraction(0)
    if F.kind == ALPHA_PLUS:
        return F.param ** m if m >= 0 else Fraction(0)
    if F.kind == ALPHA_MINUS:
        return F.param ** (-m) if m <= 0 else Fraction(0)
    if F.kind == GAMMA_PLUS:
        return F.param ** m / math.factorial(m) if m >= 0 else 0.0
    if F.kind == GAMMA_MINUS:
        return F.param ** (-m) / math.factorial(-m) if m <= 0 else 0.0
    if F.kind == LAURENT:
        for mm, v in F.coeffs:
            if mm == m:
                return v
        return Fraction(0)
    return _product_coeff(F.factors, m)


def _product_coeff(factors: tuple[SpectralFunction, ...], m: int) -> Scalar:
    if len(factors) == 1:
        return fourier_coeff(factors[0], m)
    head, tail = factors[0], factors[1:]
    lo_h, hi_h = fourier_support(head)
    lo_t, hi_t = (0, 0)
    lo_t = 0
    hi_t = 0
    for f in tail:
        l, h = fourier_support(f)
        lo_t = None if (lo_t is None or l is None) else lo_t + l
        hi_t = None if (hi_t is None or h is None) else hi_t + h
    # k ranges over the support of head with m - k in the support of the tail
    if lo_h is not None and lo_t is not None:
        k_lo = lo_h
        k_hi = m - lo_t
        if hi_h is not None:
            k_hi = min(k_hi, hi_h)
        if hi_t is not None:
            k_lo = max(k_lo, m - hi_t)
    elif hi_h is not None and hi_t is not None:
        k_hi = hi_h
        k_lo = m - hi_t
        if lo_h is not None:
            k_lo = max(k_lo, lo_h)
        if lo_t is not None:
            k_hi = min(k_hi, m - lo_t)
    else:
        raise DomainError(
            "convolution with two-sided-infinite support is unsupported"
        )
    total: Scalar = Fraction(0)
    for k in range(k_lo, k_hi + 1):
        c1 = fourier_coeff(head, k)
        if c1 == 0:
            continue
        total = total + c1 * _product_coeff(tail, m - k)
    return total


def eval_F(F: SpectralFunction, z: Scalar) -> Scalar:
    """Pointwise value F(z); raises DomainError at poles."""
    if z == 0 and F.kind != BETA_PLUS and F.kind != LAURENT:
        raise DomainError("z = 0 outside the annulus")
    if F.kind == ALPHA_PLUS:
        if F.param * z == 1:
            raise DomainError("pole of the geometric factor")
        return 1 / (1 - F.param * z)
    if F.kind == ALPHA_MINUS:
        if F.param == z:
            raise DomainError("pole of the geometric factor")
        return 1 / (1 - F.param / z)
    if F.kind == BETA_PLUS:
        return 1 + F.param * z
    if F.kind == BETA_MINUS:
        return 1 + F.param / z
    if F.kind == GAMMA_PLUS:
        return math.exp(F.param * z)
    if F.kind == GAMMA_MINUS:
        return math.exp(F.param / z)
    if F.kind == LAURENT:
        total: Scalar = Fraction(0)
        for m, v in F.coeffs:
            total = total + v * Fraction(z) ** m
        return total
    out: Scalar = 1
    for f in F.factors:
        out = out * eval_F(f, z)
    return out


def norm_factor(F: SpectralFunction, theta: tuple[Scalar, ...]) -> Scalar:
    """The row normalizer prod_j F(1/theta_j)."""
    out: Scalar = 1
    for t in theta:
        out = out * eval_F(F, 1 / Fraction(t) if not isinstance(t, float) else 1.0 / t)
    return out


# ---------------------------------------------------------------------------
# Transition matrix entries and rows


@dataclass
class KernelRow:
    """A single row of T_n(theta; F), as a finite map with an exactness flag."""

    source: Signature
    entries: dict[Signature, Scalar]
    exact: bool
    tail: Scalar = 0

    def mass(self) -> Scalar:
        total: Scalar = 0
        for v in self.entries.values():
            total = total + v
        return total


def _check_theta(theta) -> tuple[Fraction, ...]:
    th = tuple(Fraction(t) for t in theta)
    if any(t <= 0 for t in th):
        raise DomainError("theta entries must be positive rationals")
    return th


def tn_entry(theta, F: SpectralFunction, lam: Signature, mu: Signature) -> Scalar:
    """Single transition-matrix entry; exact unless F has an exponential factor."""
    th = _check_theta(theta)
    n = len(lam)
    if len(mu) != n or len(th) != n:
        raise ValueError("rank mismatch")
    s_lam = schur_eval(lam, th)
    if s_lam == 0:
        raise DomainError(f"s_lam(theta) vanishes at {lam}")
    norm = norm_factor(F, th)
    if norm == 0:
        raise DomainError("normalizer prod F(1/theta_j) vanishes")
    d = _tn_det(F, lam, mu)
    if d == 0:
        return d
    s_mu = schur_eval(mu, th)
    return (s_mu / s_lam) * d / norm


def _tn_det(F: SpectralFunction, lam: Signature, mu: Signature) -> Scalar:
    n = len(lam)
    # memoize coefficients locally; the same offsets recur across the matrix
    cache: dict[int, Scalar] = {}

    def f(m: int) -> Scalar:
        if m not in cache:
            cache[m] = fourier_coeff(F, m)
        return cache[m]

    lo, hi = fourier_support(F)
    # offsets in particle coordinates x_j = lam_j - j, y_i = mu_i - i
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            m = (lam[j] - j) - (mu[i] - i)
            if (lo is not None and m < lo) or (hi is not None and m > hi):
                row.append(Fraction(0))
            else:
                row.append(f(m))
        mat.append(row)
    return det(mat)


def _row_candidates(
    F: SpectralFunction, lam: Signature, d: int
) -> Iterator[Signature]:
    """Signatures mu with sum(lam) - sum(mu) = d that can carry a nonzero
    determinant, from the support box of f."""
    n = len(lam)
    lo, hi = fourier_support(F)
    xs = [lam[j] - j for j in range(n)]  # particle coordinates, decreasing
    total = sum(lam) - d
    # mu_i - i must land within distance [lo, hi] below some lam_j - j
    upper = None if lo is None else [max(xs) - lo + i for i in range(n)]
    lower = None if hi is None else [min(xs) - hi + i for i in range(n)]
    if upper is None and lower is None:
        raise DomainError("two-sided-infinite support has no finite rows")
    if upper is None:
        upper = [total - (sum(lower) - lower[i]) for i in range(n)]
    if lower is None:
        lower = [total - (sum(upper) - upper[i]) for i in range(n)]
    yield from signatures_with_sum(n, total, upper, lower)


def tn_row(
    theta,
    F: SpectralFunction,
    lam: Signature,
    eps: Scalar = Fraction(1, 10**9),
    displacement_cap: int = DEFAULT_DISPLACEMENT_CAP,
) -> KernelRow:
    """The full row T_n(theta; F)(lam, .) as a finite map.

    Finite-support F gives an exact row.  One-sided-infinite support is
    enumerated by total displacement shells; at theta = 1 the rows are
    probability rows and the enumeration stops adaptively once the
    accumulated mass reaches 1 - eps, otherwise a hard displacement cap
    applies (complex-measure regime).
    """
    th = _check_theta(theta)
    n = len(lam)
    lo, hi = fourier_support(F)
    at_one = all(t == 1 for t in th)

    entries: dict[Signature, Scalar] = {}

    def add_shell(d: int) -> Scalar:
        shell_mass: Scalar = 0
        for mu in _row_candidates(F, lam, d):
            v = tn_entry(th, F, lam, mu)
            if v != 0:
                entries[mu] = v
                shell_mass = shell_mass + v
        return shell_mass

    if lo is not None and hi is not None:
        for d in range(n * lo, n * hi + 1):
            add_shell(d)
        return KernelRow(lam, entries, F.is_exact, 0)

    # one-sided support: d walks away from 0 in the reachable direction
    if lo is not None:
        d_iter = (n * lo + k for k in range(MAX_SHELLS))
    else:
        d_iter = (n * hi - k for k in range(MAX_SHELLS))

    mass: Scalar = 0
    shells = 0
    for d in d_iter:
        shells += 1
        mass = mass + add_shell(d)
        if at_one:
            if mass >= 1 - eps:
                tail = 1 - mass
                return KernelRow(lam, entries, False, tail)
        elif shells > displacement_cap:
            return KernelRow(lam, entries, False, eps)
    raise ResourceLimitError(
        f"row enumeration from {lam} did not reach mass 1 - {eps} "
        f"within {MAX_SHELLS} shells"
    )


def p0_row(theta, F: SpectralFunction, n: int,
           eps: Scalar = Fraction(1, 10**9)) -> KernelRow:
    """The initial law: the row of T_n from the zero signature."""
    return tn_row(theta, F, (0,) * n, eps)


# ---------------------------------------------------------------------------
# Verification reports


def _as_float(x: Scalar) -> float:
    return float(x)


def _report(check: str, passed: bool, max_err: Scalar, **extra) -> dict:
    rep = {"check": check, "pass": bool(passed),
           "max_abs_error": str(max_err) if isinstance(max_err, Fraction)
           else repr(float(max_err)), **extra}
    return rep


def check_semigroup(theta, F1: SpectralFunction, F2: SpectralFunction,
                    window: list[Signature], eps=Fraction(1, 10**9)) -> dict:
    """Verify sum_g T(F1)(lam,g) T(F2)(g,tau) = T(F1 F2)(lam,tau) on a window."""
    F12 = product(F1, F2)
    exact = F1.is_exact and F2.is_exact
    max_err: Scalar = 0
    failures = []
    for lam in window:
        row1 = tn_row(theta, F1, lam, eps)
        for tau in window:
            lhs: Scalar = 0
            for g, v in row1.entries.items():
                t2 = tn_entry(theta, F2, g, tau)
                if t2 != 0:
                    lhs = lhs + v * t2
            rhs = tn_entry(theta, F12, lam, tau)
            err = abs(lhs - rhs)
            if err > max_err:
                max_err = err
            if (exact and err != 0) or (not exact and err > eps):
                failures.append((lam, tau))
    passed = not failures
    return _report("semigroup", passed, max_err,
                   F1=str(F1), F2=str(F2), exact=exact,
                   failures=[[list(a), list(b)] for a, b in failures[:10]])


def check_stochastic(F: SpectralFunction, n: int,
                     window: list[Signature],
                     eps=Fraction(1, 10**9)) -> dict:
    """Rows at theta = 1: nonnegative entries, mass 1 (exact) or in [1-eps, 1]."""
    theta = (Fraction(1),) * n
    max_defect: Scalar = 0
    failures = []
    for lam in window:
        row = tn_row(theta, F, lam, eps)
        if any(v < 0 for v in row.entries.values()):
            failures.append(lam)
            continue
        mass = row.mass()
        defect = abs(1 - mass)
        if defect > max_defect:
            max_defect = defect
        if row.exact:
            if mass != 1:
                failures.append(lam)
        elif not (1 - eps <= mass <= 1 + eps):
            failures.append(lam)
    return _report("stochastic", not failures, max_defect,
                   F=str(F), n=n, failures=[list(l) for l in failures[:10]])


def check_star(theta, F: SpectralFunction, lam: Signature, tau: Signature,
               eps=Fraction(1, 10**9)) -> dict:
    """Verify the initial-law/tensor identity

        sum_mu P_n(mu) c_{lam,mu}^tau s_tau/(s_lam s_mu) = T_n(lam, tau).

    Both sides come from the same F through the defining formulas.
    """
    from .symfunc import lr_coeff

    th = _check_theta(theta)
    n = len(lam)
    p0 = p0_row(th, F, n, eps)
    s_lam = schur_eval(lam, th)
    s_tau = schur_eval(tau, th)
    lhs: Scalar = 0
    for mu, pmu in p0.entries.items():
        c = lr_coeff(lam, mu, tau)
        if c:
            lhs = lhs + pmu * c * s_tau / (s_lam * schur_eval(mu, th))
    rhs = tn_entry(th, F, lam, tau)
    err = abs(lhs - rhs)
    exact = F.is_exact and p0.exact
    passed = err == 0 if exact else err <= eps
    return _report("star", passed, err, F=str(F),
                   lam=list(lam), tau=list(tau), exact=exact)


def matrix_on_window(theta, F: SpectralFunction,
                     window: list[Signature],
                     eps=Fraction(1, 10**9)) -> dict[tuple[Signature, Signature], Scalar]:
    """All entries T(lam, mu) for lam, mu in the window."""
    out = {}
    for lam in window:
        for mu in window:
            out[(lam, mu)] = tn_entry(theta, F, lam, mu)
    return out
