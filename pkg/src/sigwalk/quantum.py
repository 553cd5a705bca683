"""Classical kernels induced by the quantum random walk.

A class function is stored as its finite (or truncated) expansion over
irreducible characters.  The center restriction acts on signatures,

    Q_n(kappa)(lam, mu) = (dim mu / dim lam) * sum_b kappa_hat(b) c_{lam,b}^mu,

and the maximal-torus restriction acts on the weight lattice,

    P_n(kappa)(x, y) = sum_b kappa_hat(b) * n_b(y - x),

both finite sums because the summand vanishes unless |b| matches the
displacement.  No torus integration is ever performed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .sigcore import (
    Signature,
    Weight,
    dimension,
    signatures_in_box,
)
from .symfunc import (
    Scalar,
    lr_coeff,
    lr_support,
    monomials_to_schur,
    weight_expansion,
    weight_multiplicity,
)
from . import kernels as K

DEFAULT_TAIL = Fraction(1, 10**9)


@dataclass
class ClassFunction:
    """Character-basis expansion of a conjugation-invariant function.

    coeffs[b] is the coefficient of the irreducible character with highest
    weight b.  `tail` is the probability mass dropped by truncation (zero for
    the exact families).
    """

    n: int
    coeffs: dict[Signature, Scalar]
    exact: bool = True
    tail: Scalar = 0
    label: str = ""

    def normalization(self) -> Scalar:
        """Value at the identity: sum of coeff * dim."""
        total: Scalar = 0
        for b, c in self.coeffs.items():
            total = total + c * dimension(b)
        return total


def normalized_character(beta: Signature) -> ClassFunction:
    """The positive-type class function chi_beta / dim beta."""
    return ClassFunction(len(beta), {beta: Fraction(1, dimension(beta))},
                         label=f"chi~{beta}")


def character(beta: Signature) -> ClassFunction:
    return ClassFunction(len(beta), {beta: Fraction(1)}, label=f"chi{beta}")


def _syt_count(part: tuple[int, ...]) -> int:
    # standard tableaux of a partition shape = Kostka with content 1^N
    from .symfunc import kostka

    return kostka(part, (1,) * sum(part))


def _partitions(total: int, max_rows: int):
    def rec(rem, maxp, rows, prefix):
        if rem == 0:
            yield tuple(prefix)
            return
        if rows == 0:
            return
        for p in range(min(rem, maxp), 0, -1):
            prefix.append(p)
            yield from rec(rem - p, p, rows - 1, prefix)
            prefix.pop()

    yield from rec(total, total, max_rows, [])


def kappa_of(F: K.SpectralFunction, n: int,
             tail_bound: Scalar = DEFAULT_TAIL) -> ClassFunction:
    """The class function with eigenvalue form prod_j F(theta_j) / F(1),
    expanded in the character basis.

    Geometric and exponential families are truncated at the smallest level
    whose remaining mass is below tail_bound.
    """
    kind = F.kind
    if kind == K.BETA_PLUS:
        p = F.param
        coeffs = {}
        for k in range(n + 1):
            coeffs[(1,) * k + (0,) * (n - k)] = p ** k / (1 + p) ** n
        return ClassFunction(n, coeffs, True, 0, str(F))
    if kind == K.BETA_MINUS:
        p = F.param
        coeffs = {}
        for k in range(n + 1):
            coeffs[(0,) * (n - k) + (-1,) * k] = p ** k / (1 + p) ** n
        return ClassFunction(n, coeffs, True, 0, str(F))
    if kind in (K.ALPHA_PLUS, K.ALPHA_MINUS):
        q = F.param
        coeffs = {}
        mass = Fraction(0)
        k = 0
        while True:
            if kind == K.ALPHA_PLUS:
                b = (k,) + (0,) * (n - 1)
            else:
                b = (0,) * (n - 1) + (-k,)
            c = q ** k * (1 - q) ** n
            coeffs[b] = c
            mass += c * dimension(b)
            if 1 - mass < tail_bound:
                break
            k += 1
            if k > 10_000:
                raise K.ResourceLimitError("class-function truncation too deep")
        return ClassFunction(n, coeffs, False, 1 - mass, str(F))
    if kind in (K.GAMMA_PLUS, K.GAMMA_MINUS):
        t = float(F.param)
        coeffs = {}
        mass = 0.0
        k = 0
        level = math.exp(-n * t)  # e^{-nt} t^k / k!, updated per level
        while True:
            for part in ([()] if k == 0 else _partitions(k, n)):
                shape = tuple(part) + (0,) * (n - len(part))
                c = level * _syt_count(tuple(part))
                if kind == K.GAMMA_MINUS:
                    shape = tuple(-v for v in reversed(shape))
                coeffs[shape] = c
                mass += c * dimension(shape)
            k += 1
            level = level * t / k
            if 1 - mass < float(tail_bound) or level == 0.0:
                break
            if k > 400:
                raise K.ResourceLimitError("class-function truncation too deep")
        return ClassFunction(n, coeffs, False, 1 - mass, str(F))
    if kind == K.LAURENT:
        # monomial weight of x is prod_j c_{x_j}; re-expand in the Schur basis
        fz = K.eval_F(F, 1)
        if fz == 0:
            raise K.DomainError("F(1) = 0 cannot be normalized")
        cmap = dict(F.coeffs)
        mono: dict[Weight, Scalar] = {}

        def rec(i, prefix):
            if i == n:
                w = Fraction(1)
                for v in prefix:
                    w = w * cmap[v]
                x = tuple(prefix)
                mono[x] = mono.get(x, Fraction(0)) + w / fz ** n
                return
            for m in cmap:
                prefix.append(m)
                rec(i + 1, prefix)
                prefix.pop()

        rec(0, [])
        coeffs = monomials_to_schur(mono)
        return ClassFunction(n, coeffs, True, 0, str(F))
    if kind == K.PRODUCT:
        out = kappa_of(F.factors[0], n, tail_bound)
        for f in F.factors[1:]:
            out = multiply(out, kappa_of(f, n, tail_bound))
        out.label = str(F)
        return out
    raise ValueError(f"unsupported spectral function shape: {F.kind}")


def multiply(k1: ClassFunction, k2: ClassFunction) -> ClassFunction:
    """Pointwise product of class functions, re-expanded by tensor decomposition."""
    if k1.n != k2.n:
        raise ValueError("rank mismatch")
    coeffs: dict[Signature, Scalar] = {}
    for b1, c1 in k1.coeffs.items():
        if c1 == 0:
            continue
        for b2, c2 in k2.coeffs.items():
            if c2 == 0:
                continue
            for g, lr in lr_support(b1, b2).items():
                coeffs[g] = coeffs.get(g, 0) + c1 * c2 * lr
    return ClassFunction(k1.n, coeffs, k1.exact and k2.exact,
                         k1.tail + k2.tail,
                         f"({k1.label})*({k2.label})")


def qn_entry(kappa: ClassFunction, lam: Signature, mu: Signature) -> Scalar:
    """Center-restriction transition entry."""
    if len(lam) != kappa.n or len(mu) != kappa.n:
        raise ValueError("rank mismatch")
    target = sum(mu) - sum(lam)
    total: Scalar = 0
    for b, c in kappa.coeffs.items():
        if c == 0 or sum(b) != target:
            continue
        lr = lr_coeff(lam, b, mu)
        if lr:
            total = total + c * lr
    if total == 0:
        return total
    return Fraction(dimension(mu), dimension(lam)) * total


def pn_entry(kappa: ClassFunction, x: Weight, y: Weight) -> Scalar:
    """Torus-restriction transition entry; depends only on y - x."""
    if len(x) != kappa.n or len(y) != kappa.n:
        raise ValueError("rank mismatch")
    d = tuple(b - a for a, b in zip(x, y))
    target = sum(d)
    total: Scalar = 0
    for b, c in kappa.coeffs.items():
        if c == 0 or sum(b) != target:
            continue
        m = weight_multiplicity(b, d)
        if m:
            total = total + c * m
    return total


def torus_step(kappa: ClassFunction) -> dict[Weight, Scalar]:
    """The full increment law of the torus walk (finite for finite expansions)."""
    law: dict[Weight, Scalar] = {}
    for b, c in kappa.coeffs.items():
        if c == 0:
            continue
        for x, m in weight_expansion(b).items():
            law[x] = law.get(x, 0) + c * m
    return {x: v for x, v in law.items() if v != 0}


# ---------------------------------------------------------------------------
# Verification


def check_qrw(F: K.SpectralFunction, n: int, window: list[Signature],
              eps: Scalar = Fraction(1, 10**9)) -> dict:
    """Compare the center restriction against the determinantal matrix at
    theta = 1 under both pairings (F itself and z -> 1/z), and report which
    one matches."""
    theta = (Fraction(1),) * n
    results = {}
    for name, Fk in (("direct", F), ("inverted", K.invert(F))):
        kappa = kappa_of(Fk, n, Fraction(1, 10**12))
        max_err: Scalar = 0
        for lam in window:
            for mu in window:
                q = qn_entry(kappa, lam, mu)
                t = K.tn_entry(theta, F, lam, mu)
                err = abs(q - t)
                if err > max_err:
                    max_err = err
        results[name] = max_err
    exact = F.is_exact
    tol = 0 if exact else eps
    pairing = None
    for name in ("inverted", "direct"):
        if (exact and results[name] == 0) or (not exact and results[name] <= tol):
            pairing = name
            break
    passed = pairing is not None
    err = results[pairing] if pairing else min(results.values())
    return K._report("qrw", passed, err, family=str(F), n=n,
                     pairing=pairing or "none",
                     direct_error=str(results["direct"]),
                     inverted_error=str(results["inverted"]))


def check_center_intertwining(kappa: ClassFunction, lam: Signature,
                              tau: Signature) -> dict:
    """Verify sum_mu Q(0,mu) c_{lam,mu}^tau dim(tau)/(dim(lam) dim(mu))
    equals Q(lam,tau), using the finite support of the row from zero."""
    n = kappa.n
    zero = (0,) * n
    lhs: Scalar = 0
    dim_tau = dimension(tau)
    dim_lam = dimension(lam)
    for b, c in kappa.coeffs.items():
        if c == 0:
            continue
        # Q(0, mu) is nonzero only for mu in the expansion support
        mu = b
        q0 = qn_entry(kappa, zero, mu)
        if q0 == 0:
            continue
        lr = lr_coeff(lam, mu, tau)
        if lr:
            lhs = lhs + q0 * lr * Fraction(dim_tau, dim_lam * dimension(mu))
    rhs = qn_entry(kappa, lam, tau)
    err = abs(lhs - rhs)
    passed = err == 0 if kappa.exact else err <= Fraction(1, 10**9)
    return K._report("center", passed, err, kappa=kappa.label,
                     lam=list(lam), tau=list(tau))


def check_torus_convolution(lam: Signature, mu: Signature) -> dict:
    """Weight law of a tensor product = convolution of the weight laws."""
    prod_law: dict[Weight, int] = {}
    for g, c in lr_support(lam, mu).items():
        for x, m in weight_expansion(g).items():
            prod_law[x] = prod_law.get(x, 0) + c * m
    conv: dict[Weight, int] = {}
    wl = weight_expansion(lam)
    wm = weight_expansion(mu)
    for x, mx in wl.items():
        for y, my in wm.items():
            z = tuple(a + b for a, b in zip(x, y))
            conv[z] = conv.get(z, 0) + mx * my
    passed = prod_law == conv
    err = 0 if passed else max(
        abs(prod_law.get(k, 0) - conv.get(k, 0))
        for k in set(prod_law) | set(conv)
    )
    return K._report("torus-convolution", passed, err,
                     lam=list(lam), mu=list(mu))


def check_weyl_invariance(kappa: ClassFunction,
                          triples: list[tuple[Weight, Weight, tuple[int, ...]]]
                          ) -> dict:
    """pn_entry is invariant under simultaneous coordinate permutation."""
    from .sigcore import weyl_act

    max_err: Scalar = 0
    for x, y, sigma in triples:
        a = pn_entry(kappa, x, y)
        b = pn_entry(kappa, weyl_act(sigma, x), weyl_act(sigma, y))
        err = abs(a - b)
        if err > max_err:
            max_err = err
    return K._report("torus-weyl", max_err == 0, max_err, kappa=kappa.label)
