"""Symmetric-function engine.

Exact evaluation of h_k, e_k, and Schur polynomials, weight multiplicities
(Kostka counting over semistandard tableaux), and Littlewood-Richardson
coefficients with two independent computation paths: lattice-word tableau
enumeration, and a monomial-expansion oracle that re-expands products in the
Schur basis by triangular elimination.

Signatures with negative parts are handled throughout by the shift trick
s_{lam + c*1}(theta) = (theta_1...theta_n)^c * s_lam(theta).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .sigcore import (
    DomainError,
    ResourceLimitError,
    Signature,
    Weight,
    dimension,
    dominant,
    is_signature,
    shift,
)

Scalar = Fraction | int | float

# enumeration guards; exceeding them raises ResourceLimitError
MAX_EXPANSION_BOXES = 40
MAX_EXPANSION_RANK = 8


def det(matrix: list[list[Scalar]]) -> Scalar:
    """Determinant by fraction-free-ish Gaussian elimination over exact scalars.

    Falls back to plain elimination with Fractions; floats pass through the
    same code path.  Small matrices only (the kernels never exceed rank n).
    """
    n = len(matrix)
    if n == 0:
        return 1
    m = [[Fraction(v) if isinstance(v, int) else v for v in row] for row in matrix]
    sign = 1
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return 0 * m[0][0]
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        piv = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] / piv
            for c in range(col, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    result = sign
    for i in range(n):
        result = result * m[i][i]
    return result


# ---------------------------------------------------------------------------
# h_k, e_k and Schur evaluation


def h_eval(k: int, theta: tuple[Scalar, ...]) -> Scalar:
    """Complete homogeneous h_k(theta); 0 for k < 0, 1 for k = 0."""
    if k < 0:
        return Fraction(0)
    return _h_table(theta, k)[k]


def _h_table(theta: tuple[Scalar, ...], kmax: int) -> list[Scalar]:
    # h_k over m variables: h_k(m) = h_k(m-1) + theta_m * h_{k-1}(m)
    h = [Fraction(1)] + [Fraction(0)] * kmax
    for t in theta:
        for k in range(1, kmax + 1):
            h[k] = h[k] + t * h[k - 1]
    return h


def e_eval(k: int, theta: tuple[Scalar, ...]) -> Scalar:
    """Elementary e_k(theta); 0 outside 0 <= k <= n."""
    n = len(theta)
    if k < 0 or k > n:
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for t in theta:
        for j in range(min(k, n), 0, -1):
            e[j] = e[j] + t * e[j - 1]
    return e[k]


def _theta_product(theta: tuple[Scalar, ...]) -> Scalar:
    p = Fraction(1)
    for t in theta:
        p = p * t
    return p


def schur_eval(lam: Signature, theta: tuple[Scalar, ...]) -> Scalar:
    """s_lam(theta) via the Jacobi-Trudi determinant det[h_{lam_i - i + j}].

    Valid at repeated theta entries.  Negative parts go through the shift
    trick with the (theta_1...theta_n)^c prefactor.
    """
    if len(lam) != len(theta):
        raise ValueError("rank mismatch between signature and evaluation point")
    if any(t == 0 for t in theta):
        raise DomainError("theta entries must be nonzero")
    return _schur_eval_cached(tuple(lam), tuple(Fraction(t) for t in theta))


@lru_cache(maxsize=200_000)
def _schur_eval_cached(lam: Signature, theta: tuple[Fraction, ...]) -> Fraction:
    n = len(lam)
    c = lam[-1]
    part = shift(lam, -c) if c != 0 else lam
    kmax = part[0] + n
    h = _h_table(theta, max(kmax, 0))
    m = [[h[part[i] - i + j] if 0 <= part[i] - i + j <= kmax else Fraction(0)
          for j in range(n)] for i in range(n)]
    val = det(m)
    if c != 0:
        val = val * _theta_product(theta) ** c
    return val


def schur_bialternant(lam: Signature, theta: tuple[Scalar, ...]) -> Scalar:
    """s_lam as a ratio of alternants; requires pairwise distinct theta.

    Independent of the Jacobi-Trudi path, used as an oracle against it.
    """
    n = len(lam)
    if len(theta) != n:
        raise ValueError("rank mismatch between signature and evaluation point")
    th = tuple(Fraction(t) for t in theta)
    if any(t == 0 for t in th):
        raise DomainError("theta entries must be nonzero")
    if len(set(th)) != n:
        raise DomainError("bialternant requires pairwise distinct theta")
    num = det([[th[i] ** (lam[j] + n - 1 - j) for j in range(n)] for i in range(n)])
    den = det([[th[i] ** (n - 1 - j) for j in range(n)] for i in range(n)])
    return num / den


# ---------------------------------------------------------------------------
# Kostka numbers and weight multiplicities


@lru_cache(maxsize=500_000)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of SSYT of (partition) shape with the given content.

    Recursion: the largest letter occupies a horizontal strip.
    """
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1 if not shape else 0
    m = content[-1]
    rest = content[:-1]
    total = 0
    # enumerate inner shapes nu with shape/nu a horizontal strip of size m
    k = len(shape)

    def strips(i: int, removed: int, nu: list[int]) -> Iterator[tuple[int, ...]]:
        if i == k:
            if removed == m:
                out = tuple(p for p in nu if p > 0)
                yield out
            return
        lo = shape[i + 1] if i + 1 < k else 0
        for v in range(lo, shape[i] + 1):
            r = shape[i] - v
            if removed + r > m:
                continue
            nu.append(v)
            yield from strips(i + 1, removed + r, nu)
            nu.pop()

    for nu in strips(0, 0, []):
        total += _kostka(nu, rest)
    return total


def kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Kostka number K_{shape,content}; content order is immaterial."""
    sh = tuple(p for p in shape if p > 0)
    if any(p < 0 for p in shape) or not is_signature(sh or (0,)):
        raise ValueError(f"shape must be a partition: {shape}")
    if any(c < 0 for c in content):
        return 0
    ct = tuple(sorted((c for c in content if c > 0), reverse=True))
    return _kostka(sh, ct)


def weight_multiplicity(lam: Signature, x: Weight) -> int:
    """Multiplicity of the weight x in the irreducible with highest weight lam."""
    n = len(lam)
    if len(x) != n:
        raise ValueError("rank mismatch between signature and weight")
    if sum(x) != sum(lam):
        return 0
    c = lam[-1]
    part = shift(lam, -c)
    xs = dominant(tuple(xi - c for xi in x))
    if any(xi < 0 for xi in xs):
        return 0
    return kostka(part, xs)


def weight_expansion(
    lam: Signature, max_boxes: int = MAX_EXPANSION_BOXES,
    max_rank: int = MAX_EXPANSION_RANK,
) -> dict[Weight, int]:
    """Full weight-space decomposition of the irreducible with highest weight lam.

    Multiplicities sum to dimension(lam).  Enumeration is exponential in the
    number of boxes, so it is guarded by explicit bounds.
    """
    n = len(lam)
    c = lam[-1]
    part = shift(lam, -c)
    boxes = sum(part)
    if n > max_rank or boxes > max_boxes:
        raise ResourceLimitError(
            f"weight expansion of {lam} exceeds bounds (rank {n}, boxes {boxes})"
        )
    out: dict[Weight, int] = {}

    def compositions(i: int, rem: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if i == n - 1:
            prefix.append(rem)
            yield tuple(prefix)
            prefix.pop()
            return
        for v in range(rem + 1):
            prefix.append(v)
            yield from compositions(i + 1, rem - v, prefix)
            prefix.pop()

    for comp in compositions(0, boxes, []):
        m = kostka(part, dominant(comp))
        if m:
            out[tuple(v + c for v in comp)] = m
    return out


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def _normalize_triple(
    lam: Signature, mu: Signature, tau: Signature
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None:
    """Shift (lam, mu, tau) to partitions, preserving c_{lam,mu}^tau.

    Shifting mu by d forces tau by d; shifting lam by c forces tau by c.
    Returns None when the graded degree |tau| = |lam| + |mu| fails.
    """
    n = len(lam)
    if len(mu) != n or len(tau) != n:
        raise ValueError("rank mismatch among signatures")
    if sum(tau) != sum(lam) + sum(mu):
        return None
    d = -min(mu[-1], 0)
    mu2 = shift(mu, d)
    tau2 = shift(tau, d)
    c = -min(lam[-1], tau2[-1], 0)
    lam2 = shift(lam, c)
    tau3 = shift(tau2, c)
    if tau3[-1] < 0 or lam2[-1] < 0 or mu2[-1] < 0:
        return None
    return lam2, mu2, tau3


def lr_coeff(lam: Signature, mu: Signature, tau: Signature) -> int:
    """c_{lam,mu}^tau by counting lattice-word skew tableaux of shape tau/lam."""
    norm = _normalize_triple(lam, mu, tau)
    if norm is None:
        return 0
    lam2, mu2, tau3 = norm
    if any(tau3[i] < lam2[i] for i in range(len(lam2))):
        return 0
    return _count_lr_tableaux(lam2, mu2, tau3)


def _count_lr_tableaux(
    lam: tuple[int, ...], mu: tuple[int, ...], tau: tuple[int, ...]
) -> int:
    """Fill tau/lam with content mu in reading order (rows top to bottom,
    right to left within a row), keeping rows weakly increasing, columns
    strictly increasing, and every reading-word prefix lattice."""
    n = len(tau)
    nletters = len([m for m in mu if m > 0])
    cells = []  # (row, col) in reading order
    for r in range(n):
        for c in range(tau[r] - 1, lam[r] - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1 if all(m == 0 for m in mu) else 0
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (nletters + 1)
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        above = grid.get((r - 1, c), 0)
        right = grid.get((r, c + 1), nletters)
        for v in range(above + 1, right + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue  # lattice word would fail on this prefix
            counts[v] += 1
            grid[(r, c)] = v
            fill(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]

    fill(0)
    return total


def schur_product_expansion(lam: Signature, mu: Signature) -> dict[Signature, int]:
    """Schur expansion of s_lam * s_mu by monomial convolution.

    Independent of the tableau rule: convolves the two weight expansions
    and peels off leading terms by triangular elimination.
    """
    wl = weight_expansion(lam)
    wm = weight_expansion(mu)
    prod: dict[Weight, int] = {}
    for x, mx in wl.items():
        for y, my in wm.items():
            z = tuple(a + b for a, b in zip(x, y))
            prod[z] = prod.get(z, 0) + mx * my
    return monomials_to_schur(prod)


def monomials_to_schur(mono: dict[Weight, Scalar]) -> dict[Signature, Scalar]:
    """Express a symmetric Laurent polynomial (given in the monomial basis)
    in the Schur basis by repeatedly subtracting the lex-leading orbit."""
    work = {x: v for x, v in mono.items() if v != 0}
    out: dict[Signature, Scalar] = {}
    guard = 0
    while work:
        guard += 1
        if guard > 100_000:
            raise ResourceLimitError("Schur-basis elimination did not terminate")
        lead = max(work)
        sig = tuple(lead)
        if not is_signature(sig):
            raise ValueError("input is not symmetric: leading term not dominant")
        coeff = work[lead]
        out[sig] = coeff
        for x, m in weight_expansion(sig).items():
            nv = work.get(x, 0) - coeff * m
            if nv == 0:
                work.pop(x, None)
            else:
                work[x] = nv
    return out


def lr_coeff_oracle(lam: Signature, mu: Signature, tau: Signature) -> int:
    """Independent oracle for lr_coeff via monomial expansion of s_lam * s_mu."""
    norm = _normalize_triple(lam, mu, tau)
    if norm is None:
        return 0
    lam2, mu2, tau3 = norm
    exp = _schur_product_cached(lam2, mu2)
    return exp.get(tau3, 0)


@lru_cache(maxsize=50_000)
def _schur_product_cached(lam: Signature, mu: Signature) -> dict[Signature, int]:
    return schur_product_expansion(lam, mu)


def pieri_row(lam: Signature, k: int) -> set[Signature]:
    """All tau with lam interlacing tau and |tau| - |lam| = k (horizontal strips)."""
    if k < 0:
        raise ValueError("strip size must be nonnegative")
    n = len(lam)
    out: set[Signature] = set()

    def rec(i: int, rem: int, prefix: list[int]) -> None:
        if i == n:
            if rem == 0:
                out.add(tuple(prefix))
            return
        hi = lam[i] + rem if i == 0 else min(lam[i - 1], lam[i] + rem)
        for t in range(lam[i], hi + 1):
            prefix.append(t)
            rec(i + 1, rem - (t - lam[i]), prefix)
            prefix.pop()

    rec(0, k, [])
    return out


def pieri_column(lam: Signature, k: int) -> set[Signature]:
    """All tau with tau_j - lam_j in {0,1} summing to k (vertical strips)."""
    if k < 0:
        raise ValueError("strip size must be nonnegative")
    n = len(lam)
    if k > n:
        return set()
    out: set[Signature] = set()

    def rec(i: int, rem: int, prefix: list[int]) -> None:
        if rem > n - i:
            return
        if i == n:
            if rem == 0:
                t = tuple(prefix)
                if is_signature(t):
                    out.add(t)
            return
        for add in (1, 0):
            if add > rem:
                continue
            prefix.append(lam[i] + add)
            rec(i + 1, rem - add, prefix)
            prefix.pop()

    rec(0, k, [])
    return out


def lr_support(lam: Signature, mu: Signature) -> dict[Signature, int]:
    """All tau with c_{lam,mu}^tau > 0, with their coefficients.

    Computed by iterated Pieri growth over the rows of mu, which keeps the
    candidate set tight; coefficients come from the tableau rule.
    """
    n = len(lam)
    d = -min(mu[-1], 0)
    mu2 = shift(mu, d)
    # grow lam by horizontal strips of sizes mu2 (an upper bound on the support)
    frontier: set[Signature] = {lam}
    for m in mu2:
        nxt: set[Signature] = set()
        for sig in frontier:
            nxt |= pieri_row(sig, m)
        frontier = nxt
    out: dict[Signature, int] = {}
    for tau_up in frontier:
        tau = shift(tau_up, -d)
        c = lr_coeff(lam, mu, tau)
        if c:
            out[tau] = c
    return out


def triple_coeff(
    lam: Signature, sigma: Signature, nu: Signature, tau: Signature
) -> int:
    """Coefficient of s_tau in s_lam * s_sigma * s_nu."""
    if sum(tau) != sum(lam) + sum(sigma) + sum(nu):
        return 0
    total = 0
    for mu, c1 in lr_support(lam, sigma).items():
        c2 = lr_coeff(mu, nu, tau)
        if c2:
            total += c1 * c2
    return total
