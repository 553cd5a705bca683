"""Signatures, weights, and the index arithmetic shared by every kernel.

A signature is a nonincreasing tuple of integers (negative parts are
first-class); a weight is an unordered integer lattice point of the same
rank.  Everything here is pure value arithmetic over plain tuples.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator

Signature = tuple[int, ...]
Weight = tuple[int, ...]


class DomainError(ValueError):
    """Input is syntactically fine but outside the mathematical domain."""


class ResourceLimitError(RuntimeError):
    """An enumeration or truncation exceeded its configured bound."""


def check_signature(parts: Iterable[int]) -> Signature:
    """Validate and normalize to a tuple; raises ValueError if not nonincreasing."""
    t = tuple(int(p) for p in parts)
    if len(t) == 0:
        raise ValueError("signature must have at least one part")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts must be nonincreasing: {t}")
    return t


def is_signature(parts: tuple[int, ...]) -> bool:
    return len(parts) >= 1 and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def interlaces(lower: Signature, upper: Signature) -> bool:
    """mu_1 >= la_1 >= mu_2 >= la_2 >= ... >= mu_n >= la_n."""
    if len(lower) != len(upper):
        raise ValueError(
            f"rank mismatch: {len(lower)} vs {len(upper)}"
        )
    n = len(lower)
    for i in range(n):
        if upper[i] < lower[i]:
            return False
        if i + 1 < n and lower[i] < upper[i + 1]:
            return False
    return True


def dimension(lam: Signature) -> int:
    """Dimension of the irreducible with highest weight lam.

    Product over i < j of (lam_i - i - (lam_j - j)) / (j - i), computed
    exactly and asserted integral.
    """
    n = len(lam)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - i - (lam[j] - j)
            den *= j - i
    d = Fraction(num, den)
    assert d.denominator == 1 and d >= 1, f"dimension not a positive integer: {lam}"
    return int(d)


def shift(lam: Signature, c: int) -> Signature:
    """Add c to every part; leaves the dimension unchanged."""
    return tuple(p + c for p in lam)


def weyl_act(sigma: tuple[int, ...], x: Weight) -> Weight:
    """Permute coordinates: result[i] = x[sigma[i]] with sigma a 0-based permutation."""
    if sorted(sigma) != list(range(len(x))):
        raise ValueError(f"not a permutation of 0..{len(x)-1}: {sigma}")
    return tuple(x[sigma[i]] for i in range(len(x)))


def dominant(x: Weight) -> Weight:
    """Sort a weight into the Weyl chamber (nonincreasing order)."""
    return tuple(sorted(x, reverse=True))


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(n))


def parse_signature(s: str) -> Signature:
    """Parse a comma-separated integer list, e.g. "2,1,0"."""
    try:
        parts = tuple(int(tok) for tok in s.split(","))
    except ValueError as e:
        raise ValueError(f"cannot parse signature {s!r}") from e
    return check_signature(parts)


def parse_weight(s: str) -> Weight:
    try:
        return tuple(int(tok) for tok in s.split(","))
    except ValueError as e:
        raise ValueError(f"cannot parse weight {s!r}") from e


def format_signature(lam: Signature) -> str:
    return ",".join(str(p) for p in lam)


def signatures_in_box(n: int, lo: int, hi: int) -> Iterator[Signature]:
    """All signatures of rank n with every part in [lo, hi]."""

    def rec(prefix: list[int], remaining: int, ub: int):
        if remaining == 0:
            yield tuple(prefix)
            return
        for p in range(ub, lo - 1, -1):
            prefix.append(p)
            yield from rec(prefix, remaining - 1, p)
            prefix.pop()

    yield from rec([], n, hi)


def signatures_with_sum(
    n: int, total: int, upper: list[int], lower: list[int]
) -> Iterator[Signature]:
    """Nonincreasing tuples with fixed sum and per-coordinate bounds.

    upper/lower are inclusive bounds per coordinate; the nonincreasing
    constraint is applied on top of them.
    """
    # suffix sums of the loosest remaining bounds, for pruning
    ub_suffix = [0] * (n + 1)
    lb_suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        ub_suffix[i] = ub_suffix[i + 1] + upper[i]
        lb_suffix[i] = lb_suffix[i + 1] + lower[i]

    def rec(i: int, prefix: list[int], rem: int):
        if i == n:
            if rem == 0:
                yield tuple(prefix)
            return
        hi = min(upper[i], prefix[-1] if prefix else upper[i])
        # remaining coordinates j > i are each <= current value and <= upper[j]
        lo = max(lower[i], rem - ub_suffix[i + 1])
        for p in range(hi, lo - 1, -1):
            rest = rem - p
            # feasibility: the rest must fit under p * (n - i - 1) and above lb
            if rest > p * (n - i - 1) or rest < lb_suffix[i + 1]:
                continue
            prefix.append(p)
            yield from rec(i + 1, prefix, rest)
            prefix.pop()

    yield from rec(0, [], total)
