"""Independent brute-force oracles used only by the tests."""

from fractions import Fraction
from itertools import permutations
from math import factorial

from sigwalk.sigcore import Signature, dimension


def _sgn(perm: tuple[int, ...]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def _contribution_sum(lam: Signature, mu: Signature, allowed) -> int:
    """Sum over permutation pairs of sgn(sigma)sgn(tau) whenever every
    column's particle displacement passes the `allowed` predicate."""
    n = len(lam)
    total = 0
    for sigma in permutations(range(n)):
        for tau in permutations(range(n)):
            inv_tau = [0] * n
            for i, v in enumerate(tau):
                inv_tau[v] = i
            ok = True
            for j in range(n):
                k = inv_tau[sigma[j]]
                if not allowed((lam[j] - (j + 1)) - (mu[k] - (k + 1))):
                    ok = False
                    break
            if ok:
                total += _sgn(sigma) * _sgn(tau)
    return total


def qn_bruteforce(family: str, param: Fraction,
                  lam: Signature, mu: Signature) -> Fraction:
    """Permutation-sum evaluation of the center restriction Q_n.

    Expands both alternants in the Weyl integration formula; only constant
    terms survive the torus integral, giving a signed sum over permutation
    pairs with a per-column displacement constraint."""
    n = len(lam)
    diff = sum(mu) - sum(lam)
    if family == "alpha+":
        pref = param ** diff * (1 - param) ** n
        con = _contribution_sum(lam, mu, lambda d: d <= 0)
    elif family == "beta+":
        pref = param ** diff / (1 + param) ** n
        con = _contribution_sum(lam, mu, lambda d: d in (0, -1))
    elif family == "beta-":
        pref = param ** (-diff) / (1 + param) ** n
        con = _contribution_sum(lam, mu, lambda d: d in (0, 1))
    else:
        raise ValueError(family)
    if con == 0:
        return Fraction(0)
    return (Fraction(dimension(mu), dimension(lam))
            * Fraction(con, factorial(n)) * pref)
