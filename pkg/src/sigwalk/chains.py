"""Monte Carlo simulation of the theta = 1 chains and their exactness checks.

Sampling draws one-step transitions straight from the kernel rows by inverse
CDF.  The generator is counter-based (Philox, 64-bit seed) so trajectories
are reproducible and parallel streams stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .sigcore import Signature, dimension
from .kernels import (
    BETA_MINUS,
    BETA_PLUS,
    GAMMA_MINUS,
    GAMMA_PLUS,
    KernelRow,
    SpectralFunction,
    invert,
    tn_row,
)
from .quantum import kappa_of, pn_entry
from .symfunc import Scalar
from . import kernels as K

SAMPLER_TAIL = Fraction(1, 2 ** 53)


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator; distinct streams never overlap."""
    bg = np.random.Philox(key=seed)
    if stream:
        bg = bg.jumped(stream)
    return np.random.Generator(bg)


def particle_positions(lam: Signature) -> tuple[int, ...]:
    """Strictly decreasing particle coordinates x_i = lam_i - i."""
    return tuple(lam[i] - (i + 1) for i in range(len(lam)))


class StepSampler:
    """Inverse-CDF sampler for one row of the theta = 1 kernel.

    Rows with infinite support are truncated so the untouched tail mass is
    below 2^-53; a uniform draw landing in the tail forces an enumeration
    extension rather than a rejection.
    """

    def __init__(self, lam: Signature, F: SpectralFunction):
        self.lam = lam
        self.F = F
        self._build(SAMPLER_TAIL)

    def _build(self, tail: Scalar) -> None:
        theta = (Fraction(1),) * len(self.lam)
        row: KernelRow = tn_row(theta, self.F, self.lam, tail)
        items = sorted(row.entries.items())
        self.states = [s for s, _ in items]
        cdf = []
        acc = 0.0
        for _, v in items:
            acc += float(v)
            cdf.append(acc)
        self.cdf = np.array(cdf)
        self.tail = tail

    def draw(self, rng: np.random.Generator) -> Signature:
        u = rng.random()
        idx = int(np.searchsorted(self.cdf, u, side="right"))
        while idx >= len(self.states):
            # tail hit: extend the enumeration and retry with the same u
            self._build(self.tail / 2 ** 10)
            idx = int(np.searchsorted(self.cdf, u, side="right"))
        return self.states[idx]

    def draw_many(self, count: int, rng: np.random.Generator) -> list[Signature]:
        us = rng.random(count)
        out = []
        for u in us:
            idx = int(np.searchsorted(self.cdf, u, side="right"))
            while idx >= len(self.states):
                self._build(self.tail / 2 ** 10)
                idx = int(np.searchsorted(self.cdf, u, side="right"))
            out.append(self.states[idx])
        return out


def sample_step(lam: Signature, F: SpectralFunction,
                rng: np.random.Generator) -> Signature:
    """One transition drawn from T_n(1; F)(lam, .)."""
    return StepSampler(lam, F).draw(rng)


@dataclass
class Trajectory:
    states: list[Signature]
    seed: int
    F: SpectralFunction
    steps: int

    def to_csv_rows(self):
        """Rows (step, i, position) over particle coordinates."""
        for step, lam in enumerate(self.states):
            for i, x in enumerate(particle_positions(lam), start=1):
                yield step, i, x

    def summary(self) -> dict:
        return {
            "F": str(self.F),
            "n": len(self.states[0]),
            "steps": self.steps,
            "seed": self.seed,
            "final": list(self.states[-1]),
        }


def simulate(lam0: Signature, F: SpectralFunction, steps: int,
             seed: int, stream: int = 0) -> Trajectory:
    """Iterate one-step sampling; deterministic per (lam0, F, steps, seed)."""
    rng = make_rng(seed, stream)
    samplers: dict[Signature, StepSampler] = {}
    states = [tuple(lam0)]
    cur = tuple(lam0)
    for _ in range(steps):
        if cur not in samplers:
            samplers[cur] = StepSampler(cur, F)
        cur = samplers[cur].draw(rng)
        states.append(cur)
    return Trajectory(states, seed, F, steps)


def check_doob(F: SpectralFunction, n: int,
               window: list[Signature],
               eps: float = 1e-9) -> dict:
    """The signature chain is the dim-weighted h-transform of independent
    coordinate walks on the strict cone.

    The independent-walk law comes from the torus kernel of the inverse
    spectral function, so this doubles as a center/torus consistency check.
    """
    from .symfunc import det

    if F.kind not in (BETA_MINUS, BETA_PLUS, GAMMA_MINUS, GAMMA_PLUS):
        raise ValueError("h-transform check applies to the Bernoulli and "
                         "Poisson-type families")
    theta = (Fraction(1),) * n
    # one-coordinate step law of the matching torus walk; the truncation is
    # deepened on demand so every displacement in the row is covered
    state = {"tail": Fraction(1, 10**15),
             "kappa": kappa_of(invert(F), 1, Fraction(1, 10**15))}

    def w1(d: int) -> Scalar:
        depth = max(abs(sum(b)) for b in state["kappa"].coeffs)
        while not state["kappa"].exact and abs(d) > depth:
            state["tail"] /= 10**6
            state["kappa"] = kappa_of(invert(F), 1, state["tail"])
            new_depth = max(abs(sum(b)) for b in state["kappa"].coeffs)
            if new_depth == depth:
                break
            depth = new_depth
        return pn_entry(state["kappa"], (0,), (d,))

    exact = F.is_exact
    bernoulli = F.kind in (BETA_MINUS, BETA_PLUS)
    max_err: Scalar = 0
    failures = []
    for lam in window:
        row = tn_row(theta, F, lam, Fraction(1, 10**12))
        x = particle_positions(lam)
        for mu, t in row.entries.items():
            y = particle_positions(mu)
            # nonintersecting-path law of n independent coordinate walks
            w = det([[w1(y[i] - x[j]) for j in range(n)] for i in range(n)])
            rhs = Fraction(dimension(mu), dimension(lam)) * w
            if exact:
                err = abs(t - rhs)
                ok = err == 0
                if bernoulli:
                    # on the strip the path determinant collapses to the
                    # plain product of independent increments
                    prod_w: Scalar = 1
                    for i in range(n):
                        prod_w = prod_w * w1(y[i] - x[i])
                    ok = ok and w == prod_w
            else:
                err = abs(t - rhs) / abs(rhs) if rhs != 0 else abs(t - rhs)
                ok = err <= eps
            if err > max_err:
                max_err = err
            if not ok:
                failures.append((lam, mu))
    return K._report("doob", not failures, max_err, F=str(F), n=n,
                     exact=exact,
                     failures=[[list(a), list(b)] for a, b in failures[:10]])


def empirical_check(lam0: Signature, F: SpectralFunction, samples: int,
                    seed: int, delta: float) -> dict:
    """Total-variation distance between the empirical one-step law and the
    exact kernel row."""
    sampler = StepSampler(tuple(lam0), F)
    rng = make_rng(seed)
    counts: dict[Signature, int] = {}
    for mu in sampler.draw_many(samples, rng):
        counts[mu] = counts.get(mu, 0) + 1
    theta = (Fraction(1),) * len(lam0)
    row = tn_row(theta, F, tuple(lam0), Fraction(1, 10**12))
    tv = 0.0
    for mu in set(row.entries) | set(counts):
        tv += abs(counts.get(mu, 0) / samples - float(row.entries.get(mu, 0)))
    tv /= 2
    return K._report("empirical", tv <= delta, tv, F=str(F),
                     lam0=list(lam0), samples=samples, seed=seed,
                     tv=tv, delta=delta,
                     counts={str(list(k)): v for k, v in sorted(counts.items())})
