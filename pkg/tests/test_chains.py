from fractions import Fraction

from sigwalk import chains as C
from sigwalk import kernels as K
from sigwalk.sigcore import signatures_in_box

HALF = Fraction(1, 2)


def test_particle_positions():
    assert C.particle_positions((0, 0)) == (-1, -2)
    assert C.particle_positions((3, 1, 0)) == (2, -1, -3)


def test_rng_streams_distinct():
    a = C.make_rng(7).random(4).tolist()
    b = C.make_rng(7).random(4).tolist()
    c = C.make_rng(7, stream=1).random(4).tolist()
    assert a == b
    assert a != c


def test_simulate_deterministic():
    t1 = C.simulate((0, 0), K.beta_minus(HALF), 50, seed=11)
    t2 = C.simulate((0, 0), K.beta_minus(HALF), 50, seed=11)
    assert t1.states == t2.states
    t3 = C.simulate((0, 0), K.beta_minus(HALF), 50, seed=12)
    assert t1.states != t3.states


def test_simulate_support_invariant():
    # every Bernoulli transition is a vertical strip
    traj = C.simulate((0, 0, 0), K.beta_minus(HALF), 60, seed=3)
    for prev, cur in zip(traj.states, traj.states[1:]):
        assert all(c - p in (0, 1) for p, c in zip(prev, cur))
    traj = C.simulate((0, 0), K.alpha_plus(HALF), 30, seed=3)
    from sigwalk.sigcore import interlaces
    for prev, cur in zip(traj.states, traj.states[1:]):
        assert interlaces(cur, prev)


def test_trajectory_serialization():
    traj = C.simulate((1, 0), K.beta_plus(HALF), 5, seed=1)
    rows = list(traj.to_csv_rows())
    assert rows[0] == (0, 1, 0)
    assert rows[1] == (0, 2, -2)
    assert len(rows) == 6 * 2
    s = traj.summary()
    assert s["steps"] == 5 and s["n"] == 2 and s["seed"] == 1


def test_sampler_matches_row_support():
    sampler = C.StepSampler((0, 0), K.beta_minus(HALF))
    rng = C.make_rng(5)
    draws = {sampler.draw(rng) for _ in range(200)}
    assert draws == {(0, 0), (1, 0), (1, 1)}


def test_check_doob_bernoulli_exact():
    win = list(signatures_in_box(2, -2, 2))
    rep = C.check_doob(K.beta_minus(HALF), 2, win)
    assert rep["pass"] and rep["exact"]


def test_check_doob_poisson_relative():
    win = list(signatures_in_box(2, -1, 1))
    rep = C.check_doob(K.gamma_minus(0.5), 2, win, 1e-9)
    assert rep["pass"] and not rep["exact"]


def test_empirical_tv_small_run():
    rep = C.empirical_check((0, 0), K.beta_minus(HALF), 20_000, 99, 0.05)
    assert rep["pass"]
    assert sum(rep["counts"].values()) == 20_000
