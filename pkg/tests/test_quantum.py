from fractions import Fraction

from sigwalk import kernels as K
from sigwalk import quantum as Q
from sigwalk.sigcore import signatures_in_box

HALF = Fraction(1, 2)


def test_kappa_bernoulli_coefficients():
    kappa = Q.kappa_of(K.beta_plus(HALF), 2)
    assert kappa.coeffs == {(0, 0): Fraction(4, 9),
                            (1, 0): Fraction(2, 9),
                            (1, 1): Fraction(1, 9)}
    assert kappa.exact
    assert kappa.normalization() == 1


def test_kappa_bernoulli_minus_support():
    kappa = Q.kappa_of(K.beta_minus(HALF), 2)
    assert set(kappa.coeffs) == {(0, 0), (0, -1), (-1, -1)}
    assert kappa.normalization() == 1


def test_kappa_geometric_truncated():
    kappa = Q.kappa_of(K.alpha_plus(Fraction(1, 3)), 2, Fraction(1, 10 ** 9))
    assert not kappa.exact or kappa.normalization() == 1
    assert kappa.coeffs[(0, 0)] == Fraction(4, 9)
    assert kappa.coeffs[(2, 0)] == Fraction(4, 81)
    assert 1 - kappa.normalization() <= Fraction(1, 10 ** 9)


def test_qn_entry_example():
    kappa = Q.kappa_of(K.beta_plus(HALF), 2)
    assert Q.qn_entry(kappa, (0, 0), (1, 0)) == Fraction(4, 9)
    assert Q.qn_entry(kappa, (0, 0), (2, 0)) == 0


def test_torus_entry_and_step():
    kappa = Q.kappa_of(K.beta_plus(HALF), 2)
    step = Q.torus_step(kappa)
    assert sum(step.values()) == 1
    assert Q.pn_entry(kappa, (0, 0), (1, 0)) == step[(1, 0)]
    # translation invariance
    assert Q.pn_entry(kappa, (2, 2), (3, 2)) == step[(1, 0)]


def test_qrw_pairing_named():
    win = list(signatures_in_box(2, -2, 2))
    rep = Q.check_qrw(K.beta_minus(HALF), 2, win)
    assert rep["pass"]
    assert rep["pairing"] == "inverted"


def test_center_intertwining_character():
    kappa = Q.normalized_character((2, 1))
    rep = Q.check_center_intertwining(kappa, (1, 0), (2, 1))
    assert rep["pass"]


def test_morphism_of_products():
    # Q(k1) Q(k2) = Q(k1 k2) entrywise on a window
    n = 2
    k1 = Q.kappa_of(K.beta_minus(HALF), n)
    k2 = Q.kappa_of(K.beta_plus(Fraction(1, 3)), n)
    k12 = Q.multiply(k1, k2)
    win = list(signatures_in_box(n, -1, 2))
    for lam in win:
        for tau in win:
            lhs = sum(Q.qn_entry(k1, lam, g) * Q.qn_entry(k2, g, tau)
                      for g in signatures_in_box(n, -3, 4))
            assert lhs == Q.qn_entry(k12, lam, tau)


def test_weyl_invariance_small():
    kappa = Q.kappa_of(K.beta_plus(HALF), 2)
    rep = Q.check_weyl_invariance(
        kappa, [((1, -1), (0, 1), (1, 0)), ((2, 0), (1, 1), (1, 0))])
    assert rep["pass"]
