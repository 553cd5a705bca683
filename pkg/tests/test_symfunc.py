from fractions import Fraction

from hypothesis import given, settings, strategies as st

from sigwalk.sigcore import dimension, shift, signatures_in_box
from sigwalk.symfunc import (
    kostka,
    lr_coeff,
    lr_coeff_oracle,
    lr_support,
    pieri_column,
    pieri_row,
    schur_bialternant,
    schur_eval,
    schur_product_expansion,
    triple_coeff,
    weight_expansion,
    weight_multiplicity,
)

small_partitions = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n)
).map(lambda p: tuple(sorted(p, reverse=True)))

rationals = st.fractions(min_value=Fraction(1, 5), max_value=5,
                         max_denominator=7)


def test_schur_at_one_equals_dimension():
    for n in (1, 2, 3):
        for lam in signatures_in_box(n, -2, 2):
            assert schur_eval(lam, (Fraction(1),) * n) == dimension(lam)


def test_jacobi_trudi_matches_bialternant():
    theta = (Fraction(2), Fraction(3, 2))
    for lam in signatures_in_box(2, -2, 3):
        assert schur_eval(lam, theta) == schur_bialternant(lam, theta)


@given(small_partitions,
       st.lists(rationals, min_size=3, max_size=3, unique=True))
@settings(max_examples=50, deadline=None)
def test_schur_consistency_random_theta(lam, theta):
    n = len(lam)
    th = tuple(theta[:n])
    if len(set(th)) < n:
        return
    assert schur_eval(lam, th) == schur_bialternant(lam, th)


def test_schur_duality():
    # s_lam(1/theta) = (prod theta)^(-lam_1) s_{reversed complement}(theta)
    theta = (Fraction(2), Fraction(3), Fraction(5))
    for lam in ((2, 1, 0), (3, 1, 1), (2, 2, -1)):
        inv = tuple(1 / t for t in theta)
        lhs = schur_eval(lam, inv)
        comp = tuple(lam[0] - lam[len(lam) - 1 - i] for i in range(len(lam)))
        prod = theta[0] * theta[1] * theta[2]
        assert lhs == prod ** (-lam[0]) * schur_eval(comp, theta)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 1), (2, 1)) == 1
    assert kostka((1, 1), (2, 0)) == 0
    assert kostka((3,), (1, 1, 1)) == 1


def test_weight_multiplicity_and_expansion():
    lam = (2, 0)
    exp = weight_expansion(lam)
    assert exp == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert sum(exp.values()) == dimension(lam)
    assert weight_multiplicity((2, 1, 0), (1, 1, 1)) == 2


@given(small_partitions)
@settings(max_examples=30, deadline=None)
def test_weight_expansion_counts_dimension(lam):
    assert sum(weight_expansion(lam).values()) == dimension(lam)


def test_lr_two_tableau_example():
    assert lr_coeff((2, 1, 0), (3, 2, 1), (4, 3, 2)) == 2


def test_lr_matches_oracle_samples():
    for lam, mu, tau in (
        ((2, 1), (1, 0), (2, 2)),
        ((2, 1), (1, 1), (3, 1)),
        ((1, 0, 0), (1, 0, 0), (1, 1, 0)),
        ((2, 0, 0), (2, 1, 0), (3, 2, 0)),
    ):
        assert lr_coeff(lam, mu, tau) == lr_coeff_oracle(lam, mu, tau)


@given(small_partitions, small_partitions, st.integers(-3, 3))
@settings(max_examples=40, deadline=None)
def test_lr_shift_equivariance(lam, mu, c):
    if len(lam) != len(mu):
        return
    supp = lr_support(lam, mu)
    for tau, v in supp.items():
        assert lr_coeff(shift(lam, c), mu, shift(tau, c)) == v


def test_lr_support_total_dimension():
    lam, mu = (1, 0), (1, 0)
    supp = lr_support(lam, mu)
    assert supp == {(2, 0): 1, (1, 1): 1}
    assert sum(c * dimension(g) for g, c in supp.items()) \
        == dimension(lam) * dimension(mu)


def test_negative_parts_shift_trick():
    # expansions with negative parts reduce to the shifted nonnegative case
    assert lr_coeff((0, -1), (1, 0), (1, -1)) == 1
    theta = (Fraction(2), Fraction(3))
    lam = (1, -2)
    assert schur_eval(lam, theta) == \
        schur_eval((3, 0), theta) / (theta[0] * theta[1]) ** 2


def test_pieri_rules():
    assert pieri_row((1, 0), 1) == {(2, 0), (1, 1)}
    assert pieri_column((1, 0), 1) == {(2, 0), (1, 1)}
    assert pieri_column((1, 0), 2) == {(2, 1)}
    assert pieri_row((0, 0), 2) == {(2, 0)}


def test_pieri_consistent_with_lr():
    lam = (2, 1, 0)
    for k in (1, 2, 3):
        row = pieri_row(lam, k)
        assert all(lr_coeff(lam, (k, 0, 0), tau) == 1 for tau in row)
        col = pieri_column(lam, k)
        one_col = tuple([1] * k + [0] * (3 - k))
        assert all(lr_coeff(lam, one_col, tau) == 1 for tau in col)


def test_schur_product_expansion_closes():
    lam, mu = (2, 0), (1, 1)
    exp = schur_product_expansion(lam, mu)
    theta = (Fraction(2), Fraction(5))
    lhs = schur_eval(lam, theta) * schur_eval(mu, theta)
    rhs = sum(c * schur_eval(g, theta) for g, c in exp.items())
    assert lhs == rhs


def test_triple_coeff_symmetry():
    lam, sig, nu, tau = (2, 0), (1, 0), (1, 1), (3, 2)
    base = triple_coeff(lam, sig, nu, tau)
    assert base == triple_coeff(nu, sig, lam, tau)
    assert base == triple_coeff(sig, nu, lam, tau)
    # s_{(1,0)}^3 contains s_{(2,1)} with multiplicity 2 (two standard tableaux)
    assert triple_coeff((1, 0), (1, 0), (1, 0), (2, 1)) == 2
