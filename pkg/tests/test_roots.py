from fractions import Fraction

from jetforge.roots import (
    count_real_roots,
    first_rational_root,
    poly_gcd,
    rational_root_candidates,
    sturm_chain,
)


def F(*values):
    return [Fraction(v) for v in values]


def test_sturm_chain_quadratic():
    chain = sturm_chain(F(-4, 0, 1))  # y^2 - 4
    assert chain[0] == F(-4, 0, 1)
    assert chain[1] == F(0, 2)


def test_count_real_roots():
    assert count_real_roots(F(-4, 0, 1)) == 2  # y^2 - 4
    assert count_real_roots(F(1, 0, 1)) == 0  # y^2 + 1
    assert count_real_roots(F(0, 1)) == 1  # y
    assert count_real_roots(F(0, 0, 1)) == 1  # y^2: one distinct root
    assert count_real_roots(F(5)) == 0
    assert count_real_roots(F(-2, 0, 0, 1)) == 1  # y^3 - 2 (irrational)


def test_candidate_order_positive_first():
    cands = rational_root_candidates(F(-4, 0, 1))
    assert cands[:4] == [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2)]


def test_first_rational_root():
    assert first_rational_root(F(-4, 0, 1)) == 2
    assert first_rational_root(F(1, 0, 1)) is None
    assert first_rational_root(F(-2, 0, 0, 1)) is None
    # 2y^2 - y: roots 0 and 1/2; zero is tested first
    assert first_rational_root(F(0, -1, 2)) == 0
    # 3y - 2
    assert first_rational_root(F(-2, 3)) == Fraction(2, 3)


def test_fractional_coefficients_cleared():
    # y^2/4 - 1: roots +-2
    assert first_rational_root([Fraction(-1), Fraction(0), Fraction(1, 4)]) == 2


def test_poly_gcd():
    # gcd of (y^2 - 1) and (y - 1) is y - 1 (monic)
    assert poly_gcd(F(-1, 0, 1), F(-1, 1)) == F(-1, 1)
    # coprime
    assert poly_gcd(F(1, 1), F(2, 1)) == F(1)
    # gcd with zero
    assert poly_gcd([], F(0, 2)) == F(0, 1)
