import random
from fractions import Fraction

import pytest

from jetforge.algebra import MultiPoly, format_poly
from jetforge.errors import ParseError
from jetforge.jets import enumerate_multiindices
from jetforge.parser import (
    parse_operator,
    parse_pdo,
    parse_point,
    parse_polynomial,
)
from jetforge.scalar import Scalar
from jetforge.symbols import (
    GeneralSymbol,
    LinearSymbol,
    format_general,
    format_operator,
    lewy_symbol,
)


# -- polynomials -------------------------------------------------------------

def test_parse_simple_terms():
    assert parse_polynomial("3/2*x1^2*x2") == MultiPoly(
        2, {(2, 1): Fraction(3, 2)}
    )
    assert parse_polynomial("i*x3") == MultiPoly(3, {(0, 0, 1): Scalar(0, 1)})
    assert parse_polynomial("-1") == MultiPoly.constant(1, -1)


def test_parse_sums_and_parens():
    p = parse_polynomial("(x1 + 1)^2 - x1^2 - 2*x1")
    assert p == MultiPoly.constant(1, 1)


def test_parse_unary_minus_binds_product():
    assert parse_polynomial("-2*x1") == MultiPoly(1, {(1,): -2})
    assert parse_polynomial("-x1^2") == MultiPoly(1, {(2,): -1})


def test_parse_complex_coefficients():
    p = parse_polynomial("(1 - 2*i)*x1")
    assert p == MultiPoly(1, {(1,): Scalar(1, -2)})


def test_parse_dim_override():
    p = parse_polynomial("x1", dim=3)
    assert p.num_vars == 3


def test_polynomial_rejects_operators():
    with pytest.raises(ParseError):
        parse_polynomial("d[1]")


def test_polynomial_round_trip_random():
    rng = random.Random(53)
    for _ in range(40):
        m = rng.randint(1, 3)
        alphas = enumerate_multiindices(m, 3)
        p = MultiPoly(
            m,
            {
                rng.choice(alphas): Scalar(
                    Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                    Fraction(rng.randint(-2, 2)),
                )
                for _ in range(rng.randint(1, 4))
            },
        )
        assert parse_polynomial(format_poly(p), dim=m) == p


# -- linear operators --------------------------------------------------------

def test_parse_lewy():
    text = "d[1,0,0] + i*d[0,1,0] + (-2*i*x1 + 2*x2)*d[0,0,1]"
    assert parse_operator(text) == lewy_symbol()


def test_parse_coefficient_monomial():
    sym = parse_operator("x1^2*d[1]")
    assert sym == LinearSymbol(1, 1, {(1,): MultiPoly.monomial(1, (2,))})


def test_parse_unterminated_slot():
    with pytest.raises(ParseError) as err:
        parse_operator("d[1")
    assert err.value.line == 1
    assert err.value.expected


def test_parse_error_has_location():
    with pytest.raises(ParseError) as err:
        parse_operator("d[1,0] + @")
    assert err.value.line == 1
    assert err.value.column == 10


def test_operator_terms_must_carry_d():
    with pytest.raises(ParseError):
        parse_operator("x1 + d[1]")


def test_operator_rejects_nonlinear_d():
    with pytest.raises(ParseError):
        parse_operator("d[1]*d[1]")
    with pytest.raises(ParseError):
        parse_operator("d[1]^2")


def test_operator_rejects_mixed_arities():
    with pytest.raises(ParseError):
        parse_operator("d[1] + d[1,0]")


def test_operator_rejects_mixed_atoms():
    with pytest.raises(ParseError):
        parse_operator("d[1] + y[1]")


def test_operator_variable_outside_dimension():
    with pytest.raises(ParseError):
        parse_operator("x2*d[1]")


def test_declared_order_padding():
    sym = parse_operator("d[1]", order=3)
    assert sym.order == 3
    with pytest.raises(ParseError):
        parse_operator("d[2]", order=1)


def test_minus_separates_terms():
    sym = parse_operator("d[1] - x1*d[0]")
    assert sym == LinearSymbol(
        1,
        1,
        {(1,): MultiPoly.constant(1, 1), (0,): MultiPoly(1, {(1,): -1})},
    )


def test_operator_round_trip_random():
    rng = random.Random(59)
    for _ in range(40):
        m = rng.randint(1, 3)
        r = rng.randint(0, 2)
        slots = enumerate_multiindices(m, r)
        coeff_alphas = enumerate_multiindices(m, 2)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            coeff = MultiPoly(
                m,
                {
                    rng.choice(coeff_alphas): Scalar(
                        Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-2, 2))
                    )
                    for _ in range(rng.randint(1, 2))
                },
            )
            if coeff:
                terms[rng.choice(slots)] = coeff
        if not terms:
            continue
        sym = LinearSymbol(m, r, terms)
        assert parse_operator(format_operator(sym), order=r) == sym


# -- general symbols ---------------------------------------------------------

def test_parse_square_symbol():
    gsym = parse_operator("y[1]^2")
    assert gsym == GeneralSymbol(1, 1, MultiPoly(3, {(0, 0, 2): 1}))


def test_parse_general_with_base_variables():
    gsym = parse_operator("x1*y[0,1] + y[1,0]^2 - 3")
    assert isinstance(gsym, GeneralSymbol)
    assert gsym.base_dim == 2 and gsym.order == 1
    assert parse_operator(format_general(gsym)) == gsym


def test_general_round_trip():
    gsym = parse_operator("y[2]^2 + i*y[0] + x1^3")
    assert parse_operator(format_general(gsym)) == gsym


# -- points ------------------------------------------------------------------

def test_parse_point():
    assert parse_point("0,1/2,-3") == (Fraction(0), Fraction(1, 2), Fraction(-3))


def test_parse_point_rejects_garbage():
    with pytest.raises(ParseError):
        parse_point("1,two")


# -- .pdo files --------------------------------------------------------------

LEWY_PDO = """\
# the classic example on R^3
dim 3 order 1
d[1,0,0] + i*d[0,1,0] + (-2*i*x1 + 2*x2)*d[0,0,1]
"""


def test_parse_pdo():
    assert parse_pdo(LEWY_PDO) == lewy_symbol()


def test_parse_pdo_multiline_operator():
    text = "dim 1 order 2\nd[2]\n + x1*d[1]\n"
    sym = parse_pdo(text)
    assert sym == LinearSymbol(
        1,
        2,
        {(2,): MultiPoly.constant(1, 1), (1,): MultiPoly.variable(1, 1)},
    )


def test_parse_pdo_bad_header():
    with pytest.raises(ParseError):
        parse_pdo("order 1 dim 3\nd[1,0,0]")


def test_parse_pdo_empty_body_rejected():
    with pytest.raises(ParseError):
        parse_pdo("dim 1 order 1\n")
