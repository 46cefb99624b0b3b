"""Parser: exactness, grammar corners, reserved names."""

from fractions import Fraction

import pytest

from abelint.errors import ParseError
from abelint.parsing import (parse_complex, parse_number, parse_operator,
                             parse_poly)
from abelint.polynomials import MultiPoly
from abelint.qi import GaussianRational


def test_decimals_are_exact():
    p = parse_poly("0.125*x1 + 0.2", ("x1",))
    assert p.terms[(1,)] == Fraction(1, 8)
    assert p.terms[(0,)] == Fraction(1, 5)


def test_implicit_multiplication():
    a = parse_poly("2x1(x1+1)", ("x1",))
    b = parse_poly("2*x1^2 + 2*x1", ("x1",))
    assert (a - b).is_zero()


def test_gaussian_constants():
    c = parse_number("3/4 + 2i")
    assert c == GaussianRational(Fraction(3, 4), Fraction(2))
    assert parse_complex("1 - 0.5i") == 1 - 0.5j


def test_operator_coefficients():
    D = parse_operator("(t^2-1)*D^2 + t*D - 1")
    assert D.order == 2
    t = MultiPoly.var("t")
    one = MultiPoly.const(Fraction(1), ("t",))
    assert D.coeffs[0] == t * t - one
    assert D.coeffs[1] == t
    assert D.coeffs[2] == -one


def test_reserved_D():
    with pytest.raises(ParseError):
        parse_poly("D + 1", ("D",))
    with pytest.raises(ParseError):
        parse_poly("x1 + D", ("x1",))


def test_parse_errors():
    for bad in ["x1 +", "(x1", "x1^x1", "x1^-2", "1/x1", "@", "x1//2"]:
        with pytest.raises(ParseError):
            parse_poly(bad, ("x1",))
    with pytest.raises(ParseError):
        parse_operator("0*D")


def test_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("x1 + y", ("x1",))
