from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessfib import (GaussianDivisionError, GaussianRational as G, format_rational, gaussian_arith,
                     i_pow, normalize_rational, parse_rational)
from strategies import gaussians, nonzero_gaussians, rationals


def test_i_times_one():
    assert gaussian_arith(G(1), G(0, 1), "mul") == G(0, 1)


def test_i_squared():
    assert gaussian_arith(G(0, 1), G(0, 1), "mul") == G(-1)


def test_division_by_i():
    a = G(Fraction(1, 2), Fraction(1, 2))
    q = gaussian_arith(a, G(0, 1), "div")
    assert q * G(0, 1) == a  # oracle: multiply back
    assert q == G(Fraction(1, 2), Fraction(-1, 2))


def test_division_by_zero():
    with pytest.raises(GaussianDivisionError):
        G(1, 1) / G(0)
    with pytest.raises(ZeroDivisionError):
        G(0).inverse()


def test_unknown_op():
    with pytest.raises(ValueError):
        gaussian_arith(G(1), G(1), "pow")


@pytest.mark.parametrize("m, expected", [(0, G(1)), (1, G(0, 1)), (2, G(-1)), (3, G(0, -1)),
                                         (4, G(1)), (-1, G(0, -1)), (-2, G(-1)), (-3, G(0, 1))])
def test_i_pow(m, expected):
    assert i_pow(m) == expected


def test_i_pow_minus_one_is_reciprocal():
    assert G(0, 1) * i_pow(-1) == 1


@pytest.mark.parametrize("m", range(-8, 9))
def test_i_pow_inverse_pairs(m):
    assert i_pow(m) * i_pow(-m) == G(1)
    assert i_pow(m) == G(0, 1) ** m


def test_parts_are_normalized():
    z = G(Fraction(4, -6), Fraction(10, 5))
    assert (z.re.numerator, z.re.denominator) == (-2, 3)
    assert (z.im.numerator, z.im.denominator) == (2, 1)
    assert G(Fraction(0, 7)).re.denominator == 1


@given(rationals)
def test_normalization_is_idempotent(q):
    once = normalize_rational(q)
    twice = normalize_rational(once)
    assert (twice.numerator, twice.denominator) == (once.numerator, once.denominator)
    assert once.denominator > 0


@pytest.mark.parametrize("q, text", [(Fraction(3), "3"), (Fraction(-1, 2), "-1/2"), (Fraction(0), "0")])
def test_format_rational(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


@pytest.mark.parametrize("z, text", [(G(2), "2"), (G(0, 1), "0+1*i"),
                                     (G(Fraction(1, 2), Fraction(-1, 2)), "1/2-1/2*i")])
def test_gaussian_text(z, text):
    assert str(z) == text
    assert G.parse(text) == z


@given(gaussians)
def test_gaussian_text_roundtrip(z):
    assert G.parse(str(z)) == z


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        G.parse("0.5")
    with pytest.raises(TypeError):
        G.coerce(0.5)


def test_immutable():
    z = G(1)
    with pytest.raises(AttributeError):
        z.re = Fraction(2)


def test_mixed_scalars_and_hash():
    assert G(3) == 3 and 3 == G(3)
    assert G(1, 2) + 1 == G(2, 2)
    assert 1 - G(0, 1) == G(1, -1)
    assert hash(G(5)) == hash(Fraction(5))
    assert 2 / G(0, 2) == G(0, -1)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@given(nonzero_gaussians, gaussians)
def test_inverse(a, b):
    assert a * a.inverse() == 1
    assert (b / a) * a == b
