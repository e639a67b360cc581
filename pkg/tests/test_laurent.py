import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessfib import (DimensionError, EvaluationError, GaussianRational as G, LaurentPoly,
                     monomial, poly_ring_ops)
from strategies import laurent_polys, laurent_triples, nonzero_rationals


def t(k, j, power=1):
    return LaurentPoly.variable(k, j, power)


def test_cancellation_inside_products():
    k = 2
    p = monomial(k, G(0, 1), [0, 1])
    q = monomial(k, G(0, -1), [0, -1])
    assert poly_ring_ops(p, q, "mul") == LaurentPoly.one(k)


def test_add_like_terms():
    assert poly_ring_ops(t(2, 1), t(2, 1), "add") == monomial(2, 2, [1, 0])


def test_difference_of_squares():
    k = 2
    got = poly_ring_ops(t(k, 1) + t(k, 2), t(k, 1) - t(k, 2), "mul")
    assert got == t(k, 1) ** 2 - t(k, 2) ** 2
    # oracle: numeric evaluation at random points
    rng = random.Random(3)
    for _ in range(20):
        x, y = Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        assert got.evaluate([x, y]) == (x + y) * (x - y)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        poly_ring_ops(t(2, 1), t(3, 1), "add")
    with pytest.raises(DimensionError):
        t(2, 1) * t(3, 1)
    with pytest.raises(DimensionError):
        monomial(3, 1, [1, 0])


@pytest.mark.parametrize("coeff, exps, text", [
    (1, [0, 0, 0], "1"),
    (G(0, 1), [0, 1, 0], "i*t2"),
    (0, [1, 0, 0], "0"),
])
def test_monomial(coeff, exps, text):
    p = monomial(3, coeff, exps)
    assert str(p) == text
    assert len(p) == (0 if coeff == 0 else 1)


def test_evaluate_examples():
    assert (t(2, 2) + t(2, 1) ** 2).evaluate([1, 1]) == 2
    assert LaurentPoly.one(3).evaluate([5, 0, Fraction(1, 2)]) == 1
    p = LaurentPoly.parse("t4 + 2*t1*t3 + t2^2 + t1^4 + 3*t1^2*t2", 4)
    assert p.evaluate([1, 1, 1, 1]) == sum(c for _, c in p.items()) == 8


def test_evaluate_rejects_zero_into_negative_power():
    p = monomial(3, 1, [0, -2, 1])
    with pytest.raises(EvaluationError):
        p.evaluate([1, 0, 1])
    assert p.evaluate([0, 2, 3]) == Fraction(3, 4)


def test_is_true_polynomial():
    assert not monomial(3, 1, [0, -2, 1]).is_true_polynomial()
    assert (t(2, 1) ** 3 + t(2, 2)).is_true_polynomial()
    assert LaurentPoly.zero(3).is_true_polynomial()


def test_weighted_degree_set():
    p = LaurentPoly.parse("t4 + 2*t1*t3 + t2^2 + t1^4 + 3*t1^2*t2", 4)
    assert p.weighted_degree_set() == {4}
    assert LaurentPoly.one(2).weighted_degree_set() == {0}
    assert (t(2, 1) + t(2, 2)).weighted_degree_set() == {1, 2}


def test_canonical_order():
    p = LaurentPoly.parse("t4 + 2*t1*t3 + t2^2 + t1^4 + 3*t1^2*t2", 4)
    assert str(p) == "t1^4 + 3*t1^2*t2 + 2*t1*t3 + t2^2 + t4"


@pytest.mark.parametrize("text", ["-t2^-2*t3", "-i*t2^-3*t4", "(1/2-3*i)*t1 - 2/3", "i*t2 - i", "0", "-7"])
def test_text_roundtrip_examples(text):
    p = LaurentPoly.parse(text, 4)
    assert str(p) == text
    assert LaurentPoly.parse(str(p), 4) == p


def test_parse_errors():
    for bad in ["", "t1 +", "t1 * * t2", "(t1", "t1 t2", "t1 ^ x"]:
        with pytest.raises(ValueError):
            LaurentPoly.parse(bad, 2)
    with pytest.raises(DimensionError):
        LaurentPoly.parse("t3", 2)


def test_negative_power_of_monomial():
    assert monomial(2, 2, [1, -1]) ** -2 == monomial(2, Fraction(1, 4), [-2, 2])
    with pytest.raises(ValueError):
        (t(2, 1) + 1) ** -1


def test_json_roundtrip_example():
    p = LaurentPoly.parse("(1/2-3*i)*t1*t2^-1 + 4", 2)
    data = p.to_json()
    assert data == {"k": 2, "terms": [{"exps": [1, -1], "re": "1/2", "im": "-3"},
                                      {"exps": [0, 0], "re": "4", "im": "0"}]}
    assert LaurentPoly.from_json(json.loads(json.dumps(data))) == p


def test_json_rejects_duplicates():
    with pytest.raises(ValueError):
        LaurentPoly.from_json({"k": 1, "terms": [{"exps": [1], "re": "1", "im": "0"}] * 2})


def test_scalar_promotion():
    p = t(2, 1)
    assert p + 1 == 1 + p
    assert 2 * p == p + p
    assert LaurentPoly.constant(2, 3) == 3
    assert p != 3


@given(laurent_polys())
def test_text_and_json_roundtrip(p):
    assert LaurentPoly.parse(str(p), p.k) == p
    assert LaurentPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


@given(laurent_triples())
@settings(max_examples=150)
def test_ring_axioms(triple):
    p, q, r = triple
    k = p.k
    zero, one = LaurentPoly.zero(k), LaurentPoly.one(k)
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + zero == p and p * one == p
    assert p - p == zero
    assert all(not c.is_zero() for c in (p * q).terms.values())


@given(st.data())
@settings(max_examples=100)
def test_evaluate_is_a_homomorphism(data):
    k = data.draw(st.integers(1, 4))
    p = data.draw(laurent_polys(k))
    q = data.draw(laurent_polys(k))
    point = data.draw(st.lists(nonzero_rationals, min_size=k, max_size=k))
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


@given(laurent_polys())
def test_equality_is_term_equality(p):
    rebuilt = LaurentPoly(p.k, dict(reversed(list(p.terms.items()))))
    assert rebuilt == p and hash(rebuilt) == hash(p)
    if p:
        exps, c = next(p.items())
        assert LaurentPoly(p.k, {**p.terms, exps: c + 1}) != p
