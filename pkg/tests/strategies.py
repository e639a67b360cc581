"""Hypothesis strategies and small helpers shared by the test modules."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from hessfib import GaussianRational, HessMatrix, LaurentPoly

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())


@st.composite
def laurent_polys(draw, k=None):
    if k is None:
        k = draw(st.integers(1, 4))
    exps = st.tuples(*[st.integers(-3, 3)] * k)
    terms = draw(st.dictionaries(exps, gaussians, max_size=6))
    return LaurentPoly(k, terms)


@st.composite
def laurent_triples(draw):
    k = draw(st.integers(1, 4))
    return tuple(draw(laurent_polys(k)) for _ in range(3))


def random_gaussian(rng: random.Random, zero_prob: float = 0.2) -> GaussianRational:
    if rng.random() < zero_prob:
        return GaussianRational(0)
    return GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
                            Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


def random_hessenberg_rows(rng: random.Random, n: int, zero_prob: float = 0.2):
    return [[random_gaussian(rng, zero_prob) if s - r <= 1 else GaussianRational(0)
             for s in range(n)] for r in range(n)]


def random_hessenberg(rng: random.Random, n: int, zero_prob: float = 0.2) -> HessMatrix:
    return HessMatrix.from_rows(random_hessenberg_rows(rng, n, zero_prob),
                                GaussianRational(0), GaussianRational(1))
