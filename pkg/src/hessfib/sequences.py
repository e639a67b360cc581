"""Order-k recurrences: Miles, Er, Pell and Van der Laan numbers, and the
generalized Fibonacci polynomials F(k, n) in t1..tk.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .exact import GaussianRational, ONE, ZERO
from .laurent import LaurentPoly


def _check_k(k: int):
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def fib_poly_list(k: int, n_max: int) -> List[LaurentPoly]:
    """``[F(k, 0), F(k, 1), ..., F(k, n_max)]``."""
    _check_k(k)
    t = [LaurentPoly.variable(k, j) for j in range(1, k + 1)]
    zero = LaurentPoly.zero(k)
    out = [zero]
    if n_max >= 1:
        out.append(LaurentPoly.one(k))
    for n in range(2, n_max + 1):
        # F(n) = t1 F(n-1) + ... + tk F(n-k), with F(m) = 0 for m < 1
        acc = zero
        for j in range(1, k + 1):
            if n - j >= 1:
                acc = acc + t[j - 1] * out[n - j]
        out.append(acc)
    return out[: n_max + 1] if n_max >= 0 else []


def fib_poly(k: int, n: int) -> LaurentPoly:
    """Generalized Fibonacci polynomial F(k, n); zero for ``n < 1``."""
    _check_k(k)
    if n < 1:
        return LaurentPoly.zero(k)
    return fib_poly_list(k, n)[n]


def miles(k: int, n: int) -> int:
    """Generalized order-k Fibonacci number f(k, n), ``n >= 1``.

    Starts 0, ..., 0, 1, 1 (ones at n = k-1 and n = k), then each term is
    the sum of the previous k.
    """
    _check_k(k)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    seq = [0] * (k - 2) + [1, 1]
    while len(seq) < n:
        seq.append(sum(seq[-k:]))
    return seq[n - 1]


def k_sequence(weights: Sequence, initial: Callable[[int], object], n: int, zero=0):
    """Term ``n`` of ``x(n) = sum_j weights[j-1] * x(n-j)`` for ``n > 0``.

    ``initial(m)`` supplies the values for ``1-k <= m <= 0``.
    """
    k = len(weights)
    if n < 1 - k:
        raise ValueError(f"index {n} is below the first initial value {1 - k}")
    window = [initial(m) for m in range(1 - k, 1)]
    if n <= 0:
        return window[n + k - 1]
    for _ in range(n):
        nxt = zero
        for j, w in enumerate(weights, start=1):
            nxt = nxt + w * window[-j]
        window = window[1:] + [nxt]
    return window[-1]


def _check_index(k: int, i: int):
    _check_k(k)
    if not 1 <= i <= k:
        raise ValueError(f"sequence index i must lie in 1..{k}, got {i}")


def er(k: int, i: int, n: int, coeffs: Sequence) -> GaussianRational:
    """Term n of the i-th of Er's k sequences with weights ``c1..ck``."""
    _check_index(k, i)
    if len(coeffs) != k:
        raise ValueError(f"expected {k} coefficients, got {len(coeffs)}")
    c = [GaussianRational.coerce(x) for x in coeffs]
    return k_sequence(c, lambda m: ONE if i == 1 - m else ZERO, n, zero=ZERO)


def pell(k: int, i: int, n: int) -> int:
    """Term n of the i-th generalized order-k Pell sequence (weights 2, 1, ..., 1)."""
    _check_index(k, i)
    return k_sequence([2] + [1] * (k - 1), lambda m: int(i == 1 - m), n)


def van_der_laan(k: int, i: int, n: int) -> int:
    """Term n of the i-th generalized order-k Van der Laan sequence (weights 0, 1, ..., 1)."""
    _check_index(k, i)
    return k_sequence([0] + [1] * (k - 1), lambda m: int(i - m == k), n)


# -- specialization identities -----------------------------------------------

@dataclass
class ClauseResult:
    """Outcome of one specialization identity over ``n = 1..n_max``."""

    clause: str
    statement: str
    holds: bool
    failures: List[int] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[int]:
        return self.failures[0] if self.failures else None


@dataclass
class SpecializationReport:
    k: int
    n_max: int
    clauses: List[ClauseResult]

    def __getitem__(self, clause: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause == clause:
                return c
        raise KeyError(clause)


def random_rationals(rng: random.Random, count: int) -> List[Fraction]:
    """Nonzero rationals with small numerators and denominators."""
    out = []
    while len(out) < count:
        num = rng.randint(-9, 9)
        if num:
            out.append(Fraction(num, rng.randint(1, 7)))
    return out


def remark1_check(k: int, n_max: int, seed: int = 0, coeffs: Optional[Sequence] = None) -> SpecializationReport:
    """Check the sequence specializations of F(k, n) for ``n = 1..n_max``.

    Clauses: ``i`` (t = c gives Er's first sequence shifted by one),
    ``ii`` (t = (2,1,...,1) gives Pell), ``iii`` (t = (0,1,...,1) against
    the Van der Laan term at the same index, as usually stated),
    ``iii-shifted`` (the same against index n-1) and ``iv`` (all ones gives
    Miles numbers).  Clause ``iii`` is expected to fail; it is reported,
    not raised.
    """
    _check_k(k)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if coeffs is None:
        coeffs = random_rationals(random.Random(seed), k)
    polys = fib_poly_list(k, n_max)
    pell_point = [2] + [1] * (k - 1)
    vdl_point = [0] + [1] * (k - 1)
    ones = [1] * k

    checks = [
        ("i", f"F(k,n)(c) = er(k,1,n-1,c), c = {[str(c) for c in coeffs]}",
         lambda n, F: F.evaluate(coeffs) == er(k, 1, n - 1, coeffs)),
        ("ii", "F(k,n)(2,1,...,1) = pell(k,k,n)",
         lambda n, F: F.evaluate(pell_point) == pell(k, k, n)),
        ("iii", "F(k,n)(0,1,...,1) = van_der_laan(k,k,n)",
         lambda n, F: F.evaluate(vdl_point) == van_der_laan(k, k, n)),
        ("iii-shifted", "F(k,n)(0,1,...,1) = van_der_laan(k,k,n-1)",
         lambda n, F: F.evaluate(vdl_point) == van_der_laan(k, k, n - 1)),
        ("iv", "F(k,n)(1,...,1) = miles(k,k+n-2)",
         lambda n, F: F.evaluate(ones) == miles(k, k + n - 2)),
    ]
    results = []
    for clause, statement, check in checks:
        failures = [n for n in range(1, n_max + 1) if not check(n, polys[n])]
        results.append(ClauseResult(clause, statement, not failures, failures))
    return SpecializationReport(k, n_max, results)
