"""Sparse multivariate Laurent polynomials over Q(i).

A :class:`LaurentPoly` lives in the ring Q(i)[t1^±1, ..., tk^±1].  Terms are
stored as a mapping from exponent tuples (one signed entry per variable) to
nonzero :class:`~hessfib.exact.GaussianRational` coefficients.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from .exact import GaussianRational, ZERO, format_rational, parse_rational

MultiIndex = Tuple[int, ...]


class DimensionError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


class EvaluationError(ZeroDivisionError):
    """Zero substituted for a variable that carries a negative exponent."""


def _grlex_key(exps: MultiIndex):
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable Laurent polynomial in ``t1..tk``.

    Scalars (``int``, ``Fraction``, ``GaussianRational``) are promoted to
    constants in arithmetic and comparisons.
    """

    __slots__ = ("k", "_terms", "_hash")

    def __init__(self, k: int, terms: Mapping[Sequence[int], object] | None = None):
        if k < 1:
            raise ValueError("a Laurent polynomial needs at least one variable")
        clean: Dict[MultiIndex, GaussianRational] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != k:
                raise DimensionError(f"exponent vector {exps} has length {len(exps)}, expected {k}")
            coeff = GaussianRational.coerce(coeff)
            if exps in clean:
                coeff = clean[exps] + coeff
            if coeff.is_zero():
                clean.pop(exps, None)
            else:
                clean[exps] = coeff
        self.k = k
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, k: int, terms: Dict[MultiIndex, GaussianRational]) -> "LaurentPoly":
        # trusted constructor: keys have length k, no zero coefficients
        obj = cls.__new__(cls)
        obj.k = k
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, k: int) -> "LaurentPoly":
        return cls(k)

    @classmethod
    def constant(cls, k: int, value) -> "LaurentPoly":
        return cls(k, {(0,) * k: value})

    @classmethod
    def one(cls, k: int) -> "LaurentPoly":
        return cls.constant(k, 1)

    @classmethod
    def variable(cls, k: int, j: int, power: int = 1) -> "LaurentPoly":
        """The monomial ``tj**power`` (``j`` is 1-based)."""
        if not 1 <= j <= k:
            raise DimensionError(f"variable t{j} does not exist in a ring with k={k}")
        exps = [0] * k
        exps[j - 1] = power
        return cls(k, {tuple(exps): 1})

    # -- access -----------------------------------------------------------
    @property
    def terms(self) -> Mapping[MultiIndex, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[MultiIndex, GaussianRational]]:
        """Terms in canonical order: total degree descending, then exponents descending."""
        return iter(sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(exps), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0,) * self.k, ZERO)

    def is_true_polynomial(self) -> bool:
        return all(e >= 0 for exps in self._terms for e in exps)

    def weighted_degree_set(self) -> set:
        """Weights ``sum(j * e_j)`` of the terms, ``tj`` having weight ``j``."""
        return {sum((j + 1) * e for j, e in enumerate(exps)) for exps in self._terms}

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(
            c.im == 0 and c.re.denominator == 1 and c.re >= 0 for c in self._terms.values()
        )

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.k != self.k:
                raise DimensionError(f"cannot combine polynomials in {self.k} and {other.k} variables")
            return other
        return LaurentPoly.constant(self.k, GaussianRational.coerce(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[exps]
                else:
                    out[exps] = s
        return LaurentPoly._raw(self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.k, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[MultiIndex, GaussianRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(exps)
                out[exps] = c if s is None else s + c
        return LaurentPoly._raw(self.k, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (exps, c), = self._terms.items()
            return LaurentPoly._raw(self.k, {tuple(e * exponent for e in exps): c ** exponent})
        result = LaurentPoly.one(self.k)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, assignment: Sequence) -> GaussianRational:
        """Substitute ``assignment[j-1]`` for ``tj`` and return the exact value."""
        if len(assignment) != self.k:
            raise DimensionError(f"expected {self.k} values, got {len(assignment)}")
        values = [GaussianRational.coerce(v) for v in assignment]
        total = ZERO
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e < 0 and v.is_zero():
                    raise EvaluationError("zero substituted into a negative exponent")
                if e:
                    term = term * v ** e
            total = total + term
        return total

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.k == other.k and self._terms == other._terms
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, frozenset(self._terms.items())))
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for n, (exps, c) in enumerate(self.items()):
            negative, body = _format_term(exps, c)
            if n == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly(k={self.k}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, k: int) -> "LaurentPoly":
        """Parse the text form produced by ``str`` (and ordinary variations of it)."""
        return _Parser(text, k).parse()

    # -- JSON -------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [
                {"exps": list(exps), "re": format_rational(c.re), "im": format_rational(c.im)}
                for exps, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        k = int(data["k"])
        terms: Dict[MultiIndex, GaussianRational] = {}
        for term in data["terms"]:
            exps = tuple(int(e) for e in term["exps"])
            if exps in terms:
                raise ValueError(f"duplicate monomial {exps} in JSON polynomial")
            terms[exps] = GaussianRational(parse_rational(term["re"]), parse_rational(term.get("im", "0")))
        return cls(k, terms)


def monomial(k: int, coeff, exps: Sequence[int]) -> LaurentPoly:
    if len(exps) != k:
        raise DimensionError(f"exponent vector has length {len(exps)}, expected {k}")
    return LaurentPoly(k, {tuple(exps): coeff})


def poly_ring_ops(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    if p.k != q.k:
        raise DimensionError(f"cannot combine polynomials in {p.k} and {q.k} variables")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def _format_coefficient(c: GaussianRational) -> Tuple[bool, str]:
    """Split a coefficient into (is_negative, text of its magnitude)."""
    if c.im == 0:
        return c.re < 0, format_rational(abs(c.re))
    if c.re == 0:
        mag = abs(c.im)
        return c.im < 0, "i" if mag == 1 else f"{format_rational(mag)}*i"
    return False, f"({c})"


def _format_term(exps: MultiIndex, c: GaussianRational) -> Tuple[bool, str]:
    negative, coeff = _format_coefficient(c)
    factors = []
    for j, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"t{j}")
        elif e:
            factors.append(f"t{j}^{e}")
    if not factors:
        return negative, coeff
    if coeff == "1":
        return negative, "*".join(factors)
    return negative, "*".join([coeff] + factors)


class _Parser:
    """Recursive-descent parser for ``+ - * ^ ( )`` over numbers, ``i`` and ``tN``."""

    _token = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(t\d+)|(i)|(\^-?\d+)|([-+*()]))")

    def __init__(self, text: str, k: int):
        self.k = k
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._token.match(text, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"unexpected input at {text[pos:]!r}")
            self.tokens.append(m.group(m.lastindex))
            pos = m.end()
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input {self.tokens[self.pos:]}")
        return p

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = self.product() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            term = self.product()
            acc = acc + term if op == "+" else acc - term
        return acc

    def product(self) -> LaurentPoly:
        acc = self.factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> LaurentPoly:
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of input")
        if tok == "(":
            base = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
        elif tok == "-":
            return -self.factor()
        elif tok == "i":
            base = LaurentPoly.constant(self.k, GaussianRational(0, 1))
        elif tok.startswith("t"):
            base = LaurentPoly.variable(self.k, int(tok[1:]))
        elif tok[0].isdigit():
            base = LaurentPoly.constant(self.k, Fraction(tok))
        else:
            raise ValueError(f"unexpected token {tok!r}")
        nxt = self.peek()
        if nxt is not None and nxt.startswith("^"):
            self.take()
            base = base ** int(nxt[1:])
        return base
