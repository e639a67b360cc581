"""Lower Hessenberg matrices over a commutative ring.

Determinants and permanents are computed by the forward recursions over
leading principal minors.  Brute-force oracles (cofactor expansion, the
Leibniz sum and memoized minor expansion) are kept here for cross-checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

ORACLE_BOUND = 8


class OracleSizeError(ValueError):
    """Matrix too large for a factorial-cost oracle."""


@dataclass
class OpCounter:
    """Tally of ring multiplications and additions (subtractions included)."""

    mul: int = 0
    add: int = 0

    @property
    def total(self) -> int:
        return self.mul + self.add


def _is_zero(x) -> bool:
    return x == 0


class HessMatrix:
    """An ``n x n`` lower Hessenberg matrix with 1-based, lazily built entries.

    ``rule(r, s)`` supplies the entry for positions on or below the
    superdiagonal; everything with ``s - r > 1`` is ``zero`` by construction.
    When ``band`` is given, entries with ``r - s >= band`` are also ``zero``,
    and the recursions skip them.
    """

    def __init__(self, n: int, rule: Callable[[int, int], Any], zero, one, band: Optional[int] = None):
        if n < 0:
            raise ValueError("matrix order must be nonnegative")
        self.n = n
        self.zero = zero
        self.one = one
        self.band = band
        self._rule = rule
        self._cache: Dict[tuple, Any] = {}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], zero=0, one=1, band: Optional[int] = None) -> "HessMatrix":
        rows = [list(row) for row in rows]
        n = len(rows)
        for r, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError("matrix is not square")
            for s, x in enumerate(row, start=1):
                if s - r > 1 and not _is_zero(x):
                    raise ValueError(f"entry ({r}, {s}) above the superdiagonal is nonzero")
                if band is not None and r - s >= band and not _is_zero(x):
                    raise ValueError(f"entry ({r}, {s}) lies outside band {band}")
        return cls(n, lambda r, s: rows[r - 1][s - 1], zero, one, band)

    def entry(self, r: int, s: int):
        if not (1 <= r <= self.n and 1 <= s <= self.n):
            raise IndexError(f"({r}, {s}) outside a {self.n}x{self.n} matrix")
        if s - r > 1 or (self.band is not None and r - s >= self.band):
            return self.zero
        key = (r, s)
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = self._rule(r, s)
            return value

    def __getitem__(self, rs):
        return self.entry(*rs)

    def to_rows(self) -> List[List[Any]]:
        return [[self.entry(r, s) for s in range(1, self.n + 1)] for r in range(1, self.n + 1)]

    def leading(self, m: int) -> "HessMatrix":
        """The leading principal ``m x m`` submatrix."""
        if not 0 <= m <= self.n:
            raise ValueError(f"cannot take a {m}x{m} leading block of a {self.n}x{self.n} matrix")
        return HessMatrix(m, self.entry, self.zero, self.one, self.band)

    def map(self, fn: Callable[[Any], Any], zero, one) -> "HessMatrix":
        """Apply ``fn`` entrywise, e.g. to specialize symbolic entries."""
        return HessMatrix(self.n, lambda r, s: fn(self.entry(r, s)), zero, one, self.band)


def _hessenberg_minors(A: HessMatrix, signed: bool, counter: Optional[OpCounter], truncate: bool) -> List[Any]:
    minors = [A.one]
    for n in range(1, A.n + 1):
        acc = A.entry(n, n) * minors[n - 1]
        if counter is not None:
            counter.mul += 1
        lo = 1
        if truncate and A.band is not None:
            lo = max(1, n - A.band + 1)
        prod = None
        for r in range(n - 1, lo - 1, -1):
            # prod = a[r, r+1] * ... * a[n-1, n], extended one factor per step
            sup = A.entry(r, r + 1)
            prod = sup if prod is None else sup * prod
            term = A.entry(n, r) * prod * minors[r - 1]
            if counter is not None:
                counter.mul += 2 if r == n - 1 else 3
                counter.add += 1
            if signed and (n - r) % 2:
                acc = acc - term
            else:
                acc = acc + term
        minors.append(acc)
    return minors


def det_hessenberg(A: HessMatrix, *, counter: Optional[OpCounter] = None, truncate: bool = True):
    """Determinant by the leading-minor recursion; ``det`` of the 0x0 matrix is ``A.one``.

    With ``truncate`` and a known band, sums skip the entries outside the band.
    """
    return _hessenberg_minors(A, True, counter, truncate)[-1]


def per_hessenberg(A: HessMatrix, *, counter: Optional[OpCounter] = None, truncate: bool = True):
    """Permanent by the same recursion with every sign taken positive."""
    return _hessenberg_minors(A, False, counter, truncate)[-1]


def det_minors(A: HessMatrix, **kw) -> List[Any]:
    """``[det(A_0), det(A_1), ..., det(A_n)]`` for the leading principal blocks."""
    return _hessenberg_minors(A, True, kw.get("counter"), kw.get("truncate", True))


def per_minors(A: HessMatrix, **kw) -> List[Any]:
    return _hessenberg_minors(A, False, kw.get("counter"), kw.get("truncate", True))


# -- oracles ----------------------------------------------------------------

def _as_rows(A, one):
    if isinstance(A, HessMatrix):
        return A.to_rows(), A.one
    rows = [list(row) for row in A]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix is not square")
    return rows, (1 if one is None else one)


def _check_bound(n: int, bound: int):
    if n > bound:
        raise OracleSizeError(f"order {n} exceeds the oracle bound {bound}")


def det_cofactor_oracle(A, *, one=None, bound: int = ORACLE_BOUND, counter: Optional[OpCounter] = None):
    """Determinant by recursive first-row Laplace expansion (zero entries skipped)."""
    rows, one = _as_rows(A, one)
    _check_bound(len(rows), bound)

    def expand(rows):
        if not rows:
            return one
        total = None
        for s, x in enumerate(rows[0]):
            if _is_zero(x):
                continue
            minor = [row[:s] + row[s + 1:] for row in rows[1:]]
            term = x * expand(minor)
            if counter is not None:
                counter.mul += 1
            if total is None:
                total = -term if s % 2 else term
            else:
                total = total - term if s % 2 else total + term
                if counter is not None:
                    counter.add += 1
        return one - one if total is None else total

    return expand(rows)


def per_leibniz_oracle(A, *, one=None, bound: int = ORACLE_BOUND, counter: Optional[OpCounter] = None):
    """Permanent as the sum over all permutations of ``prod a[i, sigma(i)]``."""
    rows, one = _as_rows(A, one)
    n = len(rows)
    _check_bound(n, bound)
    total = one - one
    for sigma in itertools.permutations(range(n)):
        prod = one
        for i in range(n):
            x = rows[i][sigma[i]]
            if _is_zero(x):
                prod = None
                break
            prod = x * prod
            if counter is not None:
                counter.mul += 1
        if prod is not None:
            total = total + prod
            if counter is not None:
                counter.add += 1
    return total


def per_minor_expansion(A, axis: str = "row", index: int = 1, *, one=None, bound: int = ORACLE_BOUND):
    """Permanent by expansion along row or column ``index`` (1-based).

    The sub-permanents of the minors are themselves expanded along their
    first row, memoized on the set of columns still available.
    """
    rows, one = _as_rows(A, one)
    n = len(rows)
    _check_bound(n, bound)
    if axis not in ("row", "column"):
        raise ValueError(f"axis must be 'row' or 'column', not {axis!r}")
    if not 1 <= index <= n:
        raise ValueError(f"index {index} outside 1..{n}")
    if axis == "column":
        rows = [list(col) for col in zip(*rows)]
    zero = one - one
    memo: Dict[tuple, Any] = {}

    def per(row_ids: tuple, col_ids: tuple):
        if not row_ids:
            return one
        key = (row_ids, col_ids)
        if key in memo:
            return memo[key]
        head, rest = row_ids[0], row_ids[1:]
        total = zero
        for pos, c in enumerate(col_ids):
            x = rows[head][c]
            if _is_zero(x):
                continue
            total = total + x * per(rest, col_ids[:pos] + col_ids[pos + 1:])
        memo[key] = total
        return total

    i = index - 1
    others = tuple(r for r in range(n) if r != i)
    cols = tuple(range(n))
    total = zero
    for c in cols:
        x = rows[i][c]
        if _is_zero(x):
            continue
        total = total + x * per(others, cols[:c] + cols[c + 1:])
    return total
