"""Cost of the banded recursion against the brute-force oracles."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import List, Optional

from .families import DEFAULT_OP, FamilySpec, build_matrix
from .hessenberg import (ORACLE_BOUND, OpCounter, det_cofactor_oracle, det_hessenberg,
                         per_hessenberg, per_leibniz_oracle)


@dataclass
class BenchRow:
    n: int
    recursion_ops: int
    recursion_seconds: float
    oracle_ops: Optional[int] = None
    oracle_seconds: Optional[float] = None


def bench(k: int, n_max: int, family: str = "Q", bound: int = ORACLE_BOUND) -> List[BenchRow]:
    """One row per ``n = 1..n_max``; oracle columns only while ``n <= bound``."""
    op = DEFAULT_OP[family]
    recurse = det_hessenberg if op == "det" else per_hessenberg
    oracle = det_cofactor_oracle if op == "det" else per_leibniz_oracle
    rows = []
    for n in range(1, n_max + 1):
        A = build_matrix(FamilySpec(family, k, n))
        A.to_rows()  # build entries up front so timings cover arithmetic only
        c = OpCounter()
        t0 = time.perf_counter()
        value = recurse(A, counter=c)
        row = BenchRow(n, c.total, time.perf_counter() - t0)
        if n <= bound:
            c = OpCounter()
            t0 = time.perf_counter()
            check = oracle(A, counter=c, bound=bound)
            row.oracle_seconds = time.perf_counter() - t0
            row.oracle_ops = c.total
            if check != value:
                raise AssertionError(f"oracle disagrees with recursion at n={n}")
        rows.append(row)
    return rows


def format_bench(rows: List[BenchRow]) -> str:
    header = f"{'n':>3}  {'rec_ops':>8}  {'rec_ms':>9}  {'oracle_ops':>10}  {'oracle_ms':>10}"
    lines = [header]
    for r in rows:
        o_ops = "-" if r.oracle_ops is None else str(r.oracle_ops)
        o_ms = "-" if r.oracle_seconds is None else f"{r.oracle_seconds * 1e3:.3f}"
        lines.append(f"{r.n:>3}  {r.recursion_ops:>8}  {r.recursion_seconds * 1e3:>9.3f}  {o_ops:>10}  {o_ms:>10}")
    return "\n".join(lines)
