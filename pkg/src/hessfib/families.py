"""The symbolic matrix families Q, B, H, L and their numeric cousins C, M, D.

Every family is a banded lower Hessenberg matrix whose ``(r, s)`` entry
depends only on ``m = r - s``.  For ``-1 <= m < k`` the symbolic families
carry ``t_{m+1} / t2**m`` times a power of ``i`` (with ``t0 = 1``, so the
superdiagonal ``m = -1`` holds a multiple of ``t2``); all other entries are 0.

    Q: i**|m| * t_{m+1} / t2**m          (determinant family)
    B: -t2 on the superdiagonal, t_{m+1} / t2**m below  (determinant family)
    H: i**m * t_{m+1} / t2**m            (permanent family, i**-1 = -i)
    L: t_{m+1} / t2**m                   (permanent family)

C, M and D are Q, B and L with every ``tj = 1``, built directly over Q(i).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .exact import GaussianRational, ONE, ZERO, format_rational, i_pow
from .hessenberg import HessMatrix, det_hessenberg, per_hessenberg
from .laurent import LaurentPoly

SYMBOLIC_FAMILIES = ("Q", "B", "H", "L")
NUMERIC_FAMILIES = ("C", "M", "D")
FAMILIES = SYMBOLIC_FAMILIES + NUMERIC_FAMILIES

# which of det/per each family represents a Fibonacci quantity through
DEFAULT_OP = {"Q": "det", "B": "det", "C": "det", "M": "det", "H": "per", "L": "per", "D": "per"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")

    @property
    def symbolic(self) -> bool:
        return self.family in SYMBOLIC_FAMILIES


def _band_entry(k: int, m: int, coeff) -> LaurentPoly:
    """``coeff * t_{m+1} * t2**(-m)`` in k variables, reading ``t0`` as 1."""
    exps = [0] * k
    if m >= 0:
        exps[m] += 1
    exps[1] -= m
    return LaurentPoly(k, {tuple(exps): coeff})


def entry_Q(k: int, r: int, s: int) -> LaurentPoly:
    m = r - s
    if not -1 <= m < k:
        return LaurentPoly.zero(k)
    return _band_entry(k, m, i_pow(abs(m)))


def entry_B(k: int, r: int, s: int) -> LaurentPoly:
    m = r - s
    if m == -1:
        return _band_entry(k, m, -1)
    if not 0 <= m < k:
        return LaurentPoly.zero(k)
    return _band_entry(k, m, 1)


def entry_H(k: int, r: int, s: int) -> LaurentPoly:
    m = r - s
    if not -1 <= m < k:
        return LaurentPoly.zero(k)
    return _band_entry(k, m, i_pow(m))


def entry_L(k: int, r: int, s: int) -> LaurentPoly:
    m = r - s
    if not -1 <= m < k:
        return LaurentPoly.zero(k)
    return _band_entry(k, m, 1)


def entry_C(k: int, r: int, s: int) -> GaussianRational:
    m = r - s
    return i_pow(abs(m)) if -1 <= m < k else ZERO


def entry_M(k: int, r: int, s: int) -> GaussianRational:
    m = r - s
    if m == -1:
        return GaussianRational(-1)
    return ONE if 0 <= m < k else ZERO


def entry_D(k: int, r: int, s: int) -> GaussianRational:
    return ONE if -1 <= r - s < k else ZERO


ENTRY_RULES: Dict[str, Callable[[int, int, int], object]] = {
    "Q": entry_Q, "B": entry_B, "H": entry_H, "L": entry_L,
    "C": entry_C, "M": entry_M, "D": entry_D,
}


def build_matrix(spec: FamilySpec, rules: Optional[Dict[str, Callable]] = None) -> HessMatrix:
    """Build the ``n x n`` member of a family.

    ``rules`` overrides entry rules per family name; it exists so tests can
    feed deliberately broken families through the verification harness.
    """
    rule = (rules or {}).get(spec.family, ENTRY_RULES[spec.family])
    k = spec.k
    if spec.symbolic:
        zero, one = LaurentPoly.zero(k), LaurentPoly.one(k)
    else:
        zero, one = ZERO, ONE
    return HessMatrix(spec.n, lambda r, s: rule(k, r, s), zero, one, band=k)


def specialize(A: HessMatrix, assignment) -> HessMatrix:
    """Substitute numbers for ``t1..tk`` in every entry of a symbolic matrix."""
    values = list(assignment)
    return A.map(lambda p: p.evaluate(values), ZERO, ONE)


def evaluate_family(spec: FamilySpec, op: Optional[str] = None, rules=None):
    """``det`` or ``per`` (default: the family's own) of a family member."""
    op = op or DEFAULT_OP[spec.family]
    A = build_matrix(spec, rules)
    if op == "det":
        return det_hessenberg(A)
    if op == "per":
        return per_hessenberg(A)
    raise ValueError(f"op must be 'det' or 'per', not {op!r}")


# -- rendering --------------------------------------------------------------

def format_entry(x) -> str:
    if isinstance(x, LaurentPoly):
        return str(x)
    x = GaussianRational.coerce(x)
    return str(x)


def render_matrix(A: HessMatrix) -> str:
    """Rows of right-aligned entries in canonical text form."""
    cells = [[format_entry(x) for x in row] for row in A.to_rows()]
    if not cells:
        return ""
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def element_to_json(x) -> dict:
    if isinstance(x, LaurentPoly):
        return x.to_json()
    x = GaussianRational.coerce(x)
    return {"re": format_rational(x.re), "im": format_rational(x.im)}


def element_from_json(data: dict):
    if "terms" in data:
        return LaurentPoly.from_json(data)
    return GaussianRational(data["re"], data.get("im", "0"))


def matrix_to_json(spec: FamilySpec, A: HessMatrix) -> dict:
    return {
        "family": spec.family,
        "k": spec.k,
        "n": spec.n,
        "entries": [[element_to_json(x) for x in row] for row in A.to_rows()],
    }


def matrix_json_text(spec: FamilySpec, A: HessMatrix) -> str:
    return json.dumps(matrix_to_json(spec, A), indent=2)


def entries_from_json(data: dict) -> List[List[object]]:
    return [[element_from_json(x) for x in row] for row in data["entries"]]
