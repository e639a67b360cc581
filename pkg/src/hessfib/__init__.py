"""Determinantal and permanental representations of generalized Fibonacci
polynomials, computed and checked in exact arithmetic."""

from .exact import (BigRational, GaussianDivisionError, GaussianRational, format_rational,
                    gaussian_arith, i_pow, normalize_rational, parse_rational)
from .families import (DEFAULT_OP, FAMILIES, FamilySpec, build_matrix, entry_B, entry_C, entry_D,
                       entry_H, entry_L, entry_M, entry_Q, evaluate_family, render_matrix, specialize)
from .hessenberg import (ORACLE_BOUND, HessMatrix, OpCounter, OracleSizeError, det_cofactor_oracle,
                         det_hessenberg, det_minors, per_hessenberg, per_leibniz_oracle,
                         per_minor_expansion, per_minors)
from .laurent import DimensionError, EvaluationError, LaurentPoly, monomial, poly_ring_ops
from .sequences import er, fib_poly, fib_poly_list, miles, pell, remark1_check, van_der_laan
from .verify import CaseRecord, VerifyReport, run_verify

__version__ = "0.1.0"
