# Determinants of the Q and B families equal F(k, n+1).
#
# Entries carry negative powers of t2 (Laurent polynomials); they all cancel
# in the determinant.
from hessfib import FamilySpec, build_matrix, det_hessenberg, det_cofactor_oracle, fib_poly, render_matrix

spec = FamilySpec("Q", k=6, n=4)
Q = build_matrix(spec)
print(render_matrix(Q))
d = det_hessenberg(Q)
print("det =", d)
print("F(6,5) =", fib_poly(6, 5))
print("true polynomial:", d.is_true_polynomial())

B = build_matrix(FamilySpec("B", k=4, n=5))
print()
print(render_matrix(B))
print("det =", det_hessenberg(B))
# brute-force cofactor expansion agrees
print("cofactor oracle agrees:", det_cofactor_oracle(B) == det_hessenberg(B))

# With every tj = 1 the numeric families C and M give order-k Fibonacci numbers.
for family in ("C", "M"):
    print(family, [str(det_hessenberg(build_matrix(FamilySpec(family, 3, n)))) for n in range(1, 10)])
