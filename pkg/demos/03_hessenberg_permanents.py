# Permanents of the H and L families also equal F(k, n+1).
from hessfib import (FamilySpec, build_matrix, fib_poly, per_hessenberg, per_leibniz_oracle,
                     per_minor_expansion, render_matrix)

H = build_matrix(FamilySpec("H", k=5, n=6))
print(render_matrix(H))
p = per_hessenberg(H)
print("per =", p)
print("equals F(5,7):", p == fib_poly(5, 7))
print("Leibniz sum agrees:", per_leibniz_oracle(H) == p)
print("expansion along column 3 agrees:", per_minor_expansion(H, "column", 3) == p)

L = build_matrix(FamilySpec("L", k=3, n=5))
print()
print(render_matrix(L))
print("per =", per_hessenberg(L))

print("D:", [str(per_hessenberg(build_matrix(FamilySpec("D", 3, n)))) for n in range(1, 10)])
