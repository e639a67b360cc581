# Generalized Fibonacci polynomials and the integer sequences hiding inside them.
#
# F(k, n) is a polynomial in t1..tk built by the order-k recurrence
#     F(k, n+1) = t1 F(k, n) + t2 F(k, n-1) + ... + tk F(k, n-k+1),  F(k, 1) = 1.
from hessfib import fib_poly, miles, pell, van_der_laan, remark1_check

k = 4
for n in range(1, 7):
    print(f"F({k},{n}) =", fib_poly(k, n))

# Every monomial of F(k, n) has weight n-1 when tj counts with weight j.
print("weights of F(4,6):", fib_poly(4, 6).weighted_degree_set())

# Substituting numbers gives classical sequences.
k = 3
print("t = (1,1,1)  ->", [str(fib_poly(k, n).evaluate([1, 1, 1])) for n in range(1, 10)])
print("tribonacci   ->", [miles(k, k + n - 2) for n in range(1, 10)])
print("t = (2,1,1)  ->", [str(fib_poly(k, n).evaluate([2, 1, 1])) for n in range(1, 10)])
print("pell(3,3,n)  ->", [pell(k, k, n) for n in range(1, 10)])

# The Van der Laan specialization lines up one index earlier than it is
# usually written: F(k,n)(0,1,..,1) = v(k,k,n-1).
print("t = (0,1,1)  ->", [str(fib_poly(k, n).evaluate([0, 1, 1])) for n in range(1, 10)])
print("v(3,3,n-1)   ->", [van_der_laan(k, k, n - 1) for n in range(1, 10)])
print("v(3,3,n)     ->", [van_der_laan(k, k, n) for n in range(1, 10)])

for clause in remark1_check(3, 9).clauses:
    print(f"  clause {clause.clause:<12} holds={clause.holds}  failures={clause.failures}")
