# Running the full identity harness and comparing recursion cost with brute force.
from hessfib import run_verify
from hessfib.bench import bench, format_bench

report = run_verify(k_min=2, k_max=4, n_max=6)
print(report.to_text())
print("exit status:", report.exit_status)

# The recursion costs O(n k) ring operations; the permanent oracle grows
# factorially.
print(format_bench(bench(k=3, n_max=8, family="L")))
