"""
Closed form versus exact solver
===============================

P_s o K2 for growing s.  The direct column stops at the solver's bound.
"""

from coronake.harness import bench_theorem_vs_direct, format_bench, verify_theorems, default_catalog

print(format_bench(bench_theorem_vs_direct([2, 4, 8, 12, 13, 20, 50, 200])))

# %%
# And the exhaustive check every claim above rests on.
print(verify_theorems(3, default_catalog()).to_text())
