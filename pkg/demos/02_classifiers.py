"""
Classifying without building
============================

The theorem route looks at the head and each satellite on its own.
"""

from coronake import CoronaSpec, classify_corona, complete, cycle, path

K1, K2, K3, K4 = (complete(q) for q in (1, 2, 3, 4))

cases = {
    "K2 o {K3, K1}": CoronaSpec(K2, (K3, K1)),
    "P3 o {K3, K1, K1}": CoronaSpec(path(3), (K3, K1, K1)),
    "K2 o {K4, K2}": CoronaSpec(K2, (K4, K2)),
    "P2 o {C4, K1}": CoronaSpec(path(2), (cycle(4), K1)),
}

for name, spec in cases.items():
    by_theorem = classify_corona(spec)
    by_solver = classify_corona(spec, method="direct")
    print(f"{name:20} {by_theorem.ke_class:5} via {by_theorem.method:12} "
          f"case={by_theorem.case_tag or '-'}  direct kappa={by_solver.kappa}")
    if by_theorem.witness:
        print(" " * 21 + f"witness: {by_theorem.witness}")

# %%
# Certificates come from the built corona when asked for.
report = classify_corona(cases["K2 o {K4, K2}"], certificates=True)
print("\n".join(report.lines()))
