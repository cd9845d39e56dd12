"""
Deficiency of two small coronas
===============================

Closed forms against a full solve on P4 o K2 and a mixed family.
"""

from coronake import CoronaSpec, build_corona, complete, path, uniform_corona
from coronake import fast_alpha, fast_kappa, fast_mu, independence_number, matching_number

# hang a private edge off every vertex of a path on four vertices
g1 = uniform_corona(path(4), complete(2))

# same head, last satellite swapped for a path on three vertices
g2 = CoronaSpec(path(4), (complete(2),) * 3 + (path(3),))

for name, spec in (("P4 o K2", g1), ("P4 o {K2,K2,K2,P3}", g2)):
    g = build_corona(spec).graph
    print(name)
    print("  closed form  n=%d alpha=%d mu=%d kappa=%d" % (spec.order, fast_alpha(spec), fast_mu(spec), fast_kappa(spec)))
    alpha, mu = independence_number(g), matching_number(g)
    print("  direct       n=%d alpha=%d mu=%d kappa=%d" % (g.n, alpha, mu, g.n - alpha - mu))

# complete graphs are coronas too: K_n = K1 o K_(n-1)
from coronake import clique_corona, kappa_direct

for n in range(5, 11):
    print("K%d: direct %d, as K1 o K%d %d" % (n, kappa_direct(complete(n)), n - 1, fast_kappa(clique_corona(complete(1), n - 1))))
