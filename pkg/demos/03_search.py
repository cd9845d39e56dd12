"""
Looking for 2-deficient coronas
===============================

Walk every small head and family drawn from a catalog; keep those whose
closed-form deficiency is 2.
"""

from coronake import complete, path
from coronake.harness import default_catalog, search_kappa

catalog = default_catalog() + [complete(4)]
hits = search_kappa(2, 3, catalog, limit=12)
for hit in hits:
    print(hit.line())

# %%
# Isomorphic coronas share a canonical key, so only one spec per class is
# kept when the corona is small enough to canonicalise.
print(len(search_kappa(0, 2, catalog)), "KE classes vs",
      len(search_kappa(0, 2, catalog, dedup=False)), "KE specs on heads up to 2 vertices")

# a larger head: P4 o K2 shows up among the 12-vertex hits
print([h.line() for h in search_kappa(2, 4, [complete(2)]) if h.spec.order == 12][:3])
