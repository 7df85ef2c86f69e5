"""
Truth values on a finite chain
==============================

Truth values live in a finite residuated lattice.  Here we build the
11-element Łukasiewicz chain, do some arithmetic, and check the laws.
"""

import numpy as np

from mvgraph import make_goedel_chain, make_lukasiewicz_chain, validate_algebra

L = make_lukasiewicz_chain(11)
a, b = L.element("0.7"), L.element("0.4")

# ⊗ is the Łukasiewicz t-norm, >> its residuum
print("0.7 ⊗ 0.4 =", a * b)
print("0.7 → 0.4 =", a >> b)
print("0.4 → 0.7 =", b >> a)

# elements are stored as carrier positions, so whole tables are numpy arrays
print("\nresiduum table (numerators over 10):")
print(L.residuum)

# the same residuum read off as max{c : a ⊗ c ≤ b}
best = max(c for c in L.elements if (a * c) <= b)
print("\nmax{c : 0.7 ⊗ c ≤ 0.4} =", best)

# the Gödel chain uses min and a sharper implication
G = make_goedel_chain(3)
print("\nGödel-3: 1/2 → 0 =", G.element("1/2") >> G.element("0"))

# exhaustive law checks
for A in (L, G):
    report = validate_algebra(A)
    print(f"{A.name}: {sum(r.ok for r in report.results)}/{len(report.results)} laws hold")

assert np.array_equal(L.residuum, np.minimum(10, 10 - np.arange(11)[:, None] + np.arange(11)))
