"""The boundary chart at infinity and its associated graded algebras.

Inside the localization A[g1^{-1}], the coordinates u = g1^{-1},
v = -g2 g1^{-1}, gb_i = g_i g1^{-1} satisfy the chart relations
([v,u] = u^3 and friends).  Passing to associated graded algebras twice
flattens the chart into a commutative polynomial ring.
"""

from weylkit import WeightFiltration, associated_graded
from weylkit.weylalg import (
    boundary_chart_presentation,
    chart_embedding_check,
    localized_weyl,
)

# Verify the chart relations by direct expansion in A[g1^{-1}].
for p, n in ((2, 1), (3, 1), (2, 2), (3, 2)):
    report = chart_embedding_check(p, n)
    print(f"p={p} n={n}: chart relations hold, h orientation {report.orientation:+d}")

# The derived commutation rule for the inverse generator:
L = localized_weyl(3, 1)
inv, g2 = L.gen(0, -1), L.gen(1)
print("[g1^-1, g2] =", L.commutator(inv, g2).format(L.names))

# Chart presentation and its graded shadows.
C = boundary_chart_presentation(2, 2).presentation
print("chart relations:")
for (j, i), c in sorted(C.relations.items()):
    print(f"  [{C.names[j]},{C.names[i]}] = {c.format(C.names)}")

G = associated_graded(C, WeightFiltration((1, 1, 1, 1)))
print("gr under all-ones weights:")
for (j, i), c in sorted(G.relations.items()):
    print(f"  [{G.names[j]},{G.names[i]}] = {c.format(G.names)}")

G2 = associated_graded(G, WeightFiltration((1, 0, 0, 0)))
print("gr again under the u-weight: commutative =", not G2.relations)
