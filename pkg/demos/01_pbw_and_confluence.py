"""PBW normal forms and diamond-lemma confluence.

Walks through the rewriting engine: computing normal forms in a Weyl
algebra, checking that a presentation's overlap ambiguities resolve, and
watching a presentation that violates the Jacobi identity fail.
"""

from weylkit import NCPoly, Presentation, check_confluence
from weylkit.weylalg import boundary_chart_presentation, weyl_presentation

# Weyl algebra over F_3 with one pair of generators: [g1, g2] = 1.
A = weyl_presentation(3, 1)
P = A.presentation
g1, g2 = P.gen(0), P.gen(1)

print("g2 * g1 =", P.multiply(g2, g1).format(P.names))
print("g2^2 * g1 =", P.multiply(P.power(g2, 2), g1).format(P.names))
print("[g1, g2] =", P.commutator(g1, g2).format(P.names))

# Confluence: every overlap word g_k g_j g_i reduces the same way along
# both rewrite routes.  The Weyl and chart presentations pass.
for name, pres in [
    ("weyl p=3 n=2", weyl_presentation(3, 2).presentation),
    ("chart p=2 n=2", boundary_chart_presentation(2, 2).presentation),
]:
    report = check_confluence(pres)
    print(name, "confluent:", report.passed, f"({report.overlaps_checked} overlaps)")

# A presentation that fails: [g2,g1] = g3, [g3,g1] = 0, [g3,g2] = g2
# breaks the Jacobi identity, and the overlap g3 g2 g1 detects it.
bad = Presentation(
    ("g1", "g2", "g3"),
    2,
    {(1, 0): NCPoly({(0, 0, 1): 1}, 2), (2, 1): NCPoly({(0, 1, 0): 1}, 2)},
)
report = check_confluence(bad)
print("jacobi-violating presentation confluent:", report.passed)
for overlap, diff in report.discrepancies:
    print("  overlap", overlap, "discrepancy:", diff.format(bad.names))
