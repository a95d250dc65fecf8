"""The reduced norm, the principal symbol, and Serre twists.

The Weyl algebra in characteristic p is free of rank p^{2n} over its center
F_p[x_1..x_2n] with x_i = g_i^p.  The determinant of left multiplication on
that basis is a p^n-th power; its root is the reduced norm N.  The symbol
map and N fit into a commutative square, and ord(N) cuts out the Serre
twists whose global sections we can enumerate.
"""

from weylkit import (
    check_norm_symbol_diagram,
    global_twist_sections,
    ord_at_H_dagger,
    principal_symbol,
    reduced_norm,
    twist_membership,
)
from weylkit.weylalg import weyl_presentation

A = weyl_presentation(2, 1)
P = A.presentation
g1, g2 = P.gen(0), P.gen(1)

for s, label in [(g1, "g1"), (P.multiply(g1, g2), "g1*g2"), (g1 + g2, "g1+g2")]:
    print(f"N({label}) =", reduced_norm(s, A).format())

# Multiplicative but not additive:
lhs = reduced_norm(g1 + g2, A)
rhs = reduced_norm(g1, A) + reduced_norm(g2, A)
print("N(g1+g2) == N(g1)+N(g2):", lhs == rhs)

# The symbol map takes top-degree parts into t-variables (t_i^p = x_i).
sym = principal_symbol(P.multiply(g2, g1), A)
print("symbol of g2*g1: degree", sym.degree, "poly", sym.poly.format())
print("diagram commutes for g2*g1:", check_norm_symbol_diagram(P.multiply(g2, g1), A))

# ord at the hyperplane at infinity is -p times the x-degree of the norm;
# the twist of level k admits s iff ord(N(s)) >= -k p^n.
print("ord N(g1*g2) =", ord_at_H_dagger(reduced_norm(P.multiply(g1, g2), A)))
print("g1 in twist(1):", twist_membership(g1, 1, A))
print("g1*g2 in twist(1):", twist_membership(P.multiply(g1, g2), 1, A))

for k in (0, 1):
    basis = global_twist_sections(k, max(k, 1), A)
    print(f"sections of twist({k}):", [b.format(P.names) for b in basis])
