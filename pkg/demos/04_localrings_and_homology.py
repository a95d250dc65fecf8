"""Local-ring taxonomy and homological probes on small algebras.

Upper triangular matrices T_2(F_2) have two maximal two-sided ideals
M_k = {a_kk = 0}, each idempotent (M_k^2 = M_k), so the algebra is not
local in any of the demi / NAK / quasi senses and its fiber over the prime
field fails to decompose.  The same toolkit computes minimal resolutions,
Ext groups, grade, and an Auslander-condition probe.
"""

import numpy as np

from weylkit import (
    FDModule,
    Subspace,
    auslander_probe,
    classify_local,
    ext_groups,
    fiber_decomposability,
    grade,
    idempotent_ideal_check,
    jacobson_radical,
    maximal_two_sided_ideals,
    minimal_projective_resolution,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
)

T2 = upper_triangular_algebra(2, 2)
print("T_2(F_2):", classify_local(T2))
print("  rad dim:", jacobson_radical(T2).dim)
for M in maximal_two_sided_ideals(T2):
    print("  maximal ideal dim", M.dim, "idempotent:", idempotent_ideal_check(M, T2))
print("  fiber over F_2:", fiber_decomposability(T2, [T2.unit], Subspace([], 3, 2)))

P2 = truncated_polynomial_algebra(2, 2)
print("F_2[x]/(x^2):", classify_local(P2))

# The trivial module F_2 over F_2[x]/(x^2) has the period-one resolution
# ... ->x A ->x A -> F_2 -> 0.
triv = FDModule(P2, [[[1]], [[0]]])
res = minimal_projective_resolution(triv, P2, 4)
print("resolution ranks:", res.ranks, "d^2=0 and exact:", res.check())
print("Ext dims:", [ext_groups(triv, P2, i, res).dim for i in range(4)])
print("grade:", grade(triv, P2))

rep = auslander_probe(P2, triv, depth=3)
print("auslander probe passed:", rep.passed, "-", rep.note)

# A simple module over T_2 whose first Ext is nonzero: grade jumps to 1.
S2 = FDModule(T2, [[[0]], [[0]], [[1]]])
print("T_2 simple S2: Ext dims", [ext_groups(S2, T2, i).dim for i in range(3)],
      "grade", grade(S2, T2))
print("auslander probe on S2:", auslander_probe(T2, S2, 3).passed)
