"""The rc-index: one noncommutative monomial per tree-shape class.

Each shape contributes the word of its right-chain lengths.  Substituting
1 for every generator counts shape classes (Catalan numbers), 2 counts all
labeled trees (large Schröder numbers), and the parity-split substitution
recovers the descent polynomial with its gamma coefficients in plain view.
"""

from descpoly import (
    catalan,
    gamma_from_shapes,
    rc_index,
    schroder_number,
    separable_gamma,
    separable_poly,
)

for n in range(1, 7):
    print(f"order {n}: {rc_index(n)}")

idx = rc_index(6)
print("\nevaluations at order 6:")
print("  all generators 1 ->", idx.evaluate(1), "= Catalan", catalan(5))
print("  all generators 2 ->", idx.evaluate(2), "= Schröder", schroder_number(6))
print("  parity substitution ->", idx.substitute_ab(), "=", separable_poly(6))

print("\ngamma coefficients via shape sums (2^{even chains} each):")
for n in range(4, 9):
    gv = separable_gamma(n)
    shape_way = [gamma_from_shapes(n, k) for k in range((n - 1) // 2 + 1)]
    print(f"  n={n}: {shape_way} vs gamma vector {list(gv.gammas)}")
