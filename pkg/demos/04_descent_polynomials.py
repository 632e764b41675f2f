"""The polynomial families: tables, gamma vectors, spiral order, real roots.

S_n counts separable permutations by descents (gamma-positive, hence
palindromic and unimodal); D_n counts derangements by descents (unimodal
through a stronger spiral interleaving, with the single equality
d(4,1) = d(4,2) = 4); both appear to be real-rooted.
"""

from descpoly import (
    complement_poly,
    derangement_poly,
    eulerian_poly,
    gamma_poly,
    is_real_rooted,
    real_root_count,
    separable_gamma,
    separable_poly,
    spiral_report,
    verify_series_identity,
)

for n in range(1, 7):
    print(f"S_{n}(t) = {separable_poly(n)}   gamma = {separable_gamma(n).gammas}")
print("gamma polynomial at n = 6:", gamma_poly(6))

print()
for n in range(2, 8):
    print(f"D_{n}(t) = {derangement_poly(n)}")
print("row sum check: D_7(1) =", derangement_poly(7)(1), "(the derangement count)")

print("\nA_n = D_n + complement:",
      all(eulerian_poly(n) == derangement_poly(n) + complement_poly(n)
          for n in range(1, 10)))

rep = spiral_report(8)
print(f"\nspiral interleaving for D_8: {'pass' if rep.passed else 'fail'}")
for check in rep.checks[:4]:
    print("  ", check.description, "->", check.ok)

print("\nreal-rootedness (exact Sturm counts):")
for n in (3, 6, 9, 12):
    s = separable_poly(n)
    print(f"  S_{n}: degree {s.degree}, real roots {real_root_count(s)}, "
          f"real-rooted: {is_real_rooted(s)}")

print("\nrational generating identity for D_n, order 12:",
      all(verify_series_identity(n, 12) for n in range(2, 11)))
