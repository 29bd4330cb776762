# Fixed loci of the order-4 element g of A5 : mu4, one configuration at a time.
#
# On each pair of conjugate characters g either stabilizes or swaps the
# two summands; the scalars are 4th roots of unity.  We evaluate every
# assignment and keep the tuples consistent with the fixed-point constraints.

from k3a5.cases import (ALL_CONFIGS, admissible_tuples, all_admissible_tuples,
                        assignment_grid, fixed_locus_genus_candidates,
                        self_intersection_from_genus)
from k3a5.reps import alternating_group_a5, transitive_orbit_sizes

for config in ALL_CONFIGS:
    grid = list(assignment_grid(config))
    tuples = sorted(str(t) for t in admissible_tuples(config))
    print(f"{str(config):<28} {len(grid):5d} assignments -> {tuples}")

union = all_admissible_tuples()
print("\n(n_g, m_g; chi_g, chi_gtau, chi_g2tau, chi_g2):")
for t in sorted(union, key=lambda t: -t.n_g):
    print("  ", t)

# chi(X^{g^2}) = 0 always; if X^{g^2} is a curve C plus s rational curves
# permuted transitively by A5, s is an orbit size (or 1)
allowed = {1} | transitive_orbit_sizes(alternating_group_a5())
cands = fixed_locus_genus_candidates(0, 10, allowed)
print("\n(genus, s) candidates:", sorted(cands))
kept = sorted(c for c in cands if c[1] not in (1, 5))
print("after the geometric exclusions of s = 1, 5:", kept)
print("C^2 =", self_intersection_from_genus(kept[0][0]))
