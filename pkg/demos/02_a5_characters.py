# A5 as permutations, its character table over Q(zeta_5), and the
# decomposition of the Neron-Severi lattice from fixed-point counts.

from k3a5.lefschetz import nikulin_total
from k3a5.reps import (a5_character_table, alternating_group_a5, decompose_neron_severi,
                       subgroup_orders, transitive_orbit_sizes)

A5 = alternating_group_a5()
print("class sizes:", A5.class_sizes)

table = a5_character_table()
for i, row in enumerate(table.rows, 1):
    print(f"chi{i}:", [str(v) for v in row])

print("sum of fixed-point counts over A5:", nikulin_total())

euler = {"2A": 8, "3A": 6, "5A": 4, "5B": 4}
m = decompose_neron_severi(euler)
print("multiplicities of chi1..chi5 in S_X (x) C:", m.a, "rank", m.rank())

print("subgroup orders:", sorted(subgroup_orders(A5)))
sizes = sorted(transitive_orbit_sizes(A5))
print("transitive orbit sizes >= 5:", sizes)
print("  note 60 (the regular orbit) is among them")
