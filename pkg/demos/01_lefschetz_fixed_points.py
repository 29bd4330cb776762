# Fixed points of a K3 automorphism from the holomorphic Lefschetz formula.
#
# g has order k*I, g^I is symplectic of order k.  Each isolated fixed point
# has a tangent type i; reducing the Lefschetz identity modulo the cyclotomic
# polynomial turns it into linear equations in the counts m_i.

from k3a5.lefschetz import (NIKULIN_TABLE, build_mixed_order_system,
                            enumerate_nonnegative_solutions, point_type_index_set,
                            pure_order_relation, relation_strings)

for I, k, free in [(3, 5, ["m3", "m4"]), (4, 5, ["m3", "m4", "m6", "m7"]), (4, 3, ["m2", "m4"])]:
    print(f"--- I = {I}, k = {k}")
    print("types:", [t.index for t in point_type_index_set(I, k)])
    system = build_mixed_order_system(I, k)
    print(f"{len(system.rhs)} equations in {len(system.labels)} unknowns")
    for line in relation_strings(system, free):
        print("  ", line)
    # every isolated point of g is fixed by the symplectic g^I
    bound = NIKULIN_TABLE[k]
    for s in enumerate_nonnegative_solutions(system, bound):
        print("   solution", s.values, "m_g =", s.total,
              "residual zero:", system.residual(s.values).is_zero())

print()
print("purely non-symplectic h of order 3 and 4 (n = number of fixed curves):")
for I in (3, 4):
    print(f"  I = {I}:", pure_order_relation(I))
