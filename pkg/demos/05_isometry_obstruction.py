# Two discriminant forms on (Z/30)^2 that look alike but are not isometric.
#
# Route 1: the image of the first generator must have the same norm, which
# is a quadratic congruence mod 60.  Route 2: try all 30^4 matrices.

import time

from k3a5.obstruct import (condition_profile, congruence_solution_count, derive_congruence,
                           determinant_case_enumeration, exhaustive_isometry_search,
                           overlattice_generator_form, obstruction_verdict, reference_form)

print("determinant cases (m, d1, d):", sorted(str(c) for c in determinant_case_enumeration()))

A, B = reference_form(), overlattice_generator_form()
print("form A:", A.gram_str())
print("form B:", B.gram_str())

coeffs, rhs, modulus = derive_congruence(A, B)
print(f"congruence {coeffs[0]}a^2 + {coeffs[1]}b^2 + {coeffs[2]}ab = {rhs} mod {modulus}")
print("solutions:", congruence_solution_count(modulus, coeffs, rhs)[0])

t = time.perf_counter()
isos = exhaustive_isometry_search(A, B)
print(f"isometries A -> B: {len(isos)} ({time.perf_counter() - t:.2f}s)")
print("self-isometries:", len(exhaustive_isometry_search(A, A)), len(exhaustive_isometry_search(B, B)))
print("single-condition counts:", condition_profile(A, B))
print(obstruction_verdict().as_dict())
