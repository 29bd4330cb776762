# Discriminant forms and even overlattices of small lattices.

from fractions import Fraction

from k3a5.lattices import (DualVector, GramLattice, discriminant_group,
                           even_overlattice_candidates, form_on_generators, glue_feasibility,
                           glue_obstructions, render_dual)

L = GramLattice.diagonal(("C", "D"), (12, -12))
print("A_L for diag(12, -12):", discriminant_group(L).orders)
for v in even_overlattice_candidates(L):
    print("even index-2 extension by", v.render(L.labels))

print("\nU(6) + diag(20, 20):")
S, T = GramLattice.hyperbolic(6), GramLattice.diagonal(("t1", "t2"), (20, 20))
print("  glue groups of order 4:", glue_feasibility(S, T, 4))
for o in glue_obstructions(S, T):
    print("  ", o.first.render((S + T).labels), "|", o.second.render((S + T).labels),
          "->", o.reason, o.value if o.value is not None else "")

print("\nU(6) + diag(10, 10):")
S, T = GramLattice.hyperbolic(6), GramLattice.diagonal(("t1", "t2"), (10, 10))
glue, = glue_feasibility(S, T, 2)
print("  unique glue:", glue.generators[0].render((S + T).labels))
d1 = DualVector.of(Fraction(1, 3), Fraction(1, 6), 0, Fraction(1, 10))
d2 = DualVector.of(0, Fraction(1, 6), Fraction(1, 10), 0)
form, generated, full = form_on_generators(S, T, glue, [d1, d2])
print("  generators:", render_dual(S + T, d1), "and", render_dual(S + T, d2))
print(f"  they generate {generated} of {full} elements, orders {form.orders}")
print("  form:", form.gram_str())
