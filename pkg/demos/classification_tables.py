"""Reproduce the classification counts at desk scale.

For each vertex count the derived standard forms are enumerated and
their associated polynomials computed; up to 14 vertices the number of
distinct polynomials is exactly the number of derived equivalence
classes.  From 15 vertices on the forms only bound the class count, and
the first ambiguities appear: pairs of forms sharing every polynomial
invariant, some separated by mod-p similarity, some not.

Run:  python demos/classification_tables.py
"""

from dquiver import (
    TypeIV,
    asymmetry_similar_mod_p,
    associated_polynomial,
    cartan_matrix,
    count_derived_classes,
    dynkin_d,
    enumerate_standard_forms,
    mutation_class,
    realize,
)

print(" n  algebras  classes")
for n in range(4, 8):
    algebras = mutation_class(dynkin_d(n)).size
    classes = count_derived_classes(n)
    print(f"{n:2d}  {algebras:8d}  {classes:7d}")

print("\nstandard forms at n = 15:",
      len(enumerate_standard_forms(15)), "plain,",
      len(enumerate_standard_forms(15, op_identify=True)), "with opposites identified")

# The smallest polynomial collision beyond the complete range:
f1 = TypeIV(((3, 2, 0), (3, 1, 2)))
f2 = TypeIV(((3, 3, 0), (3, 0, 2)))
C1 = cartan_matrix(realize(f1))
C2 = cartan_matrix(realize(f2))
assert associated_polynomial(C1) == associated_polynomial(C2)
print(f"\n{f1} and {f2} share their associated polynomial,")
print("but their asymmetry matrices are not similar over F_3:",
      asymmetry_similar_mod_p(C1, C2, 3))
