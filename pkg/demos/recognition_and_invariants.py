"""Recognize parametric forms and compute exact derived invariants.

The two 5-vertex quivers below have the same Cartan determinant but
different associated polynomials, so the determinant alone cannot
separate them.

Run:  python demos/recognition_and_invariants.py
"""

from dquiver import (
    Quiver,
    associated_polynomial,
    cartan_det,
    cartan_matrix,
    classify_type_d,
    det_formula,
)

left = Quiver.from_arrows(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 1), (2, 4)])
right = Quiver.from_arrows(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 0)])

for name, q in [("left", left), ("right", right)]:
    form = classify_type_d(q)
    C = cartan_matrix(q)
    det = cartan_det(C)
    poly = associated_polynomial(C)
    print(f"{name} quiver: {form}")
    print(f"  Cartan matrix rows: {[''.join(map(str, row)) for row in C]}")
    print(f"  det = {det} (closed form: {det_formula(form)})")
    print(f"  associated polynomial = {poly}")
    print()

pl = associated_polynomial(cartan_matrix(left))
pr = associated_polynomial(cartan_matrix(right))
assert cartan_det(cartan_matrix(left)) == cartan_det(cartan_matrix(right)) == 2
assert pl != pr
print("same determinant, different polynomials: not derived equivalent")
