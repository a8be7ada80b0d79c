"""Good versus bad mutations, and the self-injective exceptions.

A quiver mutation is good when it lifts to a pair of algebra mutations,
which forces the two algebras to be derived equivalent.  Spikeless
cycles admit no good mutations at all, yet the even cycle is derived
equivalent to the all-spikes quiver on the same vertex count.

Run:  python demos/good_mutations.py
"""

from dquiver import (
    TypeIV,
    TypeIVCycle,
    associated_polynomial,
    cartan_matrix,
    mutation_report,
    parametric_good_moves,
    parse_form,
    realize,
)

q = realize(parse_form("II(1,0,0,0)"))
print("per-vertex report for the D_5 quiver II(1,0,0,0):")
for row in mutation_report(q):
    fmt = lambda d: ("neg" if d.neg else "") + ("+pos" if d.pos else "")
    print(f"  vertex {row.k}: before [{fmt(row.before):7s}]"
          f" after [{fmt(row.after):7s}]  {row.verdict}")

print("\nparametric good moves from II(1,0,0,0):")
for g in parametric_good_moves(parse_form("II(1,0,0,0)")):
    print("  ->", g)

cycle = realize(TypeIVCycle(6))
print("\nthe 6-cycle admits no good mutation:")
print("  verdicts:", [r.verdict for r in mutation_report(cycle)])

spikes = realize(TypeIV(((1, 0, 0),) * 3))
pc = associated_polynomial(cartan_matrix(cycle))
ps = associated_polynomial(cartan_matrix(spikes))
print("\nyet IVCycle(6) and IV((1,0,0)^3) share the associated polynomial:")
print(" ", pc)
assert pc == ps
