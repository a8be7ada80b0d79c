"""Walk through quiver mutation and mutation-class enumeration.

Run:  python demos/mutation_classes.py
"""

from dquiver import dynkin_d, linear_a, mutation_class, to_text

# Mutation is a local move: reverse arrows at the vertex, complete
# 2-paths through it, cancel the 2-cycles this creates.
q = linear_a(3)
print("linearly oriented A_3:")
print(to_text(q))
m = q.mutate(1)
print("\nafter mutating at vertex 1 (an oriented triangle appears):")
print(to_text(m))
assert m.mutate(1) == q, "mutation is an involution"

# The mutation class of a Dynkin quiver is finite.  Breadth-first search
# with canonical-key deduplication enumerates it exactly.
print("\nmutation class sizes of D_n:")
for n in range(4, 8):
    report = mutation_class(dynkin_d(n))
    print(f"  D_{n}: {report.size} quivers")

# Every member is reachable from every other, so the report does not
# depend on the starting representative.
base = mutation_class(dynkin_d(4))
other = mutation_class(next(iter(base.members.values())).mutate(0))
assert other.representatives == base.representatives
print("\nclass enumeration is representative-independent, as it must be")
