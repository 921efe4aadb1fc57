"""Loading and validating Cayley tables.

A finite semigroup is an n x n table of element indices; construction
checks every entry and all n^3 associativity triples, and detects a
two-sided zero or identity automatically.
"""

from finsemi import from_table, format_sgt, parse_sgt
from finsemi.errors import NonAssociative

# The cyclic group of order 2: identity detected at index 0.
z2 = from_table(2, [[0, 1], [1, 0]], labels=["e", "g"])
print("Z2:", z2)

# The null semigroup: every product is the absorbing element 0.
n2 = from_table(2, [[0, 0], [0, 0]], labels=["0", "a"])
print("N2:", n2)

# A right-zero semigroup is associative but has neither zero nor identity.
rz = from_table(2, [[0, 1], [0, 1]])
print("right-zero:", rz, "zero:", rz.zero, "identity:", rz.identity)

# A bad table is rejected with the first failing triple.
try:
    from_table(2, [[1, 0], [0, 0]])
except NonAssociative as e:
    print("rejected:", e)

# Tables round-trip through the .sgt text format.
text = format_sgt(z2)
print("\n.sgt serialization of Z2:")
print(text)
assert parse_sgt(text) == z2
print("parse(format(S)) == S holds")
