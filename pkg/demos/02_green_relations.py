"""Green's relations, egg-box diagrams, and weak inverses.

The five relations are computed from principal ideals and cross-validated
internally (R∘L = L∘R = D = J on finite input).  W(s) collects the weak
inverses x with xsx = x; V(s) the genuine inverses.
"""

from finsemi import green, idempotents, inverses, regular_elements, weak_inverses, zoo
from finsemi.render import render_egg_box

t2 = zoo.full_transformations(2)
print("full transformation monoid on 2 points:")
print(render_egg_box(t2))

print("\nidempotents:", sorted(idempotents(t2)))
print("regular elements:", sorted(regular_elements(t2)))

b2 = zoo.brandt_b2()
print("\nBrandt semigroup B2:")
print(render_egg_box(b2))
g = green(b2)
print("J-classes:", g.J.as_lists())

s = 1  # the element (1,2)
print(f"\nweak inverses of {b2.label(s)}:",
      [b2.label(x) for x in sorted(weak_inverses(b2, s))])
print(f"inverses of {b2.label(s)}:",
      [b2.label(x) for x in sorted(inverses(b2, s))])
print("note: the zero is a weak inverse of everything (0·s·0 = 0)")

# The weak-inverse product containment, on a concrete pair:
from finsemi import product_set
s, t = 1, 2
lhs = weak_inverses(b2, b2.mul(s, t))
rhs = product_set(b2, weak_inverses(b2, t), weak_inverses(b2, s))
print(f"\nW(st) = {sorted(lhs)} is contained in W(t)W(s) = {sorted(rhs)}:",
      lhs <= rhs)
