"""
Pointed groups and their quotients
==================================

A pointed group (G, g) is a group with a marked element.  Two pointed
groups are isomorphic exactly when the groups agree and so do the
quotients G/Zg, so isomorphism comes down to two Smith forms.
"""

from kinvariants import (
    FgAbelianGroup,
    PointedGroup,
    element_order,
    pointed_isomorphic,
    quotient_by_element,
    w_invariant,
)

G = FgAbelianGroup(1, (4,))  # Z + Z/4
for g in [(2, 1), (1, 0), (0, 2), (0, 0)]:
    pg = PointedGroup.in_group(G, g)
    print(f"g = {g}: G/Zg = {quotient_by_element(pg)}, order {element_order(pg)}, w = {w_invariant(pg)}")

# The units 1 and 3 of Z/4 are exchanged by an automorphism; 1 and 2 are not.
C4 = FgAbelianGroup.cyclic(4)
one, two, three = (PointedGroup.in_group(C4, (k,)) for k in (1, 2, 3))
print("(Z/4, 1) ~ (Z/4, 3):", pointed_isomorphic(one, three))
print("(Z/4, 1) ~ (Z/4, 2):", pointed_isomorphic(one, two))
