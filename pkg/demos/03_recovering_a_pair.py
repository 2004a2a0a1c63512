"""
Recovering G and G/Zg from their sum
====================================

The direct sum G + G/Zg remembers both summands.  Per prime, the
exponents that occur an odd number of times alternate between the two
leftovers, and everything else is shared.
"""

from kinvariants import (
    ExponentMultiset,
    FgAbelianGroup,
    exists_quotient_element,
    multiset_intersection,
    odd_multiplicity_set,
    primary_decomposition,
    recover_pair,
    satisfies_double_star,
)

p = 2
G = ExponentMultiset.of(p, [5, 3, 2])
H = ExponentMultiset.of(p, [5, 3, 3, 1])
print("common exponents:", multiset_intersection(G, H).exponents())
print("interleaving (G, H):", satisfies_double_star(G, H))
print("odd multiplicities of the sum:", odd_multiplicity_set(G.union(H)))

# Build the sum as a group and split it again.  With an even free rank the
# marked element is torsion; with odd rank it is not.
for rank in (0, 1):
    D = FgAbelianGroup.from_orders(rank, G.union(H).orders())
    A, Q = recover_pair(D)
    print(f"\nD = {D}\n  G   = {A}\n  G/Zg = {Q}")
    print("  witness g:", exists_quotient_element(A, Q))

print("\nprimary parts of Z/12 + Z/18:", {
    q: m.exponents() for q, m in primary_decomposition(FgAbelianGroup(0, (6, 36))).parts.items()
})
