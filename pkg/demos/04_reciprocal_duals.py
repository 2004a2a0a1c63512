"""
Extension groups and reciprocal duals
=====================================

From the K-data (K0, [1], K1) of a unital Kirchberg algebra we get the
weak and strong extension groups and the K-data of its reciprocal dual.
O_2 and O_infinity are each other's duals.
"""

from kinvariants import (
    FgAbelianGroup,
    KTriple,
    ext_data,
    hierarchy_class,
    iso_triple,
    reciprocal_dual,
)

Z, T0 = FgAbelianGroup.free(1), FgAbelianGroup.trivial()
examples = {
    "O_2": KTriple.from_groups(T0, (), T0),
    "O_5": KTriple.from_groups(FgAbelianGroup.cyclic(4), (1,), T0),
    "O_inf": KTriple.from_groups(Z, (1,), T0),
    "P_inf": KTriple.from_groups(T0, (), Z),
    "mixed": KTriple.from_groups(FgAbelianGroup(1, (2,)), (1, 0), FgAbelianGroup.cyclic(3)),
}

for name, t in examples.items():
    e = ext_data(t)
    h = hierarchy_class(t)
    d = reciprocal_dual(t)
    print(f"{name:6} {str(t):28} class ({h.l}, {h.w})  dual {d}")
    print(f"       Ext_s1 = {e.ext_s1}, Ext_w1 = {e.ext_w1}, Ext_s0 = {e.ext_s0}, Ext_w0 = {e.ext_w0}")
    assert iso_triple(reciprocal_dual(d), t)
