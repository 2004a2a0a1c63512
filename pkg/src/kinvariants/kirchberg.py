"""K-theoretic invariants of unital Kirchberg algebras.

An algebra with finitely generated K-groups is modelled by its K-triple
``(K0, [1], K1)``.  From it we compute the mapping-cone K-groups, the weak
and strong extension groups, the reciprocal dual, the hierarchy class
``(chi, w)``, and four isomorphism tests that must all agree.

>>> O2 = KTriple.from_groups(FgAbelianGroup.trivial(), (), FgAbelianGroup.trivial())
>>> hierarchy_class(reciprocal_dual(O2))
HierarchyClass(l=1, w=1, half=<Half.POSITIVE: 'Positive'>)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .groups import (
    FgAbelianGroup,
    PointedGroup,
    direct_sum,
    is_isomorphic,
    pointed_isomorphic,
    quotient_by_element,
    w_invariant,
)
from .primary import exists_quotient_element


class RealizationFailure(RuntimeError):
    """No unit class could be found for the reciprocal dual."""


@dataclass(frozen=True)
class KTriple:
    k0: PointedGroup
    k1: FgAbelianGroup

    @classmethod
    def from_groups(cls, k0: FgAbelianGroup, unit: Sequence[int], k1: FgAbelianGroup) -> KTriple:
        """Triple on the canonical presentation of ``k0``."""
        return cls(PointedGroup.in_group(k0, unit), k1)

    @property
    def unit(self) -> tuple[int, ...]:
        return self.k0.element

    def canonical(self) -> KTriple:
        return KTriple(self.k0.canonical(), self.k1)

    def direct_sum(self, other: KTriple) -> KTriple:
        """K-data of the direct sum ``A + B`` (unit ``(1_A, 1_B)``)."""
        return KTriple(self.k0.direct_sum(other.k0), direct_sum(self.k1, other.k1))

    def __str__(self) -> str:
        c = self.k0.canonical()
        return f"({c.group}, {list(c.element)}, {self.k1})"


class Half(enum.Enum):
    POSITIVE = "Positive"
    NON_POSITIVE = "NonPositive"


@dataclass(frozen=True)
class HierarchyClass:
    l: int
    w: int
    half: Half


@dataclass(frozen=True)
class ExtData:
    ext_s1: FgAbelianGroup
    ext_w1: FgAbelianGroup
    ext_s0: FgAbelianGroup
    ext_w0: FgAbelianGroup
    iota: PointedGroup

    @property
    def ext_t1(self) -> FgAbelianGroup:
        return direct_sum(self.ext_s1, self.ext_w1)

    @property
    def ext_t0(self) -> FgAbelianGroup:
        return direct_sum(self.ext_s0, self.ext_w0)


def chi(t: KTriple) -> int:
    return t.k0.group.free_rank - t.k1.free_rank


def w_of(t: KTriple) -> int:
    return w_invariant(t.k0)


def mapping_cone_kgroups(t: KTriple) -> tuple[FgAbelianGroup, FgAbelianGroup]:
    """``(K0(C_A), K1(C_A))`` read off the exact sequence
    ``0 -> K1 -> K0(C_A) -> Z -> K0 -> K1(C_A) -> 0``.

    The map ``Z -> K0`` sends 1 to the unit, so its kernel is ``Z`` for a
    torsion unit and 0 otherwise; ``K0(C_A)`` is an extension of a free
    group and therefore splits.
    """
    k1_cone = quotient_by_element(t.k0)
    k0_cone = direct_sum(t.k1, FgAbelianGroup.free(1 - w_of(t)))
    return k0_cone, k1_cone


def _ext_groups(t: KTriple):
    k0 = t.k0.group
    k1 = t.k1
    w = w_of(t)
    cone1 = quotient_by_element(t.k0)
    ext_w1 = FgAbelianGroup(k1.free_rank, k0.invariant_factors)
    ext_w0 = FgAbelianGroup(k0.free_rank, k1.invariant_factors)
    # KK(C_A, C) = Hom(K0(C_A), Z) + Ext(K1(C_A), Z); rank K0(C_A) = 1 - chi + rank K1(C_A).
    ext_s1 = FgAbelianGroup(1 - chi(t) + cone1.free_rank, cone1.invariant_factors)
    # KK(C_A, S) = Hom(K1(C_A), Z) + Ext(K0(C_A), Z), and Tor K0(C_A) = Tor K1.
    # Equivalently forced by Ext_s^0 + Z^(1 - w(Ext_s^1, iota)) = Ext_w^0 with
    # w(Ext_s^1, iota) = 1 - w.
    ext_s0 = FgAbelianGroup(k0.free_rank - w, k1.invariant_factors)
    return ext_s1, ext_w1, ext_s0, ext_w0


def ext_data(t: KTriple) -> ExtData:
    """Strong and weak extension groups in degrees 0 and 1, plus ``iota``.

    ``iota`` is realized as an element of ``Ext_s^1`` whose quotient is
    ``Ext_w^1``; only its pointed-isomorphism class is meaningful.
    """
    ext_s1, ext_w1, ext_s0, ext_w0 = _ext_groups(t)
    g = exists_quotient_element(ext_s1, ext_w1)
    if g is None:
        raise RealizationFailure(f"no iota in {ext_s1} with quotient {ext_w1}")
    return ExtData(ext_s1, ext_w1, ext_s0, ext_w0, PointedGroup.in_group(ext_s1, g))


def ext_total(t: KTriple, i: int) -> FgAbelianGroup:
    e = _ext_groups(t)
    if i == 1:
        return direct_sum(e[0], e[1])
    if i == 0:
        return direct_sum(e[2], e[3])
    raise ValueError(f"degree must be 0 or 1, got {i}")


def reciprocal_dual(t: KTriple) -> KTriple:
    """K-triple ``(Ext_s^1, iota, Ext_s^0)`` of the reciprocal algebra."""
    e = ext_data(t)
    return KTriple(e.iota, e.ext_s0)


def spanier_whitehead_dual_kgroups(
    g0: FgAbelianGroup, g1: FgAbelianGroup
) -> tuple[FgAbelianGroup, FgAbelianGroup]:
    """K-groups of the Spanier-Whitehead dual: ranks stay, torsion swaps degree."""
    return (
        FgAbelianGroup(g0.free_rank, g1.invariant_factors),
        FgAbelianGroup(g1.free_rank, g0.invariant_factors),
    )


def hierarchy_class(t: KTriple) -> HierarchyClass:
    l = chi(t)
    return HierarchyClass(l, w_of(t), Half.POSITIVE if l > 0 else Half.NON_POSITIVE)


def iso_triple(t1: KTriple, t2: KTriple) -> bool:
    return pointed_isomorphic(t1.k0, t2.k0) and is_isomorphic(t1.k1, t2.k1)


def iso_by_ext_triple(t1: KTriple, t2: KTriple) -> bool:
    """Compare ``(Ext_s^1, Ext_w^1, Ext_w^0)``."""
    a, b = _ext_groups(t1), _ext_groups(t2)
    return a[0] == b[0] and a[1] == b[1] and a[3] == b[3]


def iso_by_total_ext(t1: KTriple, t2: KTriple) -> bool:
    return all(ext_total(t1, i) == ext_total(t2, i) for i in (0, 1))


def iso_by_mixed(t1: KTriple, t2: KTriple) -> bool:
    """Compare ``Ext_t^1`` and ``Ext_w^0``."""
    return ext_total(t1, 1) == ext_total(t2, 1) and _ext_groups(t1)[3] == _ext_groups(t2)[3]


def ext_triple_range_check(g1: FgAbelianGroup, q: FgAbelianGroup, g0w: FgAbelianGroup) -> bool:
    """Whether ``(g1, q, g0w)`` occurs as ``(Ext_s^1, Ext_w^1, Ext_w^0)``.

    Needs ``q = g1/Zg`` for some ``g`` and ``g0w = G0 + Z^(1-w(g1, g))``,
    i.e. ``rank(g0w) >= 1 - w``.  ``w`` is fixed by the ranks of ``g1``
    and ``q`` alone.
    """
    if exists_quotient_element(g1, q) is None:
        return False
    w = g1.free_rank - q.free_rank
    return g0w.free_rank >= 1 - w


def ck_ext_range_check(g: FgAbelianGroup, q: FgAbelianGroup) -> bool:
    """Whether ``(g, q)`` occurs as ``(Ext_s^1, Ext_w^1)`` of a Cuntz-Krieger algebra."""
    return g.free_rank >= 1 and exists_quotient_element(g, q) is not None
