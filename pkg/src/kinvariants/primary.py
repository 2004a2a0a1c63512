"""Primary parts and the exponent-multiset calculus.

For a prime ``p`` the ``p``-primary part ``Z/p^n1 + ... + Z/p^nk`` of a
group is recorded by the multiset ``{n1, ..., nk}``.  Comparing a group
with its quotient by one element comes down to intersecting two such
multisets and checking that what is left over interleaves strictly.

>>> G = ExponentMultiset.of(2, [5, 3, 2])
>>> H = ExponentMultiset.of(2, [5, 3, 3, 1])
>>> multiset_intersection(G, H).exponents()
(5, 3)
>>> satisfies_double_star(G, H)
True
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

from sympy import factorint

from .groups import FgAbelianGroup, PointedGroup, quotient_by_element, _as_group


class NotRecoverable(ValueError):
    """The group is not of the form ``G + G/Zg``."""


@dataclass(frozen=True)
class ExponentMultiset:
    """Multiset of exponents of one primary part, stored as multiplicities."""

    prime: int
    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        c = Counter()
        for e, k in self.counts:
            if e < 1 or k < 0:
                raise ValueError(f"bad exponent/multiplicity ({e}, {k})")
            c[e] += k
        object.__setattr__(
            self, "counts", tuple(sorted(((e, k) for e, k in c.items() if k), reverse=True))
        )

    @classmethod
    def of(cls, prime: int, exponents: Iterable[int]) -> ExponentMultiset:
        return cls(prime, tuple(Counter(exponents).items()))

    @classmethod
    def from_counter(cls, prime: int, counter: Mapping[int, int]) -> ExponentMultiset:
        return cls(prime, tuple(counter.items()))

    def as_counter(self) -> Counter:
        return Counter(dict(self.counts))

    def exponents(self) -> tuple[int, ...]:
        """All exponents with repetition, largest first."""
        return tuple(e for e, k in self.counts for _ in range(k))

    def __len__(self) -> int:
        return sum(k for _, k in self.counts)

    def __bool__(self) -> bool:
        return bool(self.counts)

    def union(self, other: ExponentMultiset) -> ExponentMultiset:
        """Disjoint union (multiplicities add)."""
        _same_prime(self, other)
        return ExponentMultiset.from_counter(self.prime, self.as_counter() + other.as_counter())

    def difference(self, other: ExponentMultiset) -> ExponentMultiset:
        _same_prime(self, other)
        return ExponentMultiset.from_counter(self.prime, self.as_counter() - other.as_counter())

    def orders(self) -> list[int]:
        return [self.prime**e for e in self.exponents()]


def _same_prime(I: ExponentMultiset, J: ExponentMultiset) -> None:
    if I.prime != J.prime:
        raise ValueError(f"multisets over different primes {I.prime} and {J.prime}")


@dataclass(frozen=True)
class PrimaryDecomposition:
    free_rank: int
    parts: Mapping[int, ExponentMultiset] = field(default_factory=dict)

    def part(self, p: int) -> ExponentMultiset:
        return self.parts.get(p, ExponentMultiset(p))

    def to_group(self) -> FgAbelianGroup:
        return FgAbelianGroup.from_orders(
            self.free_rank, [o for m in self.parts.values() for o in m.orders()]
        )


def primary_decomposition(G: FgAbelianGroup) -> PrimaryDecomposition:
    return _primary_decomposition(_as_group(G))


@lru_cache(maxsize=4096)
def _primary_decomposition(G: FgAbelianGroup) -> PrimaryDecomposition:
    acc: dict[int, Counter] = {}
    for d in G.invariant_factors:
        for p, e in factorint(d).items():
            acc.setdefault(p, Counter())[e] += 1
    parts = {p: ExponentMultiset.from_counter(p, c) for p, c in sorted(acc.items())}
    return PrimaryDecomposition(G.free_rank, MappingProxyType(parts))


def multiset_intersection(I: ExponentMultiset, J: ExponentMultiset) -> ExponentMultiset:
    """Largest common sub-multiset whose two leftovers share no exponent.

    Taking ``min`` of the multiplicities is forced: with fewer copies of an
    exponent it would remain in both leftovers, and more copies than one
    side owns is impossible.
    """
    _same_prime(I, J)
    return ExponentMultiset.from_counter(I.prime, I.as_counter() & J.as_counter())


def leftovers(I: ExponentMultiset, J: ExponentMultiset) -> tuple[ExponentMultiset, ExponentMultiset]:
    common = multiset_intersection(I, J)
    return I.difference(common), J.difference(common)


def _interleaves(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """``b1 > a1 > b2 > a2 > ...`` with both sequences read largest first."""
    if len(b) not in (len(a), len(a) + 1):
        return False
    merged = [x for pair in itertools.zip_longest(b, a) for x in pair if x is not None]
    return all(x > y for x, y in zip(merged, merged[1:]))


def satisfies_double_star(Gp: ExponentMultiset, Hp: ExponentMultiset) -> bool:
    """Condition (**) for the ordered pair ``(Gp, Hp)``.

    ``a_i`` are the leftovers of ``Gp`` and ``b_i`` those of ``Hp``; equal
    parts satisfy it trivially.
    """
    A, B = leftovers(Gp, Hp)
    return _interleaves(A.exponents(), B.exponents())


def odd_multiplicity_set(D: ExponentMultiset) -> tuple[int, ...]:
    return tuple(e for e, k in D.counts if k % 2)


def validate_quotient_shape(G: FgAbelianGroup, Q: FgAbelianGroup, w: int) -> bool:
    """Necessary conditions for ``Q = G/Zg`` with ``w(G, g) = w``.

    Checks the rank drop and (**) prime by prime, oriented as
    ``(Q(p), G(p))`` for torsion ``g`` and ``(G(p), Q(p))`` otherwise.
    These conditions are only known to be necessary; use
    :func:`exists_quotient_element` for an actual witness.
    """
    G, Q = _as_group(G), _as_group(Q)
    if w not in (0, 1) or Q.free_rank != G.free_rank - w:
        return False
    dg, dq = primary_decomposition(G), primary_decomposition(Q)
    for p in sorted(set(dg.parts) | set(dq.parts)):
        pair = (dq.part(p), dg.part(p)) if w == 0 else (dg.part(p), dq.part(p))
        if not satisfies_double_star(*pair):
            return False
    return True


def recover_pair(D: FgAbelianGroup, realize: bool = False) -> tuple[FgAbelianGroup, FgAbelianGroup]:
    """Split ``D = G + G/Zg`` back into ``(G, G/Zg)``.

    The parity of ``rank(D)`` gives ``w`` and ``rank(G)``.  At each prime the
    exponents of odd multiplicity, read largest first, alternate between
    the two leftovers; the rest of the multiset is the shared part counted
    twice.  With ``realize=True`` an element ``g`` realizing the pair is
    also searched for and its absence raises :class:`NotRecoverable`.
    """
    D = _as_group(D)
    w = D.free_rank % 2
    rank_g = (D.free_rank + w) // 2
    rank_q = D.free_rank - rank_g

    g_orders: list[int] = []
    q_orders: list[int] = []
    for p, part in primary_decomposition(D).parts.items():
        odd = odd_multiplicity_set(part)
        bs, as_ = odd[0::2], odd[1::2]
        q_left, g_left = (bs, as_) if w else (as_, bs)
        rest = part.as_counter() - Counter(odd)
        if any(k % 2 for k in rest.values()):
            raise NotRecoverable(f"{D}: shared part at p={p} is not doubled")
        shared = [e for e, k in rest.items() for _ in range(k // 2)]
        g_orders += [p**e for e in itertools.chain(shared, g_left)]
        q_orders += [p**e for e in itertools.chain(shared, q_left)]

    G = FgAbelianGroup.from_orders(rank_g, g_orders)
    Q = FgAbelianGroup.from_orders(rank_q, q_orders)
    if G + Q != D or not validate_quotient_shape(G, Q, w):
        raise NotRecoverable(f"{D} is not of the form G + G/Zg")
    if realize and exists_quotient_element(G, Q) is None:
        raise NotRecoverable(f"no g in {G} with G/Zg = {Q}")
    return G, Q


def exists_quotient_element(G: FgAbelianGroup, Q: FgAbelianGroup) -> tuple[int, ...] | None:
    """Some ``g`` in canonical coordinates of ``G`` with ``G/Zg = Q``, or None.

    Up to automorphisms of ``G = Z^r + T`` every element has the form
    ``(m e_1, t)`` with ``m >= 0`` the content of its free part, and ``t``
    only matters modulo ``mT`` (shear ``e_1 -> e_1 + s``).  For ``m > 0``
    the finite part of ``G/Zg`` has order ``m |T|``, so ``m`` never
    exceeds ``|Tor Q|``; values of ``m`` inconsistent with the rank and
    the torsion order of ``Q`` are skipped outright.
    """
    G, Q = _as_group(G), _as_group(Q)
    r = G.free_rank
    T = G.invariant_factors
    tq = Q.torsion_order
    for m in range(0, tq + 1):
        if m == 0:
            if Q.free_rank != r or G.torsion_order % tq:
                continue
            ranges = [range(d) for d in T]
        else:
            if r == 0 or Q.free_rank != r - 1 or m * G.torsion_order != tq:
                continue
            ranges = [range(math.gcd(m, d)) for d in T]
        head = (m,) + (0,) * (r - 1) if r else ()
        for t in itertools.product(*ranges):
            g = head + t
            if quotient_by_element(PointedGroup.in_group(G, g)) == Q:
                return g
    return None
