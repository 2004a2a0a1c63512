"""Brute-force ground truth for the test suites.

Nothing in the library proper imports this module.  It enumerates small
groups and pointed groups, decides pointed isomorphism by searching over
homomorphisms, searches for quotient elements without the orbit
reduction, and generates random presentations and K-triples.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator

from .groups import (
    FgAbelianGroup,
    GroupPresentation,
    PointedGroup,
    canonicalize,
    quotient_by_element,
)
from .kirchberg import KTriple
from .linalg import IntMatrix


class BoundsExceeded(ValueError):
    """Input lies outside the range the brute-force oracle is certified for."""


@dataclass(frozen=True)
class EnumerationBounds:
    max_free_rank: int = 2
    max_torsion_order: int = 32
    max_coordinate: int = 4

    def __post_init__(self):
        if min(self.max_free_rank, self.max_torsion_order, self.max_coordinate) < 0:
            raise ValueError("bounds must be non-negative")


@dataclass
class Coverage:
    """Counts of oracle checks performed and skipped as out of bounds."""

    name: str
    checked: int = 0
    skipped: int = 0
    notes: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        return f"{self.name}: {self.checked} checked, {self.skipped} skipped"


def factor_chains(max_order: int) -> Iterator[tuple[int, ...]]:
    """Invariant-factor chains ``d1 | d2 | ...`` with product <= max_order."""

    def extend(chain, prod):
        yield chain
        last = chain[-1] if chain else 1
        d = max(2, last)
        while prod * d <= max_order:
            if d % last == 0:
                yield from extend(chain + (d,), prod * d)
            d += 1

    yield from extend((), 1)


def enumerate_groups(b: EnumerationBounds = EnumerationBounds()) -> list[FgAbelianGroup]:
    chains = sorted(factor_chains(b.max_torsion_order), key=lambda c: (math.prod(c), c))
    return [FgAbelianGroup(r, c) for r in range(b.max_free_rank + 1) for c in chains]


def group_elements(G: FgAbelianGroup, box: int) -> Iterator[tuple[int, ...]]:
    ranges = [range(-box, box + 1)] * G.free_rank + [range(d) for d in G.invariant_factors]
    return itertools.product(*ranges)


def enumerate_pointed(G: FgAbelianGroup, b: EnumerationBounds = EnumerationBounds()) -> list[PointedGroup]:
    P = G.presentation()
    return [PointedGroup(P, g) for g in group_elements(G, b.max_coordinate)]


def _brute_order(x: tuple[int, ...], mods: tuple[int, ...]) -> int:
    k, y = 1, x
    while any(y):
        y = tuple((a + b) % m for a, b, m in zip(y, x, mods))
        k += 1
    return k


def brute_pointed_iso(pg1: PointedGroup, pg2: PointedGroup, node_limit: int = 500_000) -> bool:
    """Search for a bijective homomorphism ``G1 -> G2`` taking ``g1`` to ``g2``.

    Generators of ``G1`` (canonical basis) are sent one at a time to
    candidate images in ``G2``; a partial assignment survives only while
    the map on the subgroup generated so far stays injective.  Free rank
    at most 1 and torsion order at most 64 are supported.  For rank 1 the
    free generator goes to ``(a, s)`` with ``s`` any torsion element and
    ``a = +-1``, the only values for which a block-triangular map can be
    bijective.
    """
    c1, c2 = canonicalize(pg1.presentation), canonicalize(pg2.presentation)
    G1, G2 = c1.group, c2.group
    for G in (G1, G2):
        if G.free_rank > 1 or G.torsion_order > 64:
            raise BoundsExceeded(f"{G} outside the brute-force range")
    if G1.free_rank != G2.free_rank or G1.torsion_order != G2.torsion_order:
        return False
    x1, x2 = c1.coordinates(pg1.element), c2.coordinates(pg2.element)
    r = G1.free_rank
    m1, t1 = x1[:r], x1[r:]
    m2, t2 = x2[:r], x2[r:]
    d1, d2 = G1.invariant_factors, G2.invariant_factors
    if r and abs(m1[0]) != abs(m2[0]):
        return False
    if not r and _brute_order(t1, d1) != _brute_order(t2, d2):
        return False

    elems2 = list(itertools.product(*[range(d) for d in d2]))
    zero = tuple(0 for _ in d2)

    def add(u, v, k=1):
        return tuple((a + k * b) % f for a, b, f in zip(u, v, d2))

    # Generators carrying g1 go first: once they are placed phi(g1) is
    # fixed, and the rest only has to extend injectively.
    order = sorted(range(len(d1)), key=lambda i: t1[i] == 0)
    support = sum(1 for i in order if t1[i])
    candidates = {
        i: [x for x in elems2 if all((d1[i] * a) % f == 0 for a, f in zip(x, d2))] for i in order
    }
    nodes = 0

    def extend(subgroup, x, d):
        # Subgroup generated by ``subgroup`` and ``x`` if <x> meets it
        # trivially and x has order d; otherwise None.
        multiples = [zero]
        y = zero
        for _ in range(d - 1):
            y = add(y, x)
            if y in subgroup:
                return None
            multiples.append(y)
        return {add(sg, mu) for sg in subgroup for mu in multiples}

    def dfs(k, subgroup, acc, target):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise BoundsExceeded("search budget exhausted")
        if k == support and acc != target:
            return False
        if k == len(order):
            return True
        i = order[k]
        for x in candidates[i]:
            new = extend(subgroup, x, d1[i])
            if new is not None and dfs(k + 1, new, add(acc, x, t1[i]), target):
                return True
        return False

    if not r:
        return dfs(0, {zero}, zero, t2)
    # Free generator -> (a, s); s only matters when g1 has a free part.
    shifts = elems2 if m1[0] else [zero]
    for a in (1, -1):
        if a * m1[0] != m2[0]:
            continue
        for s in shifts:
            if dfs(0, {zero}, zero, add(t2, s, -m1[0])):
                return True
    return False


def brute_quotient_search(
    G: FgAbelianGroup, Q: FgAbelianGroup, b: EnumerationBounds = EnumerationBounds()
) -> tuple[int, ...] | None:
    """First element in the coordinate box with ``G/Zg = Q``, or None."""
    P = G.presentation()
    for g in group_elements(G, b.max_coordinate):
        if quotient_by_element(PointedGroup(P, g)) == Q:
            return g
    return None


# ---------------------------------------------------------------- generators


def random_unimodular(n: int, rng: random.Random, steps: int = 12, spread: int = 3) -> IntMatrix:
    """Product of random elementary matrices (determinant +-1)."""
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-spread, spread)
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
    if n and rng.random() < 0.5:
        k = rng.randrange(n)
        a[k] = [-x for x in a[k]]
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        a[i], a[j] = a[j], a[i]
    return IntMatrix.from_rows(a, n)


def random_presentation(pg: PointedGroup, rng: random.Random, extra: int = 1) -> PointedGroup:
    """The same pointed group on a randomly scrambled presentation.

    Adds ``extra`` trivial generators (each with relation ``1``), then
    changes generators by a random unimodular ``P`` and mixes relations by
    a random unimodular ``Q``.  The element is transported by ``P``.
    """
    base = pg.presentation
    n0 = base.generators
    n = n0 + extra
    rel = base.relations
    rows = [list(r) + [0] * extra for r in rel.rows]
    rows += [[0] * rel.ncols + [int(i == k) for i in range(extra)] for k in range(extra)]
    R = IntMatrix.from_rows(rows, rel.ncols + extra)
    P = random_unimodular(n, rng)
    Q = random_unimodular(R.ncols, rng)
    # Extra generators are zero in the group, so their coordinates are arbitrary.
    g = tuple(pg.element) + tuple(rng.randint(-2, 2) for _ in range(extra))
    return PointedGroup(GroupPresentation(n, P @ R @ Q), P.apply(g))


def random_group(rng: random.Random, max_rank: int = 3, max_torsion: int = 27) -> FgAbelianGroup:
    chains = list(factor_chains(max_torsion))
    return FgAbelianGroup(rng.randint(0, max_rank), rng.choice(chains))


def random_triple(
    rng: random.Random, max_rank: int = 3, max_torsion: int = 27, scramble: bool = True
) -> KTriple:
    G = random_group(rng, max_rank, max_torsion)
    g = tuple(rng.randint(-3, 3) for _ in range(G.free_rank)) + tuple(
        rng.randrange(d) for d in G.invariant_factors
    )
    if G.free_rank and rng.random() < 0.3:
        g = (0,) * G.free_rank + g[G.free_rank :]
    pg = PointedGroup.in_group(G, g)
    if scramble:
        pg = random_presentation(pg, rng, extra=rng.randint(0, 1))
    return KTriple(pg, random_group(rng, max_rank, max_torsion))


def random_automorphism_image(pg: PointedGroup, rng: random.Random) -> PointedGroup:
    """Image of ``g`` under a random automorphism of the canonical group.

    Composes random elementary automorphisms of ``Z^r + sum Z/d_i``: unit
    scalings, free-basis transvections, and maps ``e_j -> e_j + k e_i``
    that respect the orders.
    """
    c = canonicalize(pg.presentation)
    G = c.group
    r = G.free_rank
    orders = [0] * r + list(G.invariant_factors)
    x = list(c.coordinates(pg.element))
    n = len(orders)
    for _ in range(10):
        if not n:
            break
        kind = rng.random()
        i = rng.randrange(n)
        if kind < 0.3:
            d = orders[i]
            units = [-1, 1] if d == 0 else [u for u in range(1, d) if math.gcd(u, d) == 1]
            x[i] *= rng.choice(units)
        elif n > 1:
            j = rng.choice([k for k in range(n) if k != i])
            # e_j -> e_j + k e_i is a homomorphism iff ord(e_j) * k e_i = 0.
            di, dj = orders[i], orders[j]
            if di == 0 and dj != 0:
                continue
            step = di // math.gcd(di, dj) if di and dj else 1
            k = step * rng.randint(-2, 2)
            x[i] += k * x[j]
        if orders[i]:
            x[i] %= orders[i]
    return PointedGroup.in_group(G, x)


def random_ck_matrix(rng: random.Random, max_n: int = 6, density: float | None = None):
    """Random irreducible non-permutation {0,1} matrix, by rejection."""
    from .cuntz_krieger import CKMatrixError, validate

    while True:
        n = rng.randint(1, max_n)
        p = density if density is not None else rng.uniform(0.3, 0.8)
        rows = [[int(rng.random() < p) for _ in range(n)] for _ in range(n)]
        try:
            return validate(rows)
        except CKMatrixError:
            continue
