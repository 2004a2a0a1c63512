"""Finitely generated abelian groups and pointed groups.

A group is stored in canonical form as ``Z^r + Z/d_1 + ... + Z/d_k`` with
``d_1 | d_2 | ... | d_k`` and every ``d_i >= 2``; two groups are isomorphic
exactly when their canonical forms are equal.  Groups that arise as
cokernels are first held as a :class:`GroupPresentation` and brought to
canonical form with :func:`canonicalize`, which also tracks how element
coordinates move.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .linalg import IntMatrix, block_diag, cokernel, smith_normal_form

INFINITE = math.inf


@dataclass(frozen=True)
class FgAbelianGroup:
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")

    @classmethod
    def trivial(cls) -> FgAbelianGroup:
        return cls(0, ())

    @classmethod
    def free(cls, n: int) -> FgAbelianGroup:
        return cls(n, ())

    @classmethod
    def cyclic(cls, n: int) -> FgAbelianGroup:
        """``Z/nZ``; ``n = 0`` gives ``Z`` and ``n = 1`` the trivial group."""
        return cls.from_orders(0, [n])

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> FgAbelianGroup:
        """Normalize ``Z^free_rank + sum Z/orders[i]`` for arbitrary orders.

        Orders may be in any order and may include 0 (a free summand) or
        1 (a trivial summand).
        """
        a = [abs(int(d)) for d in orders]
        # Smith form of a diagonal matrix: replacing (a_i, a_j) by their
        # (gcd, lcm) leaves the cokernel unchanged, and one sweep per
        # position makes a_i divide everything after it.
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                x, y = a[i], a[j]
                g = math.gcd(x, y)
                a[i], a[j] = g, (x // g * y if g else 0)
        return cls(free_rank + a.count(0), tuple(d for d in a if d > 1))

    @property
    def rank(self) -> int:
        return self.free_rank

    @property
    def ngens(self) -> int:
        """Number of generators in the canonical presentation."""
        return self.free_rank + len(self.invariant_factors)

    @property
    def torsion(self) -> FgAbelianGroup:
        return FgAbelianGroup(0, self.invariant_factors)

    @property
    def torsion_order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def relation_matrix(self) -> IntMatrix:
        r = self.free_rank
        k = len(self.invariant_factors)
        rows = [[0] * k for _ in range(r + k)]
        for i, d in enumerate(self.invariant_factors):
            rows[r + i][i] = d
        return IntMatrix.from_rows(rows, k)

    def presentation(self) -> GroupPresentation:
        return GroupPresentation(self.ngens, self.relation_matrix())

    def __add__(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return direct_sum(self, other)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupPresentation:
    """``Z^generators`` modulo the column span of ``relations``."""

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.nrows != self.generators:
            raise ValueError(
                f"relation matrix has {self.relations.nrows} rows for "
                f"{self.generators} generators"
            )

    @classmethod
    def from_relations(cls, n: int, columns: Sequence[Sequence[int]] = ()) -> GroupPresentation:
        """Build from a list of relation vectors, each of length ``n``."""
        rel = IntMatrix.from_rows(zip(*columns), len(columns)) if columns else IntMatrix.zeros(n, 0)
        return cls(n, rel)

    @classmethod
    def free(cls, n: int) -> GroupPresentation:
        return cls(n, IntMatrix.zeros(n, 0))

    def direct_sum(self, other: GroupPresentation) -> GroupPresentation:
        return GroupPresentation(
            self.generators + other.generators, block_diag(self.relations, other.relations)
        )


@dataclass(frozen=True)
class Canonicalization:
    """Canonical form of a presentation plus the coordinate change into it."""

    group: FgAbelianGroup
    U: IntMatrix
    free_rows: tuple[int, ...]
    torsion_rows: tuple[int, ...]

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of ``v`` in the canonical generators.

        Free coordinates come first, then torsion coordinates reduced into
        ``[0, d_i)``.
        """
        y = self.U.apply(v)
        free = tuple(y[i] for i in self.free_rows)
        tors = tuple(y[i] % d for i, d in zip(self.torsion_rows, self.group.invariant_factors))
        return free + tors


@lru_cache(maxsize=4096)
def canonicalize(P: GroupPresentation) -> Canonicalization:
    """Canonical form of ``P`` via its Smith normal form.

    With ``U R V = D`` the row transform ``U`` is a change of generators
    under which the relations become diagonal; rows with ``d_i = 1`` are
    dropped, rows with ``d_i = 0`` (or beyond the diagonal) are free.
    """
    snf = smith_normal_form(P.relations)
    d = snf.diagonal
    n = P.generators
    free_rows = tuple(i for i in range(n) if i >= len(d) or d[i] == 0)
    torsion_rows = tuple(i for i in range(len(d)) if d[i] > 1)
    group = FgAbelianGroup(len(free_rows), tuple(d[i] for i in torsion_rows))
    return Canonicalization(group, snf.U, free_rows, torsion_rows)


@dataclass(frozen=True)
class PointedGroup:
    """A group together with a distinguished element ``g``.

    ``element`` holds the coordinates of ``g`` in the presentation's
    generators.
    """

    presentation: GroupPresentation
    element: tuple[int, ...] = field(default=())

    def __post_init__(self):
        el = tuple(int(x) for x in self.element)
        object.__setattr__(self, "element", el)
        if len(el) != self.presentation.generators:
            raise ValueError(
                f"element has {len(el)} coordinates but the group has "
                f"{self.presentation.generators} generators"
            )

    @classmethod
    def in_group(cls, G: FgAbelianGroup, element: Sequence[int]) -> PointedGroup:
        """Pointed group on the canonical presentation of ``G``."""
        return cls(G.presentation(), tuple(element))

    @property
    def group(self) -> FgAbelianGroup:
        return canonicalize(self.presentation).group

    def canonical(self) -> PointedGroup:
        """The same pointed group re-expressed on the canonical presentation."""
        c = canonicalize(self.presentation)
        return PointedGroup(c.group.presentation(), c.coordinates(self.element))

    def canonical_element(self) -> tuple[int, ...]:
        return canonicalize(self.presentation).coordinates(self.element)

    def direct_sum(self, other: PointedGroup) -> PointedGroup:
        return PointedGroup(
            self.presentation.direct_sum(other.presentation), self.element + other.element
        )


def _as_group(G) -> FgAbelianGroup:
    if isinstance(G, FgAbelianGroup):
        return G
    if isinstance(G, GroupPresentation):
        return canonicalize(G).group
    if isinstance(G, PointedGroup):
        return G.group
    raise TypeError(f"not a group: {G!r}")


def direct_sum(*groups: FgAbelianGroup) -> FgAbelianGroup:
    """Canonical form of the direct sum, re-normalizing the factor chain."""
    groups = [_as_group(G) for G in groups]
    return FgAbelianGroup.from_orders(
        sum(G.free_rank for G in groups),
        [d for G in groups for d in G.invariant_factors],
    )


def quotient_by_element(pg: PointedGroup) -> FgAbelianGroup:
    """``G / Zg`` as the cokernel of the relations augmented by ``g``."""
    P = pg.presentation
    return cokernel(P.relations.hstack(IntMatrix.column(pg.element)))


def element_order(pg: PointedGroup) -> int | float:
    """Order of ``g``; ``INFINITE`` (``math.inf``) for non-torsion elements."""
    c = canonicalize(pg.presentation)
    coords = c.coordinates(pg.element)
    r = c.group.free_rank
    if any(coords[:r]):
        return INFINITE
    return math.lcm(1, *(d // math.gcd(d, x) for d, x in zip(c.group.invariant_factors, coords[r:])))


def w_invariant(pg: PointedGroup) -> int:
    """``rank(G) - rank(G/Zg)``: 0 for torsion ``g``, 1 otherwise."""
    return pg.group.free_rank - quotient_by_element(pg).free_rank


def is_isomorphic(G, H) -> bool:
    return _as_group(G) == _as_group(H)


def pointed_isomorphic(pg1: PointedGroup, pg2: PointedGroup) -> bool:
    """Whether some isomorphism ``G1 -> G2`` carries ``g1`` to ``g2``.

    For finitely generated groups this holds exactly when ``G1 = G2`` and
    ``G1/Zg1 = G2/Zg2``, so two canonical-form comparisons decide it.
    """
    return pg1.group == pg2.group and quotient_by_element(pg1) == quotient_by_element(pg2)
