"""Exact integer matrix algebra.

Everything here works over Python's arbitrary-precision ``int``; no
fixed-width arithmetic is used anywhere.  The central routine is
:func:`smith_normal_form`, which every group-valued invariant in the
package is eventually reduced to.

>>> M = IntMatrix.from_rows([[2, 4], [6, 8]])
>>> smith_normal_form(M).diagonal
(2, 4)
>>> cokernel(IntMatrix.identity(3) - IntMatrix.ones(3))
FgAbelianGroup(free_rank=0, invariant_factors=(2,))
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

# Tests flip this on so that every SNF call re-checks U*M*V == D,
# unimodularity and the divisibility chain.
VERIFY = False


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples.

    ``ncols`` is kept explicitly so that matrices with zero rows still
    carry their width.
    """

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError("negative column count")
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(
                    f"ragged matrix: row of length {len(r)}, expected {self.ncols}"
                )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls(tuple((0,) * n for _ in range(m)), n)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def ones(cls, n: int, m: int | None = None) -> IntMatrix:
        m = n if m is None else m
        return cls(tuple((1,) * m for _ in range(n)), m)

    @classmethod
    def diag(cls, entries: Sequence[int], m: int | None = None, n: int | None = None) -> IntMatrix:
        k = len(entries)
        m = k if m is None else m
        n = k if n is None else n
        rows = [[0] * n for _ in range(m)]
        for i, d in enumerate(entries):
            rows[i][i] = int(d)
        return cls.from_rows(rows, n)

    @classmethod
    def column(cls, v: Sequence[int]) -> IntMatrix:
        return cls(tuple((int(x),) for x in v), 1)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> IntMatrix:
        if not self.rows:
            return IntMatrix(tuple(() for _ in range(self.ncols)), 0)
        return IntMatrix(tuple(zip(*self.rows)), self.nrows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def entries(self) -> list[int]:
        """Entries in row-major order."""
        return [x for r in self.rows for x in r]

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.rows
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
            other.ncols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.nrows != other.nrows:
            raise ValueError("hstack needs equal row counts")
        return IntMatrix(
            tuple(r + s for r, s in zip(self.rows, other.rows)), self.ncols + other.ncols
        )

    def det(self) -> int:
        return determinant(self)

    def _same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __str__(self) -> str:
        if not self.rows:
            return f"[] (0x{self.ncols})"
        width = max(len(str(x)) for r in self.rows for x in r) if self.ncols else 0
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    m = sum(b.nrows for b in blocks)
    n = sum(b.ncols for b in blocks)
    rows = [[0] * n for _ in range(m)]
    i0 = j0 = 0
    for b in blocks:
        for i, r in enumerate(b.rows):
            rows[i0 + i][j0 : j0 + b.ncols] = r
        i0 += b.nrows
        j0 += b.ncols
    return IntMatrix.from_rows(rows, n)


def determinant(M: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = M.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * akk - a[i][k] * a[k][j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(M: IntMatrix) -> int:
    """Rank over Q, computed with fraction-free row reduction."""
    a = M.tolist()
    m, n = M.shape
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            if f:
                row = [p * x - f * y for x, y in zip(a[i], a[r])]
                g = gcd(*row)
                a[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == m:
            break
    return r


def kernel_rank(M: IntMatrix) -> int:
    """Rank of the integer kernel ``{v : M v = 0}``."""
    return M.ncols - rank(M)


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        m, n = self.D.shape
        return tuple(self.D[i, i] for i in range(min(m, n)))


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Smith normal form with transformation matrices.

    Pivoting picks the entry of least absolute value in the active block;
    rows and columns are reduced by Euclidean steps until the pivot
    divides everything that remains, so the diagonal comes out as a
    non-negative divisibility chain with zeros trailing.  ``U``, ``V``
    are not unique; only ``D`` is.
    """
    m, n = M.shape
    a = M.tolist()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    # V is kept transposed so column operations become row operations.
    vt = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        vt[j], vt[k] = vt[k], vt[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        vt[dst] = [x + q * y for x, y in zip(vt[dst], vt[src])]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)

        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = -_round_div(a[i][t], p)
                    add_row(i, t, q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = -_round_div(a[t][j], p)
                    add_col(j, t, q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # A remainder smaller than the pivot survived; promote it.
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(i, t)
                if j != t:
                    swap_cols(j, t)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    res = SnfResult(
        U=IntMatrix.from_rows(u, m),
        D=IntMatrix.from_rows(a, n),
        V=IntMatrix.from_rows(vt, n).T,
    )
    if VERIFY:
        check_snf(M, res)
    return res


def _round_div(a: int, b: int) -> int:
    """Nearest-integer quotient, keeping remainders at most |b|/2."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else -1
    return q


def check_snf(M: IntMatrix, res: SnfResult) -> None:
    """Raise ``AssertionError`` unless ``res`` is a valid SNF of ``M``."""
    m, n = M.shape
    assert res.U.shape == (m, m) and res.V.shape == (n, n) and res.D.shape == (m, n)
    assert res.U @ M @ res.V == res.D, "U*M*V != D"
    assert abs(determinant(res.U)) == 1, "U is not unimodular"
    assert abs(determinant(res.V)) == 1, "V is not unimodular"
    for i in range(m):
        for j in range(n):
            if i != j:
                assert res.D[i, j] == 0, "D is not diagonal"
    d = res.diagonal
    assert all(x >= 0 for x in d), "negative diagonal entry"
    for x, y in zip(d, d[1:]):
        if x == 0:
            assert y == 0, "zeros must trail"
        else:
            assert y % x == 0, "divisibility chain broken"


def cokernel(M: IntMatrix):
    """Canonical form of ``Z^n / M Z^m`` for an ``n x m`` matrix ``M``."""
    from .groups import FgAbelianGroup

    d = smith_normal_form(M).diagonal
    nonzero = [x for x in d if x]
    return FgAbelianGroup(M.nrows - len(nonzero), tuple(x for x in nonzero if x > 1))
