"""Cuntz-Krieger algebras from {0,1} matrices.

K-data uses the usual presentation ``K0(O_A) = coker(I - A^t)`` with the
unit at the class of the all-ones vector and ``K1(O_A) = ker(I - A^t)``.
The extension groups are cokernels of ``I - A`` and ``I - A_hat`` with
``A_hat = A + R1 - A R1``, ``R1`` the matrix whose first row is all ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groups import FgAbelianGroup, GroupPresentation, PointedGroup
from .kirchberg import KTriple
from .linalg import IntMatrix, block_diag, cokernel, kernel_rank


class CKMatrixError(ValueError):
    pass


class NotSquare(CKMatrixError):
    pass


class BadEntry(CKMatrixError):
    def __init__(self, position: tuple[int, int], value: int):
        self.position = position
        self.value = value
        i, j = position
        super().__init__(f"entry ({i + 1}, {j + 1}) is {value}, expected 0 or 1")


class Reducible(CKMatrixError):
    def __init__(self, source: int, target: int):
        self.witness = (source, target)
        super().__init__(f"vertex {target + 1} is not reachable from vertex {source + 1}")


class Permutation(CKMatrixError):
    pass


@dataclass(frozen=True)
class CKMatrix:
    """A validated irreducible non-permutation {0,1} matrix."""

    matrix: IntMatrix

    @property
    def n(self) -> int:
        return self.matrix.nrows


def _reachable(adj: list[list[int]], start: int) -> set[int]:
    # Vertices reachable from ``start`` by paths of length >= 1.
    seen: set[int] = set()
    stack = [j for j, x in enumerate(adj[start]) if x]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(j for j, x in enumerate(adj[v]) if x and j not in seen)
    return seen


def validate(raw) -> CKMatrix:
    """Check that ``raw`` defines a simple Cuntz-Krieger algebra.

    Irreducible here means every vertex reaches every vertex (itself
    included) along a path of positive length, which rules out ``[0]``.
    """
    M = raw if isinstance(raw, IntMatrix) else IntMatrix.from_rows(raw)
    n = M.nrows
    if n == 0 or M.ncols != n:
        raise NotSquare(f"expected a non-empty square matrix, got {M.nrows}x{M.ncols}")
    for i, row in enumerate(M.rows):
        for j, x in enumerate(row):
            if x not in (0, 1):
                raise BadEntry((i, j), x)
    adj = M.tolist()
    # Checked first: a permutation matrix with several cycles is also reducible.
    if all(sum(r) == 1 for r in adj) and all(sum(c) == 1 for c in zip(*adj)):
        raise Permutation("permutation matrix")
    for i in range(n):
        reach = _reachable(adj, i)
        if len(reach) < n:
            raise Reducible(i, min(set(range(n)) - reach))
    return CKMatrix(M)


def _ckm(A) -> CKMatrix:
    return A if isinstance(A, CKMatrix) else validate(A)


def a_hat(A) -> IntMatrix:
    """``A + R1 - A R1`` entrywise: ``A(i,j) + [i = 1] - A(i,1)``.

    The result can leave {0,1} (e.g. when ``A(1,1) = 0``) and is returned
    as a plain integer matrix.
    """
    M = _ckm(A).matrix
    return IntMatrix.from_rows(
        [[M[i, j] + (i == 0) - M[i, 0] for j in range(M.ncols)] for i in range(M.nrows)]
    )


def _i_minus(M: IntMatrix) -> IntMatrix:
    return IntMatrix.identity(M.nrows) - M


def k_triple(A) -> KTriple:
    M = _ckm(A).matrix
    rel = _i_minus(M.T)
    k0 = PointedGroup(GroupPresentation(M.nrows, rel), (1,) * M.nrows)
    return KTriple(k0, FgAbelianGroup.free(kernel_rank(rel)))


def ext_weak1_matrix(A) -> FgAbelianGroup:
    """Bowen-Franks group ``coker(I - A)``."""
    return cokernel(_i_minus(_ckm(A).matrix))


def ext_strong1_matrix(A) -> FgAbelianGroup:
    return cokernel(_i_minus(a_hat(A)))


def total_ext1_matrix(A) -> FgAbelianGroup:
    A = _ckm(A)
    return cokernel(_i_minus(block_diag(a_hat(A), A.matrix)))


def iso_ck(A, B) -> bool:
    return total_ext1_matrix(A) == total_ext1_matrix(B)


def all_ones(n: int) -> CKMatrix:
    """The matrix of the Cuntz algebra ``O_n``."""
    return validate(IntMatrix.ones(n))


def conjugate(A, perm: Sequence[int]) -> CKMatrix:
    """``P A P^t`` for the permutation sending vertex ``i`` to ``perm[i]``."""
    M = _ckm(A).matrix
    n = M.nrows
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return validate([[M[inv[i], inv[j]] for j in range(n)] for i in range(n)])
