import itertools
import random

import pytest

from kinvariants.cuntz_krieger import (
    BadEntry,
    NotSquare,
    Permutation,
    Reducible,
    a_hat,
    all_ones,
    conjugate,
    ext_strong1_matrix,
    ext_weak1_matrix,
    iso_ck,
    k_triple,
    total_ext1_matrix,
    validate,
)
from kinvariants.groups import FgAbelianGroup, direct_sum, pointed_isomorphic
from kinvariants.kirchberg import (
    KTriple,
    chi,
    ext_data,
    iso_by_ext_triple,
    iso_by_mixed,
    iso_by_total_ext,
    iso_triple,
)
from kinvariants.linalg import IntMatrix
from kinvariants.oracle import random_ck_matrix

Z = FgAbelianGroup.free(1)
T0 = FgAbelianGroup.trivial()
C = FgAbelianGroup.cyclic
GOLDEN = [[1, 1], [1, 0]]


def corpus(seed=0, count=60):
    rng = random.Random(seed)
    return [random_ck_matrix(rng) for _ in range(count)]


class TestValidate:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_all_ones(self, n):
        assert validate(IntMatrix.ones(n)).n == n

    def test_permutation(self):
        with pytest.raises(Permutation):
            validate([[1, 0], [0, 1]])
        with pytest.raises(Permutation):
            validate([[0, 1], [1, 0]])
        with pytest.raises(Permutation):
            validate([[1]])

    def test_reducible(self):
        with pytest.raises(Reducible) as err:
            validate([[1, 1], [0, 1]])
        assert err.value.witness == (1, 0)
        assert "vertex 1" in str(err.value)
        with pytest.raises(Reducible):
            validate([[0]])

    def test_bad_entry(self):
        with pytest.raises(BadEntry) as err:
            validate([[1, 2], [1, 1]])
        assert err.value.position == (0, 1) and err.value.value == 2
        assert "(1, 2)" in str(err.value)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            validate(IntMatrix.from_rows([[1, 1]]))
        with pytest.raises(NotSquare):
            validate(IntMatrix.zeros(0, 0))

    def test_exhaustive_small(self):
        # Strong connectivity compared with transitive closure by matrix powers.
        for n in (1, 2, 3):
            for bits in itertools.product((0, 1), repeat=n * n):
                rows = [list(bits[i * n : (i + 1) * n]) for i in range(n)]
                A = IntMatrix.from_rows(rows)
                reach, P = [[0] * n for _ in range(n)], A
                for _ in range(n):
                    reach = [[int(reach[i][j] or P[i, j]) for j in range(n)] for i in range(n)]
                    P = P @ A
                irreducible = all(all(r) for r in reach)
                perm = all(sum(r) == 1 for r in rows) and all(sum(c) == 1 for c in zip(*rows))
                try:
                    validate(rows)
                    ok = True
                except (Reducible, Permutation):
                    ok = False
                assert ok == (irreducible and not perm)


class TestAHat:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_all_ones(self, n):
        R1 = IntMatrix.from_rows([[1] * n] + [[0] * n] * (n - 1))
        assert a_hat(all_ones(n)) == R1

    def test_golden_mean(self):
        assert a_hat(GOLDEN) == IntMatrix.from_rows([[1, 1], [0, -1]])

    def test_first_column_ones(self):
        A = [[1, 0, 1], [1, 1, 0], [1, 1, 1]]
        got = a_hat(A)
        for i in range(3):
            for j in range(3):
                assert got[i, j] == A[i][j] + (i == 0) - 1

    def test_matrix_formula(self):
        # A + R1 - A R1 as matrices.
        for A in corpus(1, 20):
            M, n = A.matrix, A.n
            R1 = IntMatrix.from_rows([[1] * n] + [[0] * n] * (n - 1))
            assert a_hat(A) == M + R1 - M @ R1

    def test_leaves_zero_one_when_a11_is_zero(self):
        A = [[0, 1], [1, 1]]
        assert a_hat(A)[0, 1] == 2


class TestKTriple:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_cuntz(self, n):
        t = k_triple(all_ones(n))
        expected = KTriple.from_groups(C(n - 1), (1,) if n > 2 else (), T0)
        assert iso_triple(t, expected)
        assert t.k1 == T0

    def test_golden_mean(self):
        t = k_triple(GOLDEN)
        assert t.k0.group == T0 and t.k1 == T0
        assert iso_triple(t, k_triple(all_ones(2)))

    def test_full_two_by_two(self):
        assert iso_triple(k_triple([[1, 1], [1, 1]]), k_triple(all_ones(2)))

    def test_corpus_properties(self):
        for A in corpus(2):
            t = k_triple(A)
            assert chi(t) == 0
            assert not t.k1.invariant_factors
            e = ext_data(t)
            assert not e.ext_w0.invariant_factors


class TestMatrixRoute:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_weak(self, n):
        assert ext_weak1_matrix(all_ones(n)) == (C(n - 1) if n > 2 else T0)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_strong(self, n):
        assert ext_strong1_matrix(all_ones(n)) == Z

    def test_golden_strong(self):
        assert ext_strong1_matrix(GOLDEN) == Z

    def test_total(self):
        assert total_ext1_matrix(all_ones(2)) == Z
        assert total_ext1_matrix(all_ones(3)) == FgAbelianGroup(1, (2,))
        for A in corpus(3, 30):
            assert total_ext1_matrix(A) == direct_sum(ext_strong1_matrix(A), ext_weak1_matrix(A))

    def test_against_triple_route(self):
        for A in corpus(4, 200):
            t = k_triple(A)
            e = ext_data(t)
            assert ext_strong1_matrix(A) == e.ext_s1
            assert ext_weak1_matrix(A) == FgAbelianGroup(t.k1.rank, t.k0.group.invariant_factors)
            assert ext_weak1_matrix(A) == e.ext_w1


class TestIso:
    def test_examples(self):
        E2, E3 = all_ones(2), all_ones(3)
        assert iso_ck(E2, E2)
        assert not iso_ck(E2, E3)
        assert iso_ck(GOLDEN, E2)

    def test_conjugates(self):
        rng = random.Random(6)
        for A in corpus(5, 30):
            perm = list(range(A.n))
            rng.shuffle(perm)
            B = conjugate(A, perm)
            assert iso_ck(A, B)
            assert pointed_isomorphic(k_triple(A).k0, k_triple(B).k0)

    def test_agrees_with_deciders(self):
        mats = corpus(7, 25) + [all_ones(n) for n in range(2, 6)]
        ts = [k_triple(A) for A in mats]
        for i, j in itertools.combinations_with_replacement(range(len(mats)), 2):
            v = iso_ck(mats[i], mats[j])
            for f in (iso_triple, iso_by_ext_triple, iso_by_total_ext, iso_by_mixed):
                assert f(ts[i], ts[j]) == v
