import random

import pytest

from kinvariants.cuntz_krieger import all_ones, k_triple
from kinvariants.groups import (
    FgAbelianGroup,
    PointedGroup,
    direct_sum,
    pointed_isomorphic,
    quotient_by_element,
    w_invariant,
)
from kinvariants.kirchberg import (
    Half,
    HierarchyClass,
    KTriple,
    chi,
    ck_ext_range_check,
    ext_data,
    ext_total,
    ext_triple_range_check,
    hierarchy_class,
    iso_by_ext_triple,
    iso_by_mixed,
    iso_by_total_ext,
    iso_triple,
    mapping_cone_kgroups,
    reciprocal_dual,
    spanier_whitehead_dual_kgroups,
    w_of,
)
from kinvariants.oracle import random_automorphism_image, random_group, random_triple

Z = FgAbelianGroup.free(1)
T0 = FgAbelianGroup.trivial()
C = FgAbelianGroup.cyclic


def triple(k0, unit, k1=T0):
    return KTriple.from_groups(k0, unit, k1)


def O(n):
    return triple(C(n - 1), (1,) if n > 2 else ())


O_INF = triple(Z, (1,))
P_INF = triple(T0, (), Z)
DECIDERS = [iso_triple, iso_by_ext_triple, iso_by_total_ext, iso_by_mixed]


class TestChiAndW:
    def test_chi(self):
        assert chi(O(5)) == 0
        assert chi(O_INF) == 1
        assert chi(P_INF) == -1

    def test_w(self):
        assert w_of(O(4)) == 0
        assert w_of(O_INF) == 1
        assert w_of(triple(FgAbelianGroup(1, (2,)), (0, 1))) == 0

    def test_hierarchy(self):
        assert hierarchy_class(P_INF) == HierarchyClass(-1, 0, Half.NON_POSITIVE)
        assert hierarchy_class(O(3)) == HierarchyClass(0, 0, Half.NON_POSITIVE)
        assert hierarchy_class(O_INF) == HierarchyClass(1, 1, Half.POSITIVE)

    def test_chi_additive(self):
        rng = random.Random(3)
        for _ in range(50):
            a, b = random_triple(rng), random_triple(rng)
            assert chi(a.direct_sum(b)) == chi(a) + chi(b)
            # The value of the unit does not enter.
            zero_unit = KTriple(
                a.k0.direct_sum(PointedGroup(b.k0.presentation, (0,) * b.k0.presentation.generators)),
                direct_sum(a.k1, b.k1),
            )
            assert chi(zero_unit) == chi(a) + chi(b)


class TestMappingCone:
    def test_examples(self):
        assert mapping_cone_kgroups(O(2)) == (Z, T0)
        assert mapping_cone_kgroups(O_INF) == (T0, T0)
        k0c, k1c = mapping_cone_kgroups(triple(FgAbelianGroup(1, (2,)), (2, 0)))
        assert k1c == FgAbelianGroup(0, (2, 2)) and k0c == T0

    def test_euler_characteristic(self):
        # Exactness of 0 -> K1 -> K0(C) -> Z -> K0 -> K1(C) -> 0 on ranks.
        rng = random.Random(11)
        for _ in range(100):
            t = random_triple(rng)
            k0c, k1c = mapping_cone_kgroups(t)
            assert t.k1.rank - k0c.rank + 1 - t.k0.group.rank + k1c.rank == 0


class TestExtData:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_cuntz(self, n):
        e = ext_data(O(n))
        assert e.ext_w1 == (C(n - 1) if n > 2 else T0)
        assert e.ext_s1 == Z
        assert e.ext_w0 == T0 and e.ext_s0 == T0

    def test_o_infinity(self):
        e = ext_data(O_INF)
        assert (e.ext_s1, e.ext_w1, e.ext_w0, e.ext_s0) == (T0, T0, Z, T0)

    def test_p_infinity(self):
        e = ext_data(P_INF)
        assert (e.ext_w1, e.ext_s1, e.ext_w0, e.ext_s0) == (Z, FgAbelianGroup.free(2), T0, T0)
        # Z^2 / Z iota = Z forces iota to be primitive.
        assert quotient_by_element(e.iota) == Z

    def test_totals(self):
        assert ext_total(O(2), 1) == Z
        assert ext_total(O(2), 0) == T0
        assert ext_total(P_INF, 1) == FgAbelianGroup.free(3)
        with pytest.raises(ValueError):
            ext_total(O(2), 2)

    def test_six_term_consequences(self):
        rng = random.Random(17)
        for _ in range(150):
            t = random_triple(rng)
            e = ext_data(t)
            assert e.iota.group == e.ext_s1
            assert quotient_by_element(e.iota) == e.ext_w1
            assert e.ext_w0 == e.ext_s0 + FgAbelianGroup.free(1 - w_invariant(e.iota))
            assert e.ext_t1 == ext_total(t, 1) and e.ext_t0 == ext_total(t, 0)


class TestReciprocalDual:
    def test_cuntz_pair(self):
        assert iso_triple(reciprocal_dual(O(2)), O_INF)
        assert iso_triple(reciprocal_dual(O_INF), O(2))

    def test_mixed_example(self):
        t = triple(FgAbelianGroup(1, (2,)), (1, 0), C(3))
        d = reciprocal_dual(t)
        assert d.k0.group == C(2) and d.k1 == C(3)
        assert quotient_by_element(d.k0) == C(2)  # iota = 0
        assert iso_triple(reciprocal_dual(d), t)

    def test_laws_on_random_triples(self):
        rng = random.Random(23)
        for _ in range(150):
            t = random_triple(rng)
            d = reciprocal_dual(t)
            assert chi(t) + chi(d) == 1
            assert w_of(t) + w_of(d) == 1
            assert iso_triple(reciprocal_dual(d), t)
            # The dual's cone sequence is the original six-term sequence.
            e = ext_data(t)
            assert mapping_cone_kgroups(d) == (e.ext_w0, e.ext_w1)


class TestSpanierWhitehead:
    def test_examples(self):
        assert spanier_whitehead_dual_kgroups(Z, T0) == (Z, T0)
        assert spanier_whitehead_dual_kgroups(C(5), T0) == (T0, C(5))
        assert spanier_whitehead_dual_kgroups(FgAbelianGroup(1, (2,)), C(3)) == (
            FgAbelianGroup(1, (3,)),
            C(2),
        )

    def test_involution(self):
        rng = random.Random(2)
        for _ in range(50):
            g0, g1 = random_group(rng), random_group(rng)
            assert spanier_whitehead_dual_kgroups(*spanier_whitehead_dual_kgroups(g0, g1)) == (g0, g1)


class TestDeciders:
    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (O(4), O(4), True),
            (O(2), O_INF, False),
            (triple(C(4), (1,)), triple(C(4), (3,)), True),
            (triple(C(4), (1,)), triple(C(4), (2,)), False),
            (O(3), P_INF, False),
        ],
    )
    def test_examples(self, a, b, expected):
        assert [f(a, b) for f in DECIDERS] == [expected] * 4

    def test_automorphism_images_are_isomorphic(self):
        rng = random.Random(29)
        for _ in range(100):
            t = random_triple(rng, scramble=False)
            u = KTriple(random_automorphism_image(t.k0, rng), t.k1)
            assert pointed_isomorphic(t.k0, u.k0)
            assert all(f(t, u) for f in DECIDERS)

    def test_cuntz_family_separated(self):
        ts = [k_triple(all_ones(n)) for n in range(2, 9)]
        for i, a in enumerate(ts):
            for j, b in enumerate(ts):
                assert [f(a, b) for f in DECIDERS] == [i == j] * 4


class TestRangeChecks:
    def test_ext_triple_range(self):
        assert ext_triple_range_check(Z, T0, Z)
        assert not ext_triple_range_check(C(2), C(2), T0)
        assert ext_triple_range_check(Z, C(2), Z)
        assert not ext_triple_range_check(C(2), C(4), Z)

    def test_ext_triple_range_contains_every_triple(self):
        rng = random.Random(31)
        for _ in range(60):
            e = ext_data(random_triple(rng))
            assert ext_triple_range_check(e.ext_s1, e.ext_w1, e.ext_w0)

    def test_ck_range(self):
        assert ck_ext_range_check(Z, T0)
        assert not ck_ext_range_check(C(2), T0)
        assert ck_ext_range_check(FgAbelianGroup(1, (2,)), C(4))
        assert quotient_by_element(PointedGroup.in_group(FgAbelianGroup(1, (2,)), (2, 1))) == C(4)

    def test_ck_matrices_land_in_range(self):
        for n in range(2, 7):
            e = ext_data(k_triple(all_ones(n)))
            assert ck_ext_range_check(e.ext_s1, e.ext_w1)


def test_str():
    assert str(O_INF) == "(Z, [1], 0)"
