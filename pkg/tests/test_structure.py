import itertools

import pytest

from brandtkit import errors
from brandtkit.constructions import (
    adjoin_zero,
    brandt,
    cyclic_group,
    symmetric_group_3,
    trivial_group,
)
from brandtkit.core import (
    direct_product,
    find_isomorphism,
    from_table,
    is_regular,
    principal_ideal,
    zero_of,
)
from brandtkit.structure import (
    BRANDT,
    GROUP,
    GROUP_WITH_ZERO,
    OTHER,
    classification_report,
    classify,
    excluded_set,
    minimal_ideal_report,
    rho_z,
    separate_regular_pair,
    separation_quotient,
    zero_minimal_ideals,
)


def b2():
    return brandt(trivial_group(), 2)


def brute_excluded(S, z):
    out = set()
    for u in S.elements():
        sus = {S.mul(S.mul(s, u), t) for s in S.elements() for t in S.elements()}
        if z not in sus:
            out.add(u)
    return out


class TestExcludedSet:
    def test_b2_nonzero(self):
        B2, c = b2()
        z = c.encode(0, 0, 0)
        assert excluded_set(B2, z).members == {0} == brute_excluded(B2, z)

    def test_b2_zero_is_everywhere(self):
        B2, _ = b2()
        assert excluded_set(B2, 0).members == frozenset()

    def test_groups_exclude_nothing(self):
        Z5 = cyclic_group(5).carrier
        for z in Z5.elements():
            assert excluded_set(Z5, z).members == frozenset()

    def test_tagged_as_ideal_when_nonempty(self):
        B2, c = b2()
        es = excluded_set(B2, c.encode(0, 0, 0))
        assert es.is_ideal


class TestRhoZ:
    def test_b2_nonzero_gives_equality(self):
        B2, c = b2()
        rho = rho_z(B2, c.encode(0, 0, 0))
        assert rho.class_count == 5

    def test_zero_gives_universal(self):
        B2, _ = b2()
        assert rho_z(B2, 0).class_count == 1

    def test_group_with_zero_separates_everything(self):
        Z4z = adjoin_zero(cyclic_group(4).carrier)
        for z in range(1, 5):
            assert rho_z(Z4z, z).class_count == 5

    def test_brute_force_definition(self):
        # oracle: pairwise check of the defining condition
        S, c = brandt(cyclic_group(2), 2)
        z = c.encode(0, 0, 1)
        iz = brute_excluded(S, z)
        szs = {S.mul(S.mul(s, z), t) for s in S.elements() for t in S.elements()}
        rho = rho_z(S, z)
        for x in S.elements():
            for y in S.elements():
                related = all(
                    S.mul(x, t) == S.mul(y, t)
                    or (S.mul(x, t) in iz and S.mul(y, t) in iz)
                    for t in szs)
                assert related == (rho.class_of[x] == rho.class_of[y])


class TestSeparation:
    def test_b2_pair(self):
        B2, c = b2()
        a, bb = c.encode(0, 0, 0), c.encode(0, 0, 1)
        res = separate_regular_pair(B2, a, bb, 2)
        assert res.chosen_z == a
        assert res.hom(a) != res.hom(bb)
        assert res.quotient_class.kind == BRANDT
        assert find_isomorphism(res.hom.target, B2) is not None

    def test_all_pairs_in_brandt_over_z2(self):
        S, _ = brandt(cyclic_group(2), 2)
        for a, bb in itertools.combinations(range(S.size), 2):
            res = separate_regular_pair(S, a, bb, 2)
            assert res.hom(a) != res.hom(bb)
            assert res.quotient_class.kind != OTHER

    def test_not_distinct(self):
        B2, _ = b2()
        with pytest.raises(errors.NotDistinct):
            separate_regular_pair(B2, 1, 1, 2)

    def test_not_regular(self):
        S = from_table([[0, 0], [0, 0]], zero=0)  # null pair: 1 is not regular
        assert not is_regular(S, 1)
        with pytest.raises(errors.NotRegular):
            separate_regular_pair(S, 0, 1, 2)

    def test_hypothesis_failure_reported(self):
        lz = from_table([[0, 0], [1, 1]])  # fails x^n y^n = y^n x^n
        with pytest.raises(errors.HypothesisFails) as exc:
            separate_regular_pair(lz, 0, 1, 2)
        assert exc.value.counterexample is not None

    def test_quotient_image_meets_szs(self):
        # every element lands on the image of something in SzS
        for S, z in [(b2()[0], 1), (brandt(cyclic_group(2), 2)[0], 3),
                     (adjoin_zero(cyclic_group(4).carrier), 2)]:
            quot, hom = separation_quotient(S, z)
            szs_images = {hom(t) for t in principal_ideal(S, z)}
            assert {hom(x) for x in S.elements()} <= szs_images


class TestMinimalIdeals:
    def test_b2_is_its_own_minimal_ideal(self):
        B2, _ = b2()
        ideals = zero_minimal_ideals(B2)
        assert len(ideals) == 1 and ideals[0].members == frozenset(range(5))

    def test_group_kernel_is_the_whole_group(self):
        Z3 = cyclic_group(3).carrier
        ideals = zero_minimal_ideals(Z3)
        assert len(ideals) == 1 and ideals[0].members == frozenset(range(3))

    def test_null_semigroup_has_many(self):
        S = from_table([[0] * 4 for _ in range(4)], zero=0)
        ideals = zero_minimal_ideals(S)
        assert [sorted(i.members) for i in ideals] == [[0, 1], [0, 2], [0, 3]]

    def test_product_with_group(self):
        B2, _ = b2()
        S = direct_product(B2, cyclic_group(2).carrier)
        assert zero_of(S) is None  # no absorbing element: the kernel is 0 x Z2
        ideals = zero_minimal_ideals(S)
        assert len(ideals) == 1 and ideals[0].members == {0, 1}

    def test_reports(self):
        B2, _ = b2()
        reports = minimal_ideal_report(B2, 2)
        assert len(reports) == 1
        r = reports[0]
        assert r.contains_regular and r.is_inverse and r.is_completely_zero_simple

        Z3 = cyclic_group(3).carrier
        r = minimal_ideal_report(Z3, 3)[0]
        assert r.contains_regular and r.is_inverse and r.is_completely_zero_simple

        S = direct_product(B2, cyclic_group(2).carrier)
        r = minimal_ideal_report(S, 2)[0]
        assert r.contains_regular and r.is_inverse and r.is_completely_zero_simple

    def test_report_requires_hypothesis(self):
        lz = from_table([[0, 0], [1, 1]])
        with pytest.raises(errors.HypothesisFails):
            minimal_ideal_report(lz, 2)


class TestClassify:
    def test_brandt_round_trip(self):
        S, _ = brandt(cyclic_group(3), 3)
        sc = classify(S)
        assert sc.kind == BRANDT and sc.index_size == 3
        assert find_isomorphism(sc.group_part.carrier, cyclic_group(3).carrier)
        assert sc.witness is not None and sc.witness.is_bijective()

    def test_group(self):
        sc = classify(cyclic_group(4).carrier)
        assert sc.kind == GROUP and sc.group_part.size == 4
        assert sc.witness is None

    def test_group_with_zero(self):
        sc = classify(adjoin_zero(cyclic_group(4).carrier))
        assert sc.kind == GROUP_WITH_ZERO and sc.group_part.size == 4

    def test_nonabelian_group_with_zero(self):
        S = adjoin_zero(symmetric_group_3().carrier)
        assert S.size == 7
        sc = classify(S)
        assert sc.kind == GROUP_WITH_ZERO
        assert find_isomorphism(sc.group_part.carrier, symmetric_group_3().carrier)

    def test_trivial_cases(self):
        assert classify(trivial_group().carrier).kind == GROUP
        assert classify(adjoin_zero(trivial_group().carrier)).kind == GROUP_WITH_ZERO

    def test_unrecognized_get_other_without_witness(self):
        for S in (from_table([[0, 0], [1, 1]]),
                  from_table([[0] * 4 for _ in range(4)], zero=0),
                  adjoin_identity_of_b2()):
            sc = classify(S)
            assert sc.kind == OTHER and sc.witness is None

    def test_nonabelian_structure_group(self):
        S, _ = brandt(symmetric_group_3(), 2)
        sc = classify(S)
        assert sc.kind == BRANDT and sc.index_size == 2
        assert find_isomorphism(sc.group_part.carrier, symmetric_group_3().carrier)

    def test_witness_maps_onto_canonical_reconstruction(self):
        S, _ = brandt(cyclic_group(2), 2)
        sc = classify(S)
        canon, _ = brandt(sc.group_part, sc.index_size)
        assert sc.witness.target.table == canon.table
        for x in S.elements():
            for y in S.elements():
                assert sc.witness(S.mul(x, y)) == canon.mul(sc.witness(x), sc.witness(y))

    def test_report_lines(self):
        S, _ = brandt(cyclic_group(3), 3)
        assert classification_report(classify(S)) == "kind=Brandt |Q|=3 |J|=3"
        assert classification_report(classify(cyclic_group(4).carrier)) == "kind=Group |Q|=4"
        report = classification_report(classify(S), verbose=True)
        assert "witness target table" in report


def adjoin_identity_of_b2():
    from brandtkit.constructions import adjoin_identity
    return adjoin_identity(b2()[0])


class TestSeparationQuotientShadow:
    @pytest.mark.parametrize("builder,n", [
        (lambda: b2()[0], 2),
        (lambda: brandt(cyclic_group(2), 2)[0], 2),
        (lambda: brandt(cyclic_group(3), 2)[0], 3),
        (lambda: adjoin_zero(cyclic_group(4).carrier), 4),
    ])
    def test_quotients_classify(self, builder, n):
        S = builder()
        for z in S.elements():
            if z == S.zero or not is_regular(S, z):
                continue
            rho = rho_z(S, z)
            quot, hom = separation_quotient(S, z)
            assert hom.is_surjective()
            assert classify(quot).kind != OTHER, f"z={z}"
