from math import factorial

import pytest

from nilcone.kostka import fake_degree_qhook
from nilcone.laurent import LaurentPoly
from nilcone.partitions import Partition, partitions_of
from nilcone.weyl import (
    EnumerationBudgetError,
    conjugacy_data,
    enumeration_counts,
    fake_degree_molien,
    mn_character,
    molien_graded_character,
    pn_series_molien,
    sn_character_values,
    weyl_type,
)

P = Partition


def one_minus(k):
    return LaurentPoly({0: 1, k: -1}, "t")


def one_plus(k):
    return LaurentPoly({0: 1, k: 1}, "t")


class TestWeylType:
    def test_a2(self):
        wt = weyl_type("A", 2)
        assert wt.degrees == (2, 3)
        assert wt.order == 6
        assert wt.num_positive_roots == 3

    def test_a1(self):
        wt = weyl_type("A", 1)
        assert wt.degrees == (2,)
        assert wt.order == 2
        assert wt.num_positive_roots == 1

    def test_g2(self):
        wt = weyl_type("G2", 2)
        assert wt.degrees == (2, 6)
        assert wt.order == 12
        assert wt.num_positive_roots == 6

    def test_b3(self):
        wt = weyl_type("B", 3)
        assert wt.degrees == (2, 4, 6)
        assert wt.order == 48
        assert wt.num_positive_roots == 9

    def test_c3_same_group_as_b3(self):
        assert weyl_type("C", 3).degrees == weyl_type("B", 3).degrees

    def test_d4(self):
        wt = weyl_type("D", 4)
        assert wt.degrees == (2, 4, 4, 6)
        assert wt.order == 192
        assert wt.num_positive_roots == 12

    def test_f4(self):
        wt = weyl_type("F4", 4)
        assert wt.degrees == (2, 6, 8, 12)
        assert wt.order == 1152
        assert wt.num_positive_roots == 24

    def test_e6_table_only(self):
        wt = weyl_type("E6", 6)
        assert wt.order == 51840
        assert wt.num_positive_roots == 36

    def test_unsupported_rejected(self):
        with pytest.raises(ValueError):
            weyl_type("E", 7)
        with pytest.raises(ValueError):
            weyl_type("G2", 3)
        with pytest.raises(ValueError):
            weyl_type("A", 0)
        with pytest.raises(ValueError):
            weyl_type("B", 1)


class TestEnumeration:
    @pytest.mark.parametrize(
        "family,rank",
        [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
         ("C", 3), ("D", 2), ("D", 3), ("D", 4), ("G2", 2), ("F4", 4)],
    )
    def test_counts_match_degree_tables(self, family, rank):
        wt = weyl_type(family, rank)
        order, reflections = enumeration_counts(wt)
        assert order == wt.order
        assert reflections == wt.num_positive_roots

    def test_budget_blocks_e6_by_default(self):
        with pytest.raises(EnumerationBudgetError):
            enumeration_counts(weyl_type("E6", 6))
        with pytest.raises(EnumerationBudgetError):
            conjugacy_data(weyl_type("E6", 6))

    @pytest.mark.slow
    def test_e6_with_explicit_budget(self):
        wt = weyl_type("E6", 6)
        order, reflections = enumeration_counts(wt, budget=60000)
        assert order == 51840
        assert reflections == 36


class TestConjugacyData:
    def test_s2(self):
        classes = conjugacy_data(weyl_type("A", 1))
        by_label = {c.label: c for c in classes}
        assert by_label["1,1"].size == 1
        assert by_label["1,1"].char_factor == one_minus(1)
        assert by_label["2"].size == 1
        assert by_label["2"].char_factor == one_plus(1)

    def test_s3(self):
        classes = {c.label: c for c in conjugacy_data(weyl_type("A", 2))}
        assert classes["1,1,1"].size == 1
        assert classes["1,1,1"].char_factor == one_minus(1) * one_minus(1)
        assert classes["2,1"].size == 3
        assert classes["2,1"].char_factor == one_minus(2)
        assert classes["3"].size == 2
        assert classes["3"].char_factor == LaurentPoly({0: 1, 1: 1, 2: 1}, "t")

    def test_b2(self):
        classes = {c.label: c for c in conjugacy_data(weyl_type("B", 2))}
        assert classes["1,1|"].size == 1
        assert classes["2|"].size == 2
        assert classes["1|1"].size == 2
        assert classes["|2"].size == 2
        assert classes["|1,1"].size == 1
        assert classes["|2"].char_factor == one_plus(2)
        assert classes["1|1"].char_factor == one_minus(1) * one_plus(1)

    def test_d_subgroup_has_even_negative_cycles(self):
        for label, *_ in [(c.label,) for c in conjugacy_data(weyl_type("D", 4))]:
            beta = label.split("|")[1]
            assert beta == "" or len(beta.split(",")) % 2 == 0

    @pytest.mark.parametrize(
        "family,rank",
        [("A", 3), ("A", 5), ("B", 3), ("B", 5), ("C", 4), ("D", 4), ("D", 5),
         ("G2", 2), ("F4", 4)],
    )
    def test_sizes_sum_to_group_order(self, family, rank):
        wt = weyl_type(family, rank)
        classes = conjugacy_data(wt)
        assert sum(c.size for c in classes) == wt.order

    @pytest.mark.parametrize(
        "family,rank", [("A", 4), ("B", 3), ("D", 4), ("G2", 2), ("F4", 4)]
    )
    def test_char_factor_shape(self, family, rank):
        wt = weyl_type(family, rank)
        for cd in conjugacy_data(wt):
            assert cd.char_factor.coeff(0) == 1
            assert cd.char_factor.degree == wt.rank

    def test_g2_element_count_by_factor(self):
        sizes = {c.char_factor: c.size for c in conjugacy_data(weyl_type("G2", 2))}
        # identity, 6 reflections (two true classes merged), two rotation
        # pairs, and the long rotation
        assert sorted(sizes.values()) == [1, 1, 2, 2, 6]


class TestMolienGradedCharacter:
    def test_s2_identity(self):
        wt = weyl_type("A", 1)
        identity = next(c for c in conjugacy_data(wt) if c.label == "1,1")
        assert molien_graded_character(wt, identity).terms == {0: 1, 1: 1}

    def test_s2_reflection(self):
        wt = weyl_type("A", 1)
        refl = next(c for c in conjugacy_data(wt) if c.label == "2")
        assert molien_graded_character(wt, refl).terms == {0: 1, 1: -1}

    @pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G2", 2), ("F4", 4)])
    def test_identity_gives_group_order_at_one(self, family, rank):
        wt = weyl_type(family, rank)
        identity_factor = one_minus(1) ** wt.rank
        for cd in conjugacy_data(wt):
            f = molien_graded_character(wt, cd)
            expected = wt.order if cd.char_factor == identity_factor else 0
            assert f.evaluate(1) == expected


class TestMnCharacter:
    def test_trivial_representation(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                assert mn_character(P((n,)), mu) == 1

    def test_sign_representation(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                assert mn_character(P((1,) * n), mu) == (-1) ** (n - len(mu))

    def test_standard_representation_hand_values(self):
        assert mn_character(P((2, 1)), P((1, 1, 1))) == 2
        assert mn_character(P((2, 1)), P((2, 1))) == 0
        assert mn_character(P((2, 1)), P((3,))) == -1

    def test_dimension_at_identity(self):
        for n in range(1, 8):
            for lam in partitions_of(n):
                assert mn_character(lam, P((1,) * n)) == lam.num_standard_tableaux()

    def test_first_orthogonality(self):
        for n in range(1, 7):
            wt_classes = conjugacy_data(weyl_type("A", n - 1)) if n >= 2 else None
            for lam in partitions_of(n):
                if n == 1:
                    continue
                total = sum(
                    c.size * mn_character(lam, P([int(x) for x in c.label.split(",")])) ** 2
                    for c in wt_classes
                )
                assert total == factorial(n), lam

    def test_distinct_irreducibles_orthogonal(self):
        n = 5
        classes = conjugacy_data(weyl_type("A", n - 1))
        parts = partitions_of(n)
        for i, lam in enumerate(parts):
            for nu in parts[i + 1 :]:
                total = sum(
                    c.size
                    * mn_character(lam, P([int(x) for x in c.label.split(",")]))
                    * mn_character(nu, P([int(x) for x in c.label.split(",")]))
                    for c in classes
                )
                assert total == 0, (lam, nu)

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            mn_character(P((2, 1)), P((2, 2)))


class TestFakeDegreeMolien:
    def test_s3_standard(self):
        wt = weyl_type("A", 2)
        fd = fake_degree_molien(wt, sn_character_values(P((2, 1))))
        assert fd.terms == {1: 1, 2: 1}

    def test_trivial_character_gives_one(self):
        for family, rank in [("A", 2), ("B", 2), ("G2", 2)]:
            wt = weyl_type(family, rank)
            trivial = {c.label: 1 for c in conjugacy_data(wt)}
            assert fake_degree_molien(wt, trivial) == 1

    def test_sign_character_concentrated_at_top(self):
        for family, rank in [("A", 2), ("A", 3), ("B", 2)]:
            wt = weyl_type(family, rank)
            sign = {
                c.label: c.char_factor.coeff(wt.rank) * (-1) ** wt.rank
                for c in conjugacy_data(wt)
            }
            fd = fake_degree_molien(wt, sign)
            assert fd.terms == {wt.num_positive_roots: 1}

    def test_regular_character_counts_group(self):
        wt = weyl_type("B", 2)
        identity_factor = one_minus(1) ** wt.rank
        regular = {
            c.label: wt.order if c.char_factor == identity_factor else 0
            for c in conjugacy_data(wt)
        }
        fd = fake_degree_molien(wt, regular)
        assert fd.evaluate(1) == wt.order

    def test_matches_qhook_for_all_shapes(self):
        for n in range(2, 7):
            wt = weyl_type("A", n - 1)
            for lam in partitions_of(n):
                fd = fake_degree_molien(wt, sn_character_values(lam))
                assert fd == fake_degree_qhook(lam), lam

    def test_socle_self_duality(self):
        for n in range(2, 7):
            wt = weyl_type("A", n - 1)
            top = wt.num_positive_roots
            for lam in partitions_of(n):
                fd = fake_degree_molien(wt, sn_character_values(lam))
                fd_conj = fake_degree_molien(wt, sn_character_values(lam.conjugate()))
                assert fd_conj == fd.substitute_power(-1).shift(top), lam

    def test_non_character_rejected(self):
        wt = weyl_type("A", 2)
        bogus = {c.label: (1 if c.label == "1,1,1" else 0) for c in conjugacy_data(wt)}
        with pytest.raises(ValueError):
            fake_degree_molien(wt, bogus)

    def test_missing_class_rejected(self):
        wt = weyl_type("A", 2)
        with pytest.raises(ValueError):
            fake_degree_molien(wt, {"1,1,1": 1})


class TestPnSeriesMolien:
    def test_rank_one_closed_form(self):
        assert pn_series_molien(weyl_type("A", 1)).terms == {(0, 0): 1, (2, -2): 1}

    @pytest.mark.parametrize(
        "family,rank", [("A", 2), ("B", 2), ("B", 3), ("D", 4), ("G2", 2), ("F4", 4)]
    )
    def test_total_dimension_is_group_order(self, family, rank):
        wt = weyl_type(family, rank)
        assert pn_series_molien(wt).evaluate(1, 1) == wt.order

    def test_exponent_window(self):
        wt = weyl_type("B", 2)
        series = pn_series_molien(wt)
        top = 2 * wt.num_positive_roots
        for (xe, ye), c in series.terms.items():
            assert 0 <= xe <= top
            assert -top <= ye <= 0
            assert c > 0

    def test_specialization_is_coinvariant_poincare(self):
        # at y = 1 the series is the graded dimension of the coinvariant
        # algebra in the doubled grading
        wt = weyl_type("B", 2)
        series = pn_series_molien(wt).set_y(1)
        expected = LaurentPoly.one("x")
        for d in wt.degrees:
            expected = expected * LaurentPoly({2 * i: 1 for i in range(d)}, "x")
        assert series == expected
