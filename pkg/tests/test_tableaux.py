from math import factorial

import pytest

from nilcone.partitions import Partition, partitions_of
from nilcone.tableaux import Tableau, ssyt_enumerate, syt_enumerate, syt_major_index_genfun


def ones(n):
    return Partition((1,) * n)


class TestTableauValidation:
    def test_valid(self):
        t = Tableau([[1, 1, 2], [2]])
        assert t.shape == Partition((3, 1))
        assert t.content == (2, 2)

    def test_row_must_weakly_increase(self):
        with pytest.raises(ValueError):
            Tableau([[2, 1]])

    def test_column_must_strictly_increase(self):
        with pytest.raises(ValueError):
            Tableau([[1, 1], [1]])

    def test_letters_positive(self):
        with pytest.raises(ValueError):
            Tableau([[0, 1]])

    def test_shape_must_be_partition(self):
        with pytest.raises(ValueError):
            Tableau([[1], [1, 2]])

    def test_reading_word_bottom_row_first(self):
        assert Tableau([[1, 2], [3]]).reading_word() == (3, 1, 2)


class TestSsytEnumerate:
    def test_two_standard_fillings(self):
        found = ssyt_enumerate(Partition((2, 1)), ones(3))
        assert len(found) == 2
        # column-reading lexicographic order is pinned
        assert found == [Tableau([[1, 3], [2]]), Tableau([[1, 2], [3]])]

    def test_single_row(self):
        for n in range(1, 6):
            found = ssyt_enumerate(Partition((n,)), ones(n))
            assert found == [Tableau([list(range(1, n + 1))])]

    def test_impossible_filling(self):
        assert ssyt_enumerate(Partition((1, 1)), Partition((2,))) == []

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            ssyt_enumerate(Partition((2, 1)), Partition((2, 1, 1)))

    def test_empty_shape(self):
        assert ssyt_enumerate(Partition(()), Partition(())) == [Tableau(())]

    def test_content_respected(self):
        for t in ssyt_enumerate(Partition((3, 2)), Partition((2, 2, 1))):
            assert t.content == (2, 2, 1)

    def test_standard_count_matches_hook_formula(self):
        for n in range(8):
            for lam in partitions_of(n):
                assert len(ssyt_enumerate(lam, ones(n))) == lam.num_standard_tableaux()

    def test_weight_one_content_gives_standard(self):
        for t in syt_enumerate(Partition((3, 2, 1))):
            assert sorted(v for row in t.rows for v in row) == list(range(1, 7))


class TestMajorIndex:
    def test_hand_computed_hook(self):
        assert syt_major_index_genfun(Partition((2, 1))).terms == {1: 1, 2: 1}

    def test_single_row_no_descents(self):
        assert syt_major_index_genfun(Partition((4,))) == 1

    def test_single_column(self):
        assert syt_major_index_genfun(Partition((1, 1))).terms == {1: 1}
        # descents at every position: maj = 1 + 2 = 3
        assert syt_major_index_genfun(Partition((1, 1, 1))).terms == {3: 1}

    def test_counts_standard_tableaux_at_one(self):
        for n in range(8):
            for lam in partitions_of(n):
                genfun = syt_major_index_genfun(lam)
                assert genfun.evaluate(1) == lam.num_standard_tableaux()
