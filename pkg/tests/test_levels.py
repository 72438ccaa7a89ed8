from fractions import Fraction

import pytest

from dedekind_lab.core import dedekind_naive, units
from dedekind_lab.lab.levels import census, census_row, count_solutions, level_sets
from dedekind_lab.lab.models import CensusRow, LevelSetTable, Method


def test_level_sets_prime_five():
    table = level_sets(5)
    assert list(table.entries.items()) == [
        (Fraction(-1, 5), [4]),
        (Fraction(0), [2, 3]),
        (Fraction(1, 5), [1]),
    ]


def test_level_sets_trivial_modulus():
    table = level_sets(1)
    assert table.entries == {}
    assert table.unit_count == 0


def test_level_sets_separate_known_pair():
    table = level_sets(40)
    classes = {a: value for value, members in table.entries.items() for a in members}
    assert classes[37] == Fraction(-13, 16)
    assert classes[33] == Fraction(-5, 16)
    assert classes[37] != classes[33]


def test_level_sets_partition_units():
    for b in range(1, 120):
        table = level_sets(b)
        members = [a for group in table.entries.values() for a in group]
        assert sorted(members) == units(b)
        assert len(members) == len(set(members))
        assert list(table.entries) == sorted(table.entries)
        for group in table.entries.values():
            assert group == sorted(group)


def test_level_set_table_rejects_overlap():
    with pytest.raises(ValueError):
        LevelSetTable(b=5, entries={Fraction(0): [2, 3], Fraction(1, 5): [1, 3]})
    with pytest.raises(ValueError):
        LevelSetTable(b=5, entries={Fraction(0): [3, 2]})


def test_level_set_table_requires_every_unit():
    # 4 is missing
    with pytest.raises(ValueError):
        LevelSetTable(b=5, entries={Fraction(0): [2, 3], Fraction(1, 5): [1]})
    # 5 is not a unit mod 5
    with pytest.raises(ValueError):
        LevelSetTable(b=5, entries={Fraction(-1, 5): [4], Fraction(0): [2, 3], Fraction(1, 5): [1, 5]})
    # 2 is not coprime to 4
    with pytest.raises(ValueError):
        LevelSetTable(b=4, entries={Fraction(1, 8): [1, 2], Fraction(-1, 8): [3]})
    assert LevelSetTable(b=1).unit_count == 0


def test_count_solutions():
    assert count_solutions(40, Fraction(-13, 16)) >= 1
    assert 37 in level_sets(40).members_of(Fraction(-13, 16))
    # s(2,5) = s(3,5) = 0
    assert count_solutions(5, Fraction(0)) == 2
    assert count_solutions(5, Fraction(7, 3)) == 0


def test_count_matches_level_set_sizes():
    for b in (12, 30, 40, 97):
        table = level_sets(b)
        for value, members in table.entries.items():
            assert count_solutions(b, value) == len(members)


def test_fast_and_naive_classes_agree_small():
    for b in range(1, 80):
        assert level_sets(b, Method.FAST).entries == level_sets(b, Method.NAIVE).entries


@pytest.mark.slow
def test_fast_and_naive_classes_agree_up_to_200():
    for b in range(1, 201):
        assert level_sets(b, Method.FAST).entries == level_sets(b, Method.NAIVE).entries, b


def test_census_examples():
    row = census_row(40)
    assert (row.b, row.r, row.unit_count) == (40, 2, 16)

    row = census_row(23)
    assert (row.r, row.unit_count, row.num_classes) == (1, 22, 12)
    assert (row.min_class_size, row.max_class_size) == (1, 2)

    assert census(1, 1) == [
        CensusRow(b=1, r=0, unit_count=0, num_classes=0, min_class_size=0, max_class_size=0)
    ]


def test_census_class_sizes_sum_to_unit_count():
    rows = census(2, 100)
    assert [row.b for row in rows] == list(range(2, 101))
    for row in rows:
        assert row.unit_count == len(units(row.b))
        sizes = level_sets(row.b).class_sizes()
        assert sum(sizes) == row.unit_count
        assert row.min_class_size <= row.max_class_size


def test_census_is_deterministic():
    assert census(2, 60) == census(2, 60)
    assert census(2, 60, method=Method.FAST) == census(2, 60)


def test_census_with_workers_matches_serial():
    assert census(2, 40, workers=2) == census(2, 40)


def test_census_rejects_bad_range():
    with pytest.raises(ValueError):
        census(10, 5)
    with pytest.raises(ValueError):
        census(0, 5)


def test_census_row_rejects_inverted_sizes():
    with pytest.raises(ValueError):
        CensusRow(b=7, r=1, unit_count=6, num_classes=3, min_class_size=3, max_class_size=2)
