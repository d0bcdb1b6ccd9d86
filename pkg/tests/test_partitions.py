import pytest

from crossnest.core import CapacityError
from crossnest.partitions import (CROSSING, MAX_PARTITION_N, NESTING,
                                  ArcDiagram, SetPartition, count_avoiding,
                                  enumerate_matchings, enumerate_partitions,
                                  max_crossing, standard_arcs)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
C3 = [1, 1, 2, 5, 15, 52, 202, 859, 3930, 19095]
E3 = [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032]
C4 = [1, 1, 2, 5, 15, 52, 203, 877, 4139, 21119]
E4 = [1, 1, 2, 5, 15, 52, 203, 876, 4120]


def test_compact_round_trip():
    p = SetPartition.from_compact("135-24")
    assert p.n == 5
    assert p.blocks == ((1, 3, 5), (2, 4))
    assert p.compact() == "135-24"


def test_from_blocks_validates_cover():
    with pytest.raises(ValueError):
        SetPartition.from_blocks(4, [[1, 2], [2, 3, 4]])
    with pytest.raises(ValueError):
        SetPartition.from_blocks(4, [[1, 2]])


def test_standard_arcs_consecutive_elements():
    p = SetPartition.from_compact("1478-236-5")
    classical = standard_arcs(p)
    assert classical.arcs == ((1, 4), (2, 3), (3, 6), (4, 7), (7, 8))
    enhanced = standard_arcs(p, enhanced=True)
    assert (5, 5) in enhanced.arcs
    assert len(enhanced.arcs) == 6


def test_classical_diagram_rejects_loops():
    with pytest.raises(ValueError):
        ArcDiagram(3, ((2, 2),), False)


def test_crossing_witness_135_24():
    p = SetPartition.from_compact("135-24")
    assert max_crossing(standard_arcs(p), CROSSING) == 2
    assert max_crossing(standard_arcs(p), NESTING) == 1
    # endpoint sharing lets all three arcs cross mutually
    assert max_crossing(standard_arcs(p, enhanced=True), CROSSING) == 3
    assert max_crossing(standard_arcs(p, enhanced=True), NESTING) == 1


def test_nesting_witness_15_24_3():
    p = SetPartition.from_compact("15-24-3")
    assert max_crossing(standard_arcs(p), NESTING) == 2
    assert max_crossing(standard_arcs(p), CROSSING) == 1
    # the loop on 3 sits innermost in the chain
    assert max_crossing(standard_arcs(p, enhanced=True), NESTING) == 3
    assert max_crossing(standard_arcs(p, enhanced=True), CROSSING) == 1


def test_three_crossing_witness_14_25_36():
    p = SetPartition.from_compact("14-25-36")
    assert max_crossing(standard_arcs(p), CROSSING) == 3


def test_enumeration_totals_are_bell_numbers():
    for n in range(8):
        assert sum(1 for _ in enumerate_partitions(n)) == BELL[n]


def test_matching_enumeration_double_factorial():
    sizes = [sum(1 for _ in enumerate_matchings(p)) for p in range(6)]
    assert sizes == [1, 1, 3, 15, 105, 945]


def test_count_avoiding_prefixes():
    for n in range(9):
        assert count_avoiding(n, 3, CROSSING) == C3[n]
        assert count_avoiding(n, 3, CROSSING, enhanced=True) == E3[n]
        assert count_avoiding(n, 4, CROSSING) == C4[n]
        if n < len(E4):
            assert count_avoiding(n, 4, CROSSING, enhanced=True) == E4[n]


def test_k2_columns_are_catalan_and_motzkin():
    for n in range(9):
        assert count_avoiding(n, 2, CROSSING) == CATALAN[n]
        assert count_avoiding(n, 2, CROSSING, enhanced=True) == MOTZKIN[n]


def test_crossing_nesting_equinumerous():
    for n in range(9):
        for k in (2, 3, 4):
            for enhanced in (False, True):
                assert count_avoiding(n, k, CROSSING, enhanced=enhanced) == \
                    count_avoiding(n, k, NESTING, enhanced=enhanced)


def test_statistic_distributions_match_exactly():
    # not just avoiders: the full histogram of the maximum crossing equals
    # the full histogram of the maximum nesting, per regime
    for n in range(8):
        for enhanced in (False, True):
            cross: dict[int, int] = {}
            nest: dict[int, int] = {}
            for p in enumerate_partitions(n):
                d = standard_arcs(p, enhanced=enhanced)
                c = max_crossing(d, CROSSING)
                m = max_crossing(d, NESTING)
                cross[c] = cross.get(c, 0) + 1
                nest[m] = nest.get(m, 0) + 1
            assert cross == nest


def test_crossing_not_transitive_example():
    # pairwise crossings without a 3-crossing: chain of overlaps
    d = ArcDiagram(8, ((1, 4), (3, 6), (5, 8)), False)
    assert max_crossing(d, CROSSING) == 2


def test_capacity_and_validation():
    with pytest.raises(CapacityError):
        count_avoiding(MAX_PARTITION_N + 1, 3, CROSSING)
    with pytest.raises(ValueError):
        count_avoiding(5, 1, CROSSING)
    with pytest.raises(ValueError):
        max_crossing(ArcDiagram(3, (), False), "sideways")
