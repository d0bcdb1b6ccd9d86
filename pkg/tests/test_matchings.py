from fractions import Fraction

import pytest

from crossnest import walks
from crossnest.matchings import (bessel_egf, catalan, matchings_count,
                                 matchings_egf, matchings_sequence)
from crossnest.partitions import enumerate_matchings, max_crossing, standard_arcs

M3 = [1, 1, 3, 14, 84, 594, 4719, 40898, 379236]


def test_bessel_coefficients():
    b0 = bessel_egf(0, 6)
    assert b0[0] == 1 and b0[2] == Fraction(1, 1)
    assert b0[4] == Fraction(1, 4) and b0[6] == Fraction(1, 36)
    assert b0[1] == 0 and b0[3] == 0
    b2 = bessel_egf(2, 6)
    assert b2[2] == Fraction(1, 2) and b2[4] == Fraction(1, 6)
    assert bessel_egf(-2, 6) == b2


def test_trivial_column_counts_only_the_empty_matching():
    assert list(matchings_sequence(1, 6)) == [1, 0, 0, 0, 0, 0, 0]


def test_two_column_is_catalan():
    assert list(matchings_sequence(2, 8)) == [catalan(n) for n in range(9)]


def test_three_column_frozen_prefix():
    assert list(matchings_sequence(3, 8)) == M3


def test_odd_egf_coefficients_vanish():
    for k in (2, 3, 4):
        det = matchings_egf(k, 13)
        assert all(det[m] == 0 for m in range(1, 14, 2))


def test_counts_match_walks_and_brute_force():
    for k in (2, 3, 4):
        walk = walks.chamber_loop_counts(walks.OSCILLATING, k - 1, 6)
        for n in range(7):
            brute = sum(1 for m in enumerate_matchings(n)
                        if max_crossing(standard_arcs(m), "crossing") < k)
            assert matchings_count(k, n) == brute == walk[n]


def test_count_rejects_negative_n():
    with pytest.raises(ValueError):
        matchings_count(3, -1)
