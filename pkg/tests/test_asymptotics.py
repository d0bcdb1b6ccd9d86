from fractions import Fraction

import pytest
from mpmath import mp

from crossnest.asymptotics import (asymptotic_report, exact_ratio,
                                   growth_base, kappa, ratio_checkpoint,
                                   sixterm_cancellation, summand_report)
from crossnest.core import DomainError

KAPPA_C3_30 = "1695.59478884173951727053741661"
KAPPA_E3_30 = "6691.09083154862291792116544323"


def test_growth_bases():
    assert growth_base("c3") == 9
    assert growth_base("e3") == 8
    with pytest.raises(DomainError):
        growth_base("m3")


def test_limit_constants_to_thirty_digits():
    with mp.workdps(30):
        assert mp.nstr(kappa("c3", 30), 30) == KAPPA_C3_30
        assert mp.nstr(kappa("e3", 30), 30) == KAPPA_E3_30


def test_float_unroll_tracks_exact_ratio():
    for kind in ("c3", "e3"):
        exact = exact_ratio(kind, 800)
        approx = ratio_checkpoint(kind, 800, dps=40)
        with mp.workdps(40):
            gap = abs(approx - mp.mpf(exact.numerator) / exact.denominator)
            assert gap < mp.mpf("1e-25")


def test_moderate_checkpoint_is_already_close():
    rep = asymptotic_report("c3", 5000)
    assert abs(rep.ratio - rep.limit) / rep.limit < 0.01
    assert "c3" in rep.line() and "5000" in rep.line()
    rep = asymptotic_report("e3", 5000)
    assert abs(rep.ratio - rep.limit) / rep.limit < 0.01


def test_summand_peak_location():
    for n, l, k in ((60, -1, 1), (61, 4, 1), (90, -5, 2), (120, 0, 3)):
        rep = summand_report(n, l, k)
        assert rep.unimodal
        assert rep.mode_distance <= 1
        lo, hi = rep.peak_window
        assert hi - lo == Fraction(1, 6)
        assert 0.55 < rep.total_ratio < 1.0
        later = summand_report(4 * n, l, k)
        assert rep.total_ratio < later.total_ratio < 1.0


def test_sixterm_cancellation_grows():
    small = sixterm_cancellation(12)
    large = sixterm_cancellation(40)
    assert small.total == 2877834
    assert large.cancellation > 1e4
    assert large.cancellation > small.cancellation
    assert set(large.signs) == {-1, 1}
