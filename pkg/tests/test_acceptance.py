"""End-to-end acceptance checks, one test per shipped guarantee.

Each test enforces its own wall-clock budget, so a pass line doubles as a
performance statement.  Everything here runs on exact integers; the only
tolerances are on float asymptotics, and those are fixed constants below.
"""

import json
import os
import time
from contextlib import contextmanager

import pytest

from crossnest import (asymptotics, kernel, matchings, partitions,
                       recurrences, sequences, walks)
from crossnest.cli import main as cli_main

C3_10 = [1, 1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566]
E3_10 = [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032, 71084]


@contextmanager
def budget(seconds):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


def _cli_json(capsys, *argv):
    code = cli_main(["--format", "json", *argv])
    out, err = capsys.readouterr()
    assert code == 0, err
    return json.loads(out)


def test_criterion_01_sequence_reproduction(capsys):
    with budget(10):
        for seq, expect in (("c3", C3_10), ("e3", E3_10)):
            env = _cli_json(capsys, "sequence", "--seq", seq,
                            "--upto", "10", "--route", "all")
            assert env["results"]["values"] == [str(v) for v in expect]
            assert env["results"]["agreed"] is True
            ran = set(env["results"]["routes"])
            assert {"walks", "series", "closed", "recurrence"} <= ran


def test_criterion_02_brute_force_concordance():
    with budget(300):
        for regime, rule in (("c", walks.VACILLATING),
                             ("e", walks.HESITATING)):
            enhanced = regime == "e"
            for k in (2, 3, 4):
                walk = walks.chamber_loop_counts(rule, k - 1, 9)
                for n in range(10):
                    crossing = partitions.count_avoiding(
                        n, k, partitions.CROSSING, enhanced=enhanced)
                    nesting = partitions.count_avoiding(
                        n, k, partitions.NESTING, enhanced=enhanced)
                    assert crossing == nesting == walk[n], (regime, k, n)


def test_criterion_03_recurrence_suite():
    with budget(30):
        for family, short, long_ in (
                ("c3", recurrences.c3_three_term, recurrences.c3_four_term),
                ("e3", recurrences.e3_three_term, recurrences.e3_four_term)):
            data = short().unroll([1, 1], 2000)
            assert len(data) == 2001
            assert short().first_failure(data) is None, family
            assert long_().first_failure(data) is None, family
            assert recurrences.factor_check(family), family


def test_criterion_04_guessing_from_fifteen_terms():
    with budget(1):
        data = recurrences.c3_three_term().unroll([1, 1], 14)
        assert len(data) == 15
        out = recurrences.guess(data, 2, 2)
        # normalized forms equal iff the operators agree up to a rational
        # multiple
        assert out.found is not None
        assert out.found.normalized() == recurrences.c3_three_term().normalized()


def test_criterion_05_c4_negative_result_reduced():
    with budget(300):
        report = recurrences.c4_recurrence_search(terms=60, max_order=5,
                                                  max_degree=5, brute_upto=9)
        assert report.outcome == "no recurrence within bounds (certified)"
        assert report.brute_checked_upto == 9


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("CROSSNEST_FULL_C4") != "1",
                    reason="full-scale search; set CROSSNEST_FULL_C4=1")
def test_criterion_05_c4_negative_result_full():
    with budget(7200):
        report = recurrences.c4_recurrence_search(terms=100, max_order=8,
                                                  max_degree=8, brute_upto=9)
        assert report.outcome == "no recurrence within bounds (certified)"
        assert report.brute_checked_upto == 9


def test_criterion_06_asymptotic_checkpoints():
    with budget(120):
        assert abs(float(asymptotics.ratio_checkpoint("c3", 50000))
                   - 1694.9) < 0.05
        assert abs(float(asymptotics.ratio_checkpoint("e3", 50000))
                   - 6687.3) < 0.05
        assert abs(float(asymptotics.kappa("c3")) - 1695.6) < 0.05
        assert abs(float(asymptotics.kappa("e3")) - 6691.1) < 0.05


def test_criterion_07_kernel_internals():
    with budget(60):
        for kind in kernel.KINDS:
            assert kernel.check_root_symmetry(kind, 15)
            assert kernel.functional_equation_residual(kind, 8)
        pairs = ((kernel.VACILLATING, walks.VACILLATING),
                 (kernel.HESITATING, walks.HESITATING))
        for kind, rule in pairs:
            h_table, v_table = kernel.axis_coefficient_tables(kind, 8)
            for n in range(9):
                layer = walks.layer_distributions(
                    rule, walks.ORTHANT, 2, (1, 0), 2 * n)[2 * n]
                assert h_table[n] == {p[0]: c for p, c in layer.items()
                                      if p[1] == 0}
                assert v_table[n] == {p[1]: c for p, c in layer.items()
                                      if p[0] == 0}


def test_criterion_08_matchings_determinant():
    with budget(60):
        assert list(matchings.matchings_sequence(2, 8)) == \
            [matchings.catalan(n) for n in range(9)]
        walk = walks.chamber_loop_counts(walks.OSCILLATING, 2, 6)
        for n in range(7):
            brute = sum(1 for m in partitions.enumerate_matchings(n)
                        if partitions.max_crossing(
                            partitions.standard_arcs(m),
                            partitions.CROSSING) < 3)
            assert matchings.matchings_count(3, n) == brute == walk[n]


def test_criterion_09_witness_partitions():
    crossing_witness = partitions.SetPartition.from_compact("135-24")
    arcs = partitions.standard_arcs(crossing_witness)
    arcs_enh = partitions.standard_arcs(crossing_witness, enhanced=True)
    assert partitions.max_crossing(arcs, partitions.CROSSING) == 2
    assert partitions.max_crossing(arcs_enh, partitions.CROSSING) == 3

    nesting_witness = partitions.SetPartition.from_compact("15-24-3")
    arcs = partitions.standard_arcs(nesting_witness)
    arcs_enh = partitions.standard_arcs(nesting_witness, enhanced=True)
    assert partitions.max_crossing(arcs, partitions.NESTING) == 2
    assert partitions.max_crossing(arcs_enh, partitions.NESTING) == 3

    heavy = [p for p in partitions.enumerate_partitions(6)
             if partitions.max_crossing(partitions.standard_arcs(p),
                                        partitions.CROSSING) >= 3]
    assert len(heavy) == 1
    assert heavy[0] == partitions.SetPartition.from_compact("14-25-36")
    assert partitions.count_avoiding(6, 4) \
        - partitions.count_avoiding(6, 3) == 1
    assert sequences.compute("c3", "brute", 6)[6] == 202
