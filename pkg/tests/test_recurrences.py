import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossnest.closedforms import c3_closed_sequence, e3_closed_sequence
from crossnest.core import (InconsistentDataError, SingularRecurrenceError,
                            UnderdeterminedError)
from crossnest.recurrences import (FACTOR_CHECKS, NAMED_RECURRENCES,
                                   PRecurrence, c3_factor_operator,
                                   c3_four_term, c3_three_term,
                                   c4_recurrence_search, e3_factor_operator,
                                   e3_four_term, e3_three_term, factor_check,
                                   guess, poly_eval, poly_mul, poly_shift)

C3_40 = list(c3_closed_sequence(40))
E3_40 = list(e3_closed_sequence(40))


def test_poly_shift_is_argument_translation():
    p = (3, -2, 0, 7)
    for s in (-2, 0, 1, 5):
        q = poly_shift(p, s)
        for n in range(-4, 5):
            assert poly_eval(q, n) == poly_eval(p, n + s)


def test_poly_mul_matches_pointwise_product():
    a, b = (1, 2), (-3, 0, 4)
    prod = poly_mul(a, b)
    for n in range(-3, 4):
        assert poly_eval(prod, n) == poly_eval(a, n) * poly_eval(b, n)


def test_named_recurrences_annihilate_their_sequences():
    for name, rec in NAMED_RECURRENCES.items():
        data = C3_40 if name.startswith("c3") else E3_40
        assert rec().holds_on(data), name


def test_perturbed_data_is_caught():
    bad = list(C3_40)
    bad[20] += 1
    failure = c3_three_term().first_failure(bad)
    assert failure is not None and abs(failure - 20) <= 2


def test_unroll_round_trips_closed_form():
    assert c3_three_term().unroll([1, 1], 40) == C3_40
    assert e3_three_term().unroll([1, 1], 40) == E3_40
    assert c3_four_term().unroll([1, 1, 2], 40) == C3_40


def test_unroll_cross_checks_extra_seeds():
    assert c3_three_term().unroll([1, 1, 2, 5], 10) == C3_40[:11]
    with pytest.raises(InconsistentDataError):
        c3_three_term().unroll([1, 1, 2, 6], 10)


def test_unroll_refuses_vanishing_leading_coefficient():
    rec = PRecurrence(((-1,), (0, 1)))  # lead n is zero at n=0
    with pytest.raises(SingularRecurrenceError):
        rec.unroll([3], 5)


def test_normalization_strips_content_and_fixes_sign():
    rec = c3_three_term()
    scaled = PRecurrence(tuple(tuple(-3 * c for c in p)
                               for p in rec.coeffs))
    assert scaled.normalized() == rec


def test_operator_factorizations():
    assert set(FACTOR_CHECKS) == {"c3", "e3"}
    assert factor_check("c3")
    assert factor_check("e3")
    assert c3_factor_operator().compose(c3_three_term()) == c3_four_term()
    assert e3_factor_operator().compose(e3_three_term()) == e3_four_term()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=4),
       st.lists(st.integers(-9, 9), min_size=2, max_size=4),
       st.lists(st.integers(-50, 50), min_size=10, max_size=12))
def test_compose_acts_like_operator_product(araw, braw, seq):
    outer = PRecurrence(tuple((c,) for c in araw[:-1]) + ((araw[-1], 1),))
    inner = PRecurrence(tuple((c,) for c in braw[:-1]) + ((braw[-1], 2),))
    prod = outer.compose(inner)

    def act(rec, f):
        return [rec.residual(f, n) for n in range(len(f) - rec.order)]

    via_stages = act(outer, act(inner, seq))
    assert act(prod, seq) == via_stages


def test_guess_recovers_short_recurrences_from_15_terms():
    out = guess(C3_40[:15], 2, 2)
    assert out.found == c3_three_term()
    assert out.order_degree == (2, 2)
    assert not out.certified_absent
    out = guess(E3_40[:15], 2, 2)
    assert out.found == e3_three_term().normalized()


def test_guess_prefers_minimal_shape_under_loose_bounds():
    out = guess(C3_40[:25], 4, 4)
    assert out.order_degree == (2, 2)
    assert out.found == c3_three_term()


def test_guess_on_constant_coefficient_data():
    fib = [1, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    out = guess(fib, 2, 1)
    assert out.found == PRecurrence(((-1,), (-1,), (1,)))
    assert out.order_degree == (2, 0)


def test_guess_certifies_absence_inside_small_bounds():
    out = guess(C3_40[:30], 1, 1)
    assert out.found is None
    assert out.certified_absent
    assert out.candidates_checked == 4


def test_guess_raises_when_data_too_short():
    with pytest.raises(UnderdeterminedError):
        guess(C3_40[:8], 3, 3)


def test_c4_search_reduced_bounds():
    report = c4_recurrence_search(terms=30, max_order=3, max_degree=3,
                                  brute_upto=6)
    assert report.outcome == "no recurrence within bounds (certified)"
    assert report.brute_checked_upto == 6
    assert report.candidates_checked == 16
    assert "30 terms" in report.summary()
