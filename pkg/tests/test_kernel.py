import pytest

from crossnest import walks
from crossnest.core import InconsistentDataError
from crossnest.kernel import (HESITATING, KINDS, VACILLATING, LaurentSeries,
                              axis_coefficient_tables, c3_series,
                              c3_series_fullform,
                              check_root_symmetry,
                              check_substitution_identities,
                              combined_axis_expression, e3_series,
                              extract_H_V, functional_equation_residual,
                              kernel_polynomial, solve_root_Y)

C3 = [1, 1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566]
E3 = [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032, 71084]


def test_series_arithmetic():
    x = LaurentSeries.monomial(1, 1, 0, 4)
    xbar = LaurentSeries.monomial(1, -1, 0, 4)
    t = LaurentSeries.monomial(1, 0, 1, 4)
    expr = (x + xbar) * t
    assert expr.coefficient(1) == {-1: 1, 1: 1}
    assert (expr - expr).is_zero()
    assert expr.pow(2).coefficient(2) == {-2: 1, 0: 2, 2: 1}
    assert expr.substitute_x_inverse() == expr
    assert expr.times_monomial(3, 2, 1).coefficient(2) == {1: 3, 3: 3}


def test_divide_one_plus_x():
    base = LaurentSeries([{0: 1, 1: 3, 2: 3, 3: 1}])  # (1+x)^3
    quot = base.divide_one_plus_x()
    assert quot.coefficient(0) == {0: 1, 1: 2, 2: 1}
    with pytest.raises(InconsistentDataError):
        LaurentSeries([{0: 1, 2: 1}]).divide_one_plus_x()


def test_divide_t_requires_zero_constant():
    s = LaurentSeries([{}, {0: 5}])
    assert s.divide_t().coefficient(0) == {0: 5}
    with pytest.raises(InconsistentDataError):
        LaurentSeries([{0: 1}, {}]).divide_t()


def test_root_first_coefficients():
    y = solve_root_Y(VACILLATING, 3)
    assert y.coefficient(0) == {}
    assert y.coefficient(1) == {0: 1, 1: 1}
    assert y.coefficient(2) == {-1: 1, 0: 4, 1: 4, 2: 1}
    yh = solve_root_Y(HESITATING, 2)
    assert yh.coefficient(1) == {0: 1, 1: 1}


def test_kernel_vanishes_at_root():
    for kind in KINDS:
        assert kernel_polynomial(kind, 10).is_zero()


def test_root_symmetry_through_t15():
    for kind in KINDS:
        assert check_root_symmetry(kind, 15)


def test_combined_expression_first_order():
    g = combined_axis_expression(VACILLATING, 2)
    assert g.coefficient(0) == {2: 1}
    assert g.coefficient(1) == {-2: 1, -1: 1, 1: 1, 2: 2, 3: 1}
    gh = combined_axis_expression(HESITATING, 2)
    assert gh.coefficient(0) == {2: 1}
    assert gh.coefficient(1) == {-3: 1, -2: 1, 1: 1, 2: 2, 3: 1}


def test_extraction_has_no_stray_center_terms():
    for kind in KINDS:
        xh, nt = extract_H_V(kind, 8)
        for m in range(9):
            assert all(e >= 1 for e in xh.coefficient(m))
            assert all(e <= -1 for e in nt.coefficient(m))
            if kind == HESITATING:
                assert all(e <= -2 for e in nt.coefficient(m))


def test_series_match_frozen_prefixes():
    assert list(c3_series(10)) == C3
    assert list(e3_series(10)) == E3
    assert list(c3_series_fullform(10)) == C3


def test_axis_tables_equal_walk_axis_counts():
    pairs = ((VACILLATING, walks.VACILLATING), (HESITATING, walks.HESITATING))
    for kind, rule in pairs:
        h_table, v_table = axis_coefficient_tables(kind, 8)
        for n in range(9):
            lay = walks.layer_distributions(rule, walks.ORTHANT, 2, (1, 0),
                                            2 * n)[2 * n]
            assert h_table[n] == {p[0]: c for p, c in lay.items() if p[1] == 0}
            assert v_table[n] == {p[1]: c for p, c in lay.items() if p[0] == 0}


def test_substitution_identities():
    for kind in KINDS:
        assert check_substitution_identities(kind, 12)


def test_functional_equation_residuals_on_dp_data():
    for kind in KINDS:
        assert functional_equation_residual(kind, 8)
