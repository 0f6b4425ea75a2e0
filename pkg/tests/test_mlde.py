from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from modhyp.errors import (BoundViolation, NonzeroWeight, NotAnIndicialRoot, NotFuchsianOnThreePoints,
                           NotMonic, ResonantExponent)
from modhyp.fuchs import FuchsOperator, RatK, apply_in_q
from modhyp.mlde import (Form, Mlde, d_to_theta, frobenius_solve_mlde, fuchsian_to_mlde,
                         iterated_derivative, mlde_indicial_roots, modular_derivative,
                         modular_wronskian, monic_mlde, monic_mlde_to_fuchsian,
                         theta_in_terms_of_d)
from modhyp.qseries import PuiseuxSeries, eisenstein_level1, eta_power, hauptmodul_suite

from strategies import weight_zero_free_series

P = 20


def test_form_derivative_matches_series():
    for f, k in ((Form.E4(), 4), (Form.E6(), 6), (Form.E4() ** 2 * Form.E6(), 14)):
        assert f.derive().series(P).agrees_with(modular_derivative(f.series(P), k))


def test_derivative_of_delta_vanishes():
    delta = eta_power(24, P + 1)
    assert modular_derivative(delta, 12).is_zero()


def test_iterated_derivative_identity_and_weights():
    e4 = eisenstein_level1(4, P)
    assert iterated_derivative(e4, 4, 0) is e4
    assert iterated_derivative(e4, 4, 2).agrees_with(Form.E4().derive().derive().series(P))


def test_wronskian_of_one_and_K():
    K = hauptmodul_suite(P).K
    one = PuiseuxSeries.one().truncate(P)
    assert modular_wronskian([one, K], 0).agrees_with(K.theta())
    with pytest.raises(ValueError):
        modular_wronskian([], 0)


def test_mlde_string():
    assert str(monic_mlde([F(-1, 18)], weight=2)) == "D^2 - (1/18)*E4"
    assert str(monic_mlde([0, F(1, 2)])) == "D^3 + (1/2)*E6"


def test_indicial_roots_degree2_weight0():
    # x(x - 1/6) + a with roots 1/24 and 1/8
    m = monic_mlde([F(1, 192)])
    assert sorted(mlde_indicial_roots(m)) == [F(1, 24), F(1, 8)]


def test_monic_mlde_rejects_degree():
    with pytest.raises(ValueError):
        monic_mlde([])
    with pytest.raises(ValueError):
        monic_mlde([1, 2, 3, 4, 5])


def test_conversion_error_cases():
    with pytest.raises(NonzeroWeight):
        monic_mlde_to_fuchsian(monic_mlde([1], weight=2))
    with pytest.raises(NotMonic):
        monic_mlde_to_fuchsian(Mlde([Form.E4(), 0, 2]))
    with pytest.raises(NotFuchsianOnThreePoints):
        fuchsian_to_mlde(FuchsOperator([RatK((1,), 1, 0), 0, 1]))


def test_h_matrix_inverts_theta_expansion():
    h = theta_in_terms_of_d(6)
    th = FuchsOperator.theta()
    for m in range(1, 7):
        total = FuchsOperator([])
        for j, c in h[m].items():
            total = total + d_to_theta(j).operator().left_scale(c)
        assert total == th ** m


@pytest.mark.parametrize("n,params", [(2, [F(-1, 18)]), (3, [F(1, 7), F(-2, 5)]),
                                      (4, [1, F(1, 3), F(-1, 2)]), (5, [F(1, 2), 2, F(-1, 5), 3])])
def test_intertwining_with_A_power(n, params):
    m = monic_mlde(params)
    L = monic_mlde_to_fuchsian(m)
    prec = 14
    s = hauptmodul_suite(prec + 2)
    probe = (s.K + s.K * s.K.scale(F(1, 3))).truncate(prec + 2)
    lhs = m.apply(probe)
    An = s.A
    for _ in range(n - 1):
        An = An * s.A
    rhs = An * apply_in_q(L, probe, prec + 2)
    assert lhs.agrees_with(rhs, prec)


def test_frobenius_basic_and_errors():
    m = monic_mlde([F(1, 192)])
    f = frobenius_solve_mlde(m, F(1, 8), 10)
    assert f.valuation == F(1, 8)
    assert m.apply(f).is_zero()
    with pytest.raises(NotAnIndicialRoot):
        frobenius_solve_mlde(m, F(1, 3), 5)


def test_resonant_exponent_detected():
    # x(x - 1/6) + a with roots -5/12 and 7/12
    a = F(-5, 12) * F(7, 12)
    m = monic_mlde([a])
    assert sorted(mlde_indicial_roots(m)) == [F(-5, 12), F(7, 12)]
    with pytest.raises(ResonantExponent):
        frobenius_solve_mlde(m, F(-5, 12), 5)
    assert frobenius_solve_mlde(m, F(7, 12), 8).valuation == F(7, 12)


PROP = settings(max_examples=200, deadline=None)


@PROP
@given(st.integers(1, 12))
def test_theta_poly_bounds(j):
    P_j = d_to_theta(j)
    assert P_j.check_bounds()
    for r in range(1, j + 1):
        assert len(P_j.p(r)) - 1 <= P_j.rho(j, r)


@PROP
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=9), min_size=1, max_size=4),
       st.integers(0, 2**16))
def test_roundtrip_property(params, _seed):
    m = monic_mlde(params)
    n = m.degree
    back = fuchsian_to_mlde(monic_mlde_to_fuchsian(m))
    assert list(back.coeffs) == [(Form.E4() * Form.E6()) ** n * c for c in m.coeffs]


@PROP
@given(weight_zero_free_series(), st.integers(-4, 8).map(lambda k: 2 * k))
def test_derivative_leibniz_with_weights(f, k):
    e4 = eisenstein_level1(4, f.prec)
    lhs = modular_derivative(e4 * f, k + 4)
    rhs = Form.E4().derive().series(f.prec) * f + e4 * modular_derivative(f, k)
    assert lhs.agrees_with(rhs)


def test_bound_violation_type():
    assert issubclass(BoundViolation, ArithmeticError)
