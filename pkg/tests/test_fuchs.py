import pytest
from hypothesis import given, settings, strategies as st

from modhyp.errors import NotFuchsianOnThreePoints
from modhyp.fuchs import FuchsOperator, RatK, apply_in_q
from modhyp.qseries import PuiseuxSeries, hauptmodul_suite

fracs = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def ratk(draw):
    num = draw(st.lists(fracs, min_size=1, max_size=4))
    return RatK(num, draw(st.integers(0, 2)), draw(st.integers(0, 2)))


PREC = 12


def ser(r):
    return r.to_series(PREC)


def test_lowest_terms():
    r = RatK((1, -1), 0, 2)  # (1-K)/(1-K)^2
    assert (r.num, r.kpow, r.ompow) == ((1,), 0, 1)
    r = RatK((0, 0, 3), 1, 0)
    assert (r.num, r.kpow) == ((0, 3), 0)


def test_division_by_other_polynomials_is_rejected():
    with pytest.raises(NotFuchsianOnThreePoints):
        RatK.const(1) / RatK((1, 1))
    with pytest.raises(ZeroDivisionError):
        RatK.const(1) / RatK()


def test_theta_of_K_over_one_minus_K():
    r = RatK((0, 1), 0, 1)
    assert r.theta() == RatK((0, 1), 0, 2)


def test_string_form():
    assert str(RatK((1, 2), 0, 1)) == "(1 + 2*K)/(1 - K)"
    assert str(FuchsOperator.theta() ** 2 - 1) == "TK^2 + -1"


@settings(max_examples=200, deadline=None)
@given(ratk(), ratk(), ratk())
def test_ratk_field_ops_match_series(a, b, c):
    assert ser(a + b).agrees_with(ser(a) + ser(b))
    assert ser(a * b).agrees_with(ser(a) * ser(b))
    assert (a * (b + c)) == a * b + a * c


@settings(max_examples=200, deadline=None)
@given(ratk(), ratk())
def test_theta_is_a_derivation(a, b):
    assert (a * b).theta() == a.theta() * b + a * b.theta()
    assert ser(a.theta()).agrees_with(ser(a).theta())


@settings(max_examples=200, deadline=None)
@given(ratk(), ratk(), st.lists(fracs, min_size=1, max_size=8))
def test_operator_product_is_composition(a, b, f):
    L1 = FuchsOperator([a, 1])
    L2 = FuchsOperator([b, RatK.const(2), 1])
    g = PuiseuxSeries(f, 3, 1, 3 + len(f))
    lhs = (L1 * L2).apply(g)
    rhs = L1.apply(L2.apply(g))
    assert lhs.agrees_with(rhs)


def test_apply_in_q_matches_K_derivative():
    # theta_K K = K, checked after substituting K(q)
    K = hauptmodul_suite(12).K
    assert apply_in_q(FuchsOperator.theta(), K, 10).agrees_with(K.truncate(10))


def test_apply_needs_precision():
    with pytest.raises(ValueError):
        FuchsOperator.theta().apply(PuiseuxSeries([1, 2]))
