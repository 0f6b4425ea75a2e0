from fractions import Fraction as F
import math

import pytest
from hypothesis import given, settings, strategies as st

from modhyp.errors import InvalidWeight, ZeroLeadingCoefficient, InfinitePrecision
from modhyp.qseries import (PuiseuxSeries, bernoulli, eisenstein_level1, eta_power,
                            hauptmodul_suite, series_arith)

from strategies import series_strategy, unit_series

N = 25


# --- integer-list oracles -----------------------------------------------------------

def sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def imul(a, b, n=N):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def naive_euler_product(n=N):
    out = [1] + [0] * (n - 1)
    for m in range(1, n):
        fac = [0] * n
        fac[0], fac[m] = 1, -1
        out = imul(out, fac, n)
    return out


def test_eisenstein_against_divisor_sums():
    for k, c in ((2, -24), (4, 240), (6, -504), (8, 480)):
        e = eisenstein_level1(k, N)
        assert e.coefficient_list(0, 1, N) == [1] + [c * sigma(k - 1, n) for n in range(1, N)]


def test_eta_against_naive_product():
    eta = naive_euler_product()
    delta = eta
    for _ in range(23):
        delta = imul(delta, eta)
    assert eta_power(24, N + 1).coefficient_list(1, 1, N) == delta
    e1 = eta_power(1, F(1, 24) + N)
    assert e1.valuation == F(1, 24)
    assert e1.coefficient_list(F(1, 24), 1, N) == eta


def test_j_and_K_against_integer_arithmetic():
    e4 = [1] + [240 * sigma(3, n) for n in range(1, N)]
    e43 = imul(imul(e4, e4), e4)
    s = hauptmodul_suite(N)
    delta = s.delta.coefficient_list(1, 1, N - 1)
    # j * delta = E4^3, with delta = q(1 + ...)
    j = s.j.coefficient_list(-1, 1, N)
    assert imul(j, delta, N - 1) == e43[: N - 1]
    assert j[:3] == [1, 744, 196884]
    assert s.K.coefficient_list(1, 1, 2) == [1728, -1285632]


def test_bernoulli_numbers():
    assert [bernoulli(n) for n in (0, 1, 2, 4, 6, 12)] == [
        1, F(1, 2), F(1, 6), F(-1, 30), F(1, 42), F(-691, 2730)]


def test_invalid_weight():
    for k in (0, 3, -2):
        with pytest.raises(InvalidWeight):
            eisenstein_level1(k, 5)


def test_invert_and_pow():
    e4 = eisenstein_level1(4, 20)
    inv = e4.invert(20)
    assert (e4 * inv).agrees_with(PuiseuxSeries.one())
    root = e4.pow_rational(F(1, 3), 20)
    assert (root * root * root).agrees_with(e4)
    with pytest.raises(ZeroLeadingCoefficient):
        PuiseuxSeries.zero(5).invert(5)


def test_exact_inverse_needs_precision():
    one_minus_q = PuiseuxSeries([1, -1])
    with pytest.raises(InfinitePrecision):
        one_minus_q.invert()
    assert one_minus_q.invert(6).coefficient_list(0, 1, 6) == [1] * 6


def test_compose_K_into_polynomial():
    K = hauptmodul_suite(10).K
    p = PuiseuxSeries([1, 2, 3])  # 1 + 2x + 3x^2
    got = p.compose(K, prec=10)
    want = (PuiseuxSeries.one() + K.scale(2) + (K * K).scale(3)).truncate(10)
    assert got == want


def test_format_and_record_roundtrip():
    s = PuiseuxSeries([1, F(-1, 2), 0, 3], F(1, 3), 3, 2)
    assert PuiseuxSeries.from_record(s.to_record()) == s
    assert s.format() == "q^(1/3) - 1/2*q^(2/3) + 3*q^(4/3) + O(q^2)"


def test_first_difference_reports_witness():
    a = PuiseuxSeries([1, 2, 3], 0, 1, 3)
    b = PuiseuxSeries([1, 2, 4], 0, 1, 3)
    assert a.first_difference(b) == (2, 3, 4)
    assert a.first_difference(b, 2) is None


def test_series_arith_dispatch():
    a = PuiseuxSeries([1, 1], 0, 1, 5)
    assert series_arith(a, a, "mul") == a * a
    with pytest.raises(ValueError):
        series_arith(a, a, "pow")


PROP = settings(max_examples=200, deadline=None)


@PROP
@given(series_strategy(), series_strategy())
def test_precision_is_min_of_operands(a, b):
    s = a + b
    assert s.prec == min(a.prec, b.prec)
    p = a * b
    if not a.is_zero() and not b.is_zero():
        assert p.prec == min(a.prec + b.valuation, b.prec + a.valuation)


@PROP
@given(unit_series())
def test_inverse_property(a):
    rel = a.prec - a.valuation
    assert (a * a.invert(rel)).agrees_with(PuiseuxSeries.one())


@PROP
@given(unit_series(), st.sampled_from([F(1, 2), F(1, 3), F(-2, 3), F(5, 4)]))
def test_rational_power_composes(a, e):
    rel = a.prec
    x = a.pow_rational(e, rel)
    y = x.pow_rational(1 / e, rel)
    assert y.agrees_with(a)


@PROP
@given(series_strategy())
def test_record_roundtrip(a):
    assert PuiseuxSeries.from_record(a.to_record()) == a


@PROP
@given(st.integers(1, 40))
def test_eta_pentagonal_vs_product(n):
    assert eta_power(24, n + 1).coefficient_list(1, 1, n) == (
        hauptmodul_suite(n + 1).delta.coefficient_list(1, 1, n))
    assert math.isinf(PuiseuxSeries.one().prec)
