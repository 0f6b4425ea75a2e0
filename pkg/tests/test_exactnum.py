from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from modhyp.errors import DivisionByZero, IncompatibleEmbedding
from modhyp.exactnum import (CycNumber, cyc_arith, cyc_embed_numeric, cyclotomic_polynomial,
                             euler_phi, format_scalar, scalar_from_record, scalar_to_record)

ORDERS = [1, 2, 3, 4, 5, 7, 8, 12]
fracs = st.fractions(min_value=-9, max_value=9, max_denominator=7)


@st.composite
def cyc(draw, orders=ORDERS):
    n = draw(st.sampled_from(orders))
    return CycNumber(n, draw(st.lists(fracs, min_size=0, max_size=euler_phi(n))))


def close(x, y, tol=1e-12):
    return abs(x - y) < tol


@pytest.mark.parametrize("n,phi", [(1, (-1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)),
                                   (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_polynomials(n, phi):
    assert cyclotomic_polynomial(n) == phi


def test_zeta_relations():
    z = CycNumber.zeta(5)
    assert z ** 5 == 1
    assert 1 + z + z ** 2 + z ** 3 + z ** 4 == 0
    assert CycNumber.zeta(4) ** 2 == -1
    assert CycNumber.zeta(12, 4) == CycNumber.zeta(3)


def test_embed_and_project_roundtrip():
    a = CycNumber(3, [F(1, 2), F(-3)])
    big = a.embed(12)
    assert big == a
    assert big.project(3).coeffs == a.coeffs
    assert big.canonical().order == 3
    with pytest.raises(IncompatibleEmbedding):
        a.embed(4)
    with pytest.raises(IncompatibleEmbedding):
        CycNumber.zeta(12).project(3)


def test_mixed_orders_use_common_field():
    s = CycNumber.zeta(3) + CycNumber.zeta(4)
    assert s.order == 12
    assert close(cyc_embed_numeric(s), mpmath.expjpi(F(2, 3)) + 1j)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        CycNumber.zeta(5) / CycNumber(5)
    with pytest.raises(ZeroDivisionError):
        CycNumber.zeta(5) / 0


def test_conjugate_is_inverse_on_roots_of_unity():
    for n in ORDERS[1:]:
        z = CycNumber.zeta(n)
        assert z.conjugate() * z == 1


def test_format_and_records():
    z = CycNumber.zeta(3)
    assert format_scalar(1 - z) == "1 - zeta3"
    assert format_scalar(F(3, 2)) == "3/2"
    assert format_scalar(CycNumber.rational(F(-1, 4), 5)) == "-1/4"
    for x in (F(7, 3), 2 * z - F(1, 5)):
        assert scalar_from_record(scalar_to_record(x)) == x


def test_cyc_arith_ops():
    z = CycNumber.zeta(7)
    assert cyc_arith(z, z, "mul") == z ** 2
    assert cyc_arith(1, z, "sub") == 1 - z
    assert cyc_arith(z, 2, "div") * 2 == z
    with pytest.raises(ValueError):
        cyc_arith(z, z, "pow")


@settings(max_examples=200, deadline=None)
@given(cyc(), cyc(), cyc())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=200, deadline=None)
@given(cyc(), cyc(), st.sampled_from(["add", "sub", "mul", "div"]))
def test_arithmetic_matches_numeric_embedding(a, b, op):
    if op == "div" and b.is_zero():
        return
    exact = cyc_arith(a, b, op)
    x, y = cyc_embed_numeric(a, 120), cyc_embed_numeric(b, 120)
    with mpmath.workprec(120):
        want = {"add": lambda: x + y, "sub": lambda: x - y,
                "mul": lambda: x * y, "div": lambda: x / y}[op]()
        assert abs(cyc_embed_numeric(exact, 120) - want) < mpmath.mpf(10) ** -25 * (1 + abs(want))


@settings(max_examples=200, deadline=None)
@given(cyc())
def test_hash_respects_embedding(a):
    assert hash(a) == hash(a.embed(a.order * 2))
    assert a == a.embed(a.order * 2)
