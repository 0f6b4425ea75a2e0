from fractions import Fraction as F
import csv
import io
import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from modhyp.errors import EqualCusps, NonHolomorphicCombination, NotPrimitive, UnknownFixture
from modhyp.eisenstein import (CuspLabel, EisLabel, alpha_table_csv, combination_series,
                               cusp_enumerate, cusp_to_vector, eis2_alpha, eis2_difference,
                               fixture_series)
from modhyp.exactnum import CycNumber, cyc_embed_numeric
from modhyp.qseries import eisenstein_level1


def cusp_count(N):
    # |Gamma(N) \ P^1(Q)| for N >= 3
    count = N * N
    for p in range(2, N + 1):
        if N % p == 0 and all(p % d for d in range(2, p)):
            count = count * (p * p - 1) // (p * p)
    return count // 2


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 8])
def test_cusp_counts(N):
    assert len(cusp_enumerate(N)) == cusp_count(N)


def test_cusp_lists():
    assert [str(c) for c in cusp_enumerate(3)] == ["0", "1", "2", "oo"]
    assert [str(c) for c in cusp_enumerate(4)] == ["0", "1/2", "1", "2", "3", "oo"]
    assert len(cusp_enumerate(5)) == 12


def test_labels():
    assert CuspLabel.parse(4, "oo").is_infinity
    assert str(CuspLabel.parse(4, "2/4")) == "1/2"
    assert cusp_to_vector(CuspLabel.parse(5, "3/2")).vector == (3, 2)
    with pytest.raises(NotPrimitive):
        EisLabel(4, (2, 2))
    assert EisLabel(5, (1, 2)).sign_class() == EisLabel(5, (4, 3)).sign_class()


def test_level_one_gives_E2():
    e2 = eisenstein_level1(2, 12).coefficient_list(0, 1, 12)
    assert [eis2_alpha(1, (0, 0), n) for n in range(12)] == [c / 12 for c in e2]


def test_constant_term_closed_form():
    assert eis2_alpha(3, (0, 1), 0) == F(1, 3)
    assert eis2_alpha(4, (1, 1), 0) == 0


@pytest.mark.parametrize("N,a2", [(3, 1), (4, 1), (5, 1), (5, 2), (7, 3), (8, 3)])
def test_constant_term_vs_hurwitz(N, a2):
    # sum over m in Z of 1/(m + x)^2 / (4 pi^2) with x = a2/N
    x = mpmath.mpf(a2) / N
    want = (mpmath.zeta(2, x) + mpmath.zeta(2, 1 - x)) / (4 * mpmath.pi ** 2)
    got = cyc_embed_numeric(eis2_alpha(N, (0, a2), 0))
    assert abs(got - want) < 1e-12


def test_holomorphic_combinations():
    with pytest.raises(NonHolomorphicCombination):
        combination_series(3, {CuspLabel(3, 0): 1}, 2)
    with pytest.raises(EqualCusps):
        eis2_difference(5, CuspLabel(5, 1, 2), CuspLabel(5, 4, 3), 2)
    s = eis2_difference(3, CuspLabel(3, 0), CuspLabel(3, 1, 0), 3)
    assert s.coefficient(0) == eis2_alpha(3, (0, 1), 0) - eis2_alpha(3, (1, 0), 0)
    assert s.coefficient(F(1, 3)) == eis2_alpha(3, (0, 1), 1) - eis2_alpha(3, (1, 0), 1)


def test_alpha_table_csv():
    text = alpha_table_csv(3, [EisLabel(3, (0, 1))], 4)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["n"] for r in rows] == ["0", "1", "2", "3"]
    assert rows[0]["coeff"] == "1/3"
    assert set(rows[0]) == {"N", "a1", "a2", "n", "coeff"}


def test_fixture_errors():
    with pytest.raises(UnknownFixture):
        fixture_series("nope", 2)


def test_fixture_series_are_holomorphic_and_exact():
    for name in ("S4-2dim", "A4-3dim", "S4-3dim", "A5-3dim-1", "A5-3dim-2"):
        for g in fixture_series(name, 2):
            assert g.valuation >= 0


primitive = st.tuples(st.integers(3, 9), st.integers(0, 8), st.integers(0, 8)).filter(
    lambda t: math.gcd(t[1], t[2], t[0]) == 1)


@settings(max_examples=200, deadline=None)
@given(primitive, st.integers(0, 30))
def test_alpha_is_even_in_the_label(t, n):
    N, a1, a2 = t
    assert CycNumber.coerce(eis2_alpha(N, (a1, a2), n), N) == CycNumber.coerce(
        eis2_alpha(N, (-a1, -a2), n), N)


@settings(max_examples=200, deadline=None)
@given(primitive, st.integers(1, 30))
def test_alpha_depends_on_residues_only(t, n):
    N, a1, a2 = t
    assert CycNumber.coerce(eis2_alpha(N, (a1, a2), n), N) == CycNumber.coerce(
        eis2_alpha(N, (a1 + N, a2 - 2 * N), n), N)
