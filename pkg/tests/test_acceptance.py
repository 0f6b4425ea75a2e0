"""Acceptance criteria, one marked group per criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""
import time
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from modhyp.eisenstein import fixture_series
from modhyp.exactnum import CycNumber
from modhyp.ffield import poly_roots_fp2, supersingular_j_invariants
from modhyp.golden import GOLDEN_EXPONENTS, GOLDEN_F, GOLDEN_G
from modhyp.mlde import (Form, d_to_theta, fuchsian_to_mlde, modular_derivative,
                         modular_wronskian, monic_mlde, monic_mlde_to_fuchsian,
                         theta_in_terms_of_d)
from modhyp.qseries import (PuiseuxSeries, eisenstein_level1, eta_power, hauptmodul_suite)
from modhyp.verify import (N7_HYP, S4_HYP, displayed_fuchsian, partial_zeta_values,
                           sample_parameters)
from modhyp.hypergeom import hyp_series
from modhyp.vvmf import minimal_vvmf, supersingular_polynomial, supersingular_polynomial_full

from strategies import series_strategy, weight_zero_free_series


def acceptance(n, title):
    return pytest.mark.acceptance(n, title)


# --- 1 -----------------------------------------------------------------------------

@acceptance(1, "Ramanujan identities, 30 coefficients, < 1s")
def test_c1_ramanujan_identities():
    t0 = time.perf_counter()
    e2, e4, e6 = (eisenstein_level1(k, 30) for k in (2, 4, 6))
    diffs = {
        "D2 E2 = -E4/12": modular_derivative(e2, 2).first_difference(e4.scale(F(-1, 12))),
        "D4 E4 = -E6/3": modular_derivative(e4, 4).first_difference(e6.scale(F(-1, 3))),
        "D6 E6 = -E4^2/2": modular_derivative(e6, 6).first_difference((e4 * e4).scale(F(-1, 2))),
    }
    elapsed = time.perf_counter() - t0
    broken = {k: v for k, v in diffs.items() if v is not None}
    assert not broken, f"identities fail (exponent, lhs, rhs): {broken}"
    assert elapsed < 1.0


# --- 2 -----------------------------------------------------------------------------

@acceptance(2, "reparameterized operators equal the displayed closed forms, < 5s")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_c2_reparameterization_closed_forms(n):
    t0 = time.perf_counter()
    for params in sample_parameters(n, 5):
        got = monic_mlde_to_fuchsian(monic_mlde(params))
        want = displayed_fuchsian(n, params)
        assert got == want, f"degree {n}, parameters {params}:\n  got  {got}\n  want {want}"
    assert time.perf_counter() - t0 < 5.0


# --- 3 -----------------------------------------------------------------------------

@acceptance(3, "fuchsian_to_mlde inverts monic_mlde_to_fuchsian up to (E4 E6)^n")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_c3_roundtrip(n):
    # theta_in_terms_of_d raises BoundViolation if h[m][j] exceeds (1-K)^(m-j)
    theta_in_terms_of_d(n)
    scale = Form.E4() * Form.E6()
    for params in sample_parameters(n, 5, seed=3):
        m = monic_mlde(params)
        back = fuchsian_to_mlde(monic_mlde_to_fuchsian(m))
        assert list(back.coeffs) == [scale ** n * c for c in m.coeffs]


# --- 4 -----------------------------------------------------------------------------

# the print of this component skips terms; any mismatch there is settled by the dual route
ARBITRATED = {"a4-3dim-f3"}


@acceptance(4, "golden expansions, precision 30, < 30s")
def test_c4_golden_expansions():
    t0 = time.perf_counter()
    cache = {}
    for key, (val, printed, last) in GOLDEN_F.items():
        exps = GOLDEN_EXPONENTS[key]
        if exps not in cache:
            cache[exps] = (minimal_vvmf(exps, 30, "hyp"), minimal_vvmf(exps, 30, "frobenius"))
        hyp, frob = cache[exps]
        i = [c.valuation for c in hyp.components].index(val)
        comp, other = hyp.components[i], frob.components[i]
        for k in range(last + 1):
            got = comp.coefficient(val + k)
            want = printed.get(k, F(0))
            if got == want:
                continue
            assert key in ARBITRATED and k not in printed, (key, val + k, got, want)
            assert other.coefficient(val + k) == got
    for key, (fixture, idx, printed, last) in GOLDEN_G.items():
        g = fixture_series(fixture, 30)[idx]
        N = {"S4-2dim": 4, "A4-3dim": 3}[fixture]
        for n in range(last + 1):
            assert g.coefficient(F(n, N)) == printed.get(n, F(0)), (key, n)
    assert time.perf_counter() - t0 < 30.0


# --- 5 -----------------------------------------------------------------------------

TABLE_ROWS = [
    (0, F(1, 3), F(2, 3)),
    (0, F(1, 4), F(3, 4)),
    (F(1, 2), F(1, 4), F(3, 4)),
    (0, F(1, 5), F(4, 5)),
    (0, F(2, 5), F(3, 5)),
    (F(1, 7), F(2, 7), F(4, 7)),
    (F(3, 7), F(5, 7), F(6, 7)),
    (0, F(1, 2)),
]


@acceptance(5, "hypergeometric and Frobenius routes agree on >= 15 coefficients")
@pytest.mark.parametrize("exps", TABLE_ROWS, ids=lambda e: "-".join(map(str, e)))
def test_c5_dual_route(exps):
    prec = F(16)
    a = minimal_vvmf(exps, prec, "hyp")
    b = minimal_vvmf(exps, prec, "frobenius")
    for x, y in zip(a.components, b.components):
        assert len(x.coefficient_list(x.valuation, 1, 15)) == 15
        assert x.first_difference(y) is None
        assert x.prec - x.valuation >= 15


# --- 6 -----------------------------------------------------------------------------

def _kvar(c):
    return PuiseuxSeries([0, c], 0, 1, 40)


@acceptance(6, "hypergeometric identities as formal series in K, 40 terms")
def test_c6_hypergeometric_identities():
    S = {k: hyp_series(p, 40) for k, p in S4_HYP.items()}
    assert S["F4"] == S["F2"] * S["F2"] - _kvar(F(1, 108)) * S["F3"] * S["F3"]
    assert S["F5"] == S["F1"] * S["F2"]
    assert S["F6"] == S["F1"] * S["F3"]
    T = {k: hyp_series(p, 40) for k, p in N7_HYP.items()}
    k = _kvar(F(1, 1728))
    f1, f2, f3 = T["F1"], T["F2"], T["F3"]
    assert T["F4"] == f1 * f1 * f1 + (k * f2 * f3 * f3).scale(3)
    assert T["F5"] == f2 * f2 * f1 - (k * f3 * f3 * f3).scale(F(1, 3))
    assert T["F6"] == (f1 * f1 * f3).scale(F(3, 2)) - (f2 * f2 * f2).scale(F(1, 2))
    assert f2 * f2 * f2 * f1 == f1 * f1 * f1 * f3 + k * f3 * f3 * f3 * f2
    assert f1.prec == 40


# --- 7 -----------------------------------------------------------------------------

def _combo(gs, coeffs):
    out = None
    for g, c in zip(gs, coeffs):
        if c != 0:
            out = g.scale(c) if out is None else out + g.scale(c)
    return out


def _linkage_cases():
    z3, z5 = CycNumber.zeta(3), CycNumber.zeta(5)
    c5 = -(z5 ** 3 * 2 + z5 ** 2 * 2 + 1)
    return [
        ("S4-2dim", (0, F(1, 2)), [[2, -3], [0, F(-1, 8)]]),
        ("A4-3dim", (0, F(1, 3), F(2, 3)),
         [[3, -1, -1], [0, (z3 + 1) / 3, -z3 / 3], [0, -z3 / 9, (z3 + 1) / 9]]),
        ("A5-3dim-1", (0, F(1, 5), F(4, 5)),
         [[c5, -1, 1], [0, F(1, 5), -z5 ** 3 / 5], [0, F(1, 15), -z5 ** 2 / 15]]),
        ("A5-3dim-2", (0, F(2, 5), F(3, 5)),
         [[c5, 1, -1], [0, F(1, 5), -z5 / 5], [0, F(1, 10), -z5 ** 4 / 10]]),
    ]


@acceptance(7, "Eisenstein f <-> g relations over Q(zeta_N), 15 q_N-coefficients")
@pytest.mark.parametrize("case", _linkage_cases(), ids=lambda c: c[0])
def test_c7_eisenstein_linkage(case):
    fixture, exps, rows = case
    N = {"S4-2dim": 4, "A4-3dim": 3, "A5-3dim-1": 5, "A5-3dim-2": 5}[fixture]
    prec = F(15, N)
    gs = fixture_series(fixture, prec)
    fs = minimal_vvmf(exps, prec + 1).components
    for f, coeffs in zip(fs, rows):
        rhs = _combo(gs, coeffs)
        assert rhs.prec == prec
        assert f.first_difference(rhs, prec) is None


# --- 8 -----------------------------------------------------------------------------

@acceptance(8, "Wronskian equals c eta^(24 lambda), 12 coefficients")
@pytest.mark.parametrize("exps", [(0, F(1, 2)), (0, F(1, 3), F(2, 3)),
                                  (F(1, 7), F(2, 7), F(4, 7))], ids=str)
def test_c8_wronskian(exps):
    lam = sum(exps)
    v = minimal_vvmf(exps, lam + 13)
    W = modular_wronskian(v.components, v.weight)
    assert W.valuation == lam
    c = W.leading_coefficient
    assert c != 0
    eta = eta_power(int(24 * lam), lam + 12)
    assert W.first_difference(eta.scale(c), lam + 12) is None


# --- 9 -----------------------------------------------------------------------------

@acceptance(9, "supersingular polynomials match brute-force curve counts, < 60s")
def test_c9_supersingular():
    t0 = time.perf_counter()
    for p in (11, 13, 23, 29, 31):
        special = {(0, 0), (1728 % p, 0)}
        oracle = supersingular_j_invariants(p)
        roots = poly_roots_fp2(supersingular_polynomial(p), p)
        assert roots - special == oracle - special, p
        expected_special = set()
        if p % 3 == 2:
            expected_special.add((0, 0))
        if p % 4 == 3:
            expected_special.add((1728 % p, 0))
        assert oracle & special == expected_special, p
        assert poly_roots_fp2(supersingular_polynomial_full(p), p) == oracle, p
    assert time.perf_counter() - t0 < 60.0


# --- 10 ----------------------------------------------------------------------------

@acceptance(10, "partial zeta identity at level 5 to 1e-6, < 5s")
def test_c10_partial_zeta():
    t0 = time.perf_counter()
    closed, direct, tail, target = partial_zeta_values(10 ** 6)
    assert abs(closed - target) < 1e-6
    assert tail < 1e-5
    assert abs(direct - target) < 1e-6
    assert time.perf_counter() - t0 < 5.0


# --- 11 ----------------------------------------------------------------------------

PROPERTY = settings(max_examples=200, deadline=None)


@acceptance(11, "property suites")
@PROPERTY
@given(series_strategy(), series_strategy(), series_strategy())
def test_c11_ring_axioms(a, b, c):
    assert (a + b).agrees_with(b + a)
    assert (a * b).agrees_with(b * a)
    assert ((a + b) + c).agrees_with(a + (b + c))
    assert ((a * b) * c).agrees_with(a * (b * c))
    assert (a * (b + c)).agrees_with(a * b + a * c)
    assert (a - a).agrees_with(PuiseuxSeries.zero(a.prec))
    assert (a * PuiseuxSeries.one()).agrees_with(a)


@acceptance(11, "property suites")
@PROPERTY
@given(series_strategy(), series_strategy())
def test_c11_leibniz(a, b):
    assert (a * b).theta().agrees_with(a.theta() * b + a * b.theta())


@acceptance(11, "property suites")
@PROPERTY
@given(st.integers(1, 12), st.data())
def test_c11_derivative_theta_bounds(j, data):
    P = d_to_theta(j)
    assert P.check_bounds()
    r = data.draw(st.integers(1, j))
    rho = min(j - r, j // 2)
    assert len(P.p(r)) - 1 <= rho


@acceptance(11, "property suites")
@PROPERTY
@given(weight_zero_free_series(), st.integers(-6, 12).map(lambda k: 2 * k))
def test_c11_commutation_rules(f, k):
    e4 = eisenstein_level1(4, f.prec)
    e6 = eisenstein_level1(6, f.prec)
    lhs4 = modular_derivative(e4 * f, k + 4) - e4 * modular_derivative(f, k)
    assert lhs4.agrees_with((e6 * f).scale(F(-1, 3)))
    lhs6 = modular_derivative(e6 * f, k + 6) - e6 * modular_derivative(f, k)
    assert lhs6.agrees_with((e4 * e4 * f).scale(F(-1, 2)))


@acceptance(11, "property suites")
@PROPERTY
@given(st.integers(2, 60))
def test_c11_eta24_is_delta(n):
    delta = hauptmodul_suite(F(n)).delta
    assert eta_power(24, n) == delta


@acceptance(11, "property suites")
@PROPERTY
@given(st.integers(1, 60))
def test_c11_discriminant(n):
    e4, e6 = eisenstein_level1(4, n), eisenstein_level1(6, n)
    delta = hauptmodul_suite(F(n)).delta
    assert (e4 * e4 * e4 - e6 * e6) == delta.scale(1728)
