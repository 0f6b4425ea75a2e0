"""Minimal-weight vector-valued modular forms of dimension 2 and 3.

Components are built from hypergeometric series in K = 1728/j and, as an
independent route, by solving the attached MLDE term by term in q.  Every
component is normalized to have leading coefficient 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (CompositeInput, EqualExponents, LogarithmicCase, NonIntegralWeight,
                     PrecisionTooLow, ResonantExponent)
from .exactnum import to_fraction
from .hypergeom import bh_solution_params, hyp_series
from .mlde import Mlde, frobenius_solve_mlde, monic_mlde
from .qseries import (PuiseuxSeries, eisenstein_level1, eta_power, hauptmodul_suite)

ALPHAS = {2: (Fraction(0), Fraction(1, 3)), 3: (Fraction(0), Fraction(1, 3), Fraction(2, 3))}


@dataclass(frozen=True)
class ExponentSet:
    exponents: tuple

    def __init__(self, exponents):
        rs = tuple(to_fraction(r) for r in exponents)
        for r in rs:
            if not 0 <= r < 1:
                raise ValueError(f"exponent {r} is not in [0, 1)")
        for i in range(len(rs)):
            for j in range(i + 1, len(rs)):
                if rs[i] == rs[j]:
                    raise EqualExponents(f"exponent {rs[i]} is repeated")
        object.__setattr__(self, "exponents", rs)

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)


@dataclass
class VvmfComponents:
    weight: int
    exponents: tuple
    components: list
    mlde: Mlde
    params: tuple = ()
    route: str = "hyp"
    hyp_data: list = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "weight": self.weight,
            "exponents": [str(r) for r in self.exponents],
            "mlde": str(self.mlde),
            "parameters": [str(p) for p in self.params],
            "route": self.route,
            "components": [c.to_record() for c in self.components],
        }


@dataclass(frozen=True)
class WeightList:
    weights: tuple

    def __init__(self, weights):
        ws = tuple(sorted(int(w) for w in weights))
        if not ws:
            raise ValueError("weight list must be nonempty")
        object.__setattr__(self, "weights", ws)


def dim_formula(w, k: int) -> int:
    """Coefficient of t^k in (t^k1 + ... + t^kn)/((1 - t^4)(1 - t^6))."""
    ws = w.weights if isinstance(w, WeightList) else tuple(w)
    total = 0
    for ki in ws:
        d = k - ki
        if d < 0 or d % 2:
            continue
        total += sum(1 for a in range(d // 4 + 1) if (d - 4 * a) % 6 == 0)
    return total


def _shifted_exponents(rs, k):
    return [r - Fraction(k, 12) for r in rs]


def dim2_parameters(e) -> tuple:
    """(k, a) for D_k^2 + a E4 from two exponents."""
    r1, r2 = ExponentSet(e).exponents
    k = 6 * (r1 + r2) - 1
    if k.denominator != 1:
        raise NonIntegralWeight(f"6(r1 + r2) - 1 = {k} is not an integer")
    k = int(k)
    s1, s2 = _shifted_exponents((r1, r2), k)
    return k, (s1 * s2,)


def dim3_parameters(e) -> tuple:
    """(k, (a, b)) for D_k^3 + a E4 D_k + b E6, matched against prod (theta - s_i)."""
    rs = ExponentSet(e).exponents
    if len(rs) != 3:
        raise ValueError("three exponents required")
    k = 4 * sum(rs) - 2
    if k.denominator != 1:
        raise NonIntegralWeight(f"4(r1 + r2 + r3) - 2 = {k} is not an integer")
    k = int(k)
    s = _shifted_exponents(rs, k)
    e2 = s[0] * s[1] + s[0] * s[2] + s[1] * s[2]
    e3 = s[0] * s[1] * s[2]
    return k, (e2 - Fraction(1, 18), -e3)


def _check_nonresonant(rs):
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if (rs[i] - rs[j]).denominator == 1:
                raise ResonantExponent(f"exponents {rs[i]} and {rs[j]} differ by an integer")


def hypergeometric_component(shift, params, k: int, prec) -> PuiseuxSeries:
    """eta^(2k) (K/1728)^shift F(K) to absolute precision prec."""
    prec = to_fraction(prec)
    val = Fraction(k, 12) + shift
    rel = prec - val
    if rel <= 0:
        return PuiseuxSeries.zero(prec)
    suite = hauptmodul_suite(math.ceil(rel) + 1)
    K = suite.K
    F = hyp_series(params, math.ceil(rel))
    body = F.compose(K, prec=rel)
    kn = (K / 1728).pow_rational(shift, prec=rel)
    eta = eta_power(2 * k, Fraction(k, 12) + rel)
    return (eta * kn * body).truncate(prec)


def _build(rs, k, params, prec, route):
    n = len(rs)
    m = monic_mlde(params, weight=k)
    s = _shifted_exponents(rs, k)
    betas = [1 - x for x in s]
    order = sorted(range(n), key=lambda i: rs[i])
    comps, hyp = [], []
    for i in order:
        _, hp = bh_solution_params(ALPHAS[n], betas, i)
        hyp.append((s[i], hp))
        if route == "hyp":
            comps.append(hypergeometric_component(s[i], hp, k, prec))
        elif route == "frobenius":
            comps.append(frobenius_solve_mlde(m, rs[i], prec))
        else:
            raise ValueError(f"unknown route {route!r}")
    return VvmfComponents(k, tuple(rs[i] for i in order), comps, m, tuple(params), route, hyp)


def dim2_minimal(e, precision=30, route: str = "hyp") -> VvmfComponents:
    rs = ExponentSet(e).exponents
    if len(rs) != 2:
        raise ValueError("two exponents required")
    k, params = dim2_parameters(rs)
    _check_nonresonant(rs)
    return _build(rs, k, params, to_fraction(precision), route)


def dim3_minimal(e, precision=30, route: str = "hyp") -> VvmfComponents:
    rs = ExponentSet(e).exponents
    k, params = dim3_parameters(rs)
    _check_nonresonant(rs)
    return _build(rs, k, params, to_fraction(precision), route)


def minimal_vvmf(e, precision=30, route: str = "hyp") -> VvmfComponents:
    rs = tuple(e)
    if len(rs) == 2:
        return dim2_minimal(rs, precision, route)
    if len(rs) == 3:
        return dim3_minimal(rs, precision, route)
    raise ValueError("only dimensions 2 and 3 are supported")


def eta_twist(v: VvmfComponents, t: int) -> VvmfComponents:
    """Multiply every component by eta^t; the weight moves by t/2."""
    if t % 2:
        raise ValueError("twist exponent must be even")
    if t == 0:
        return v
    shifted = []
    for c in v.components:
        rel = c.prec - c.valuation
        eta = eta_power(t, Fraction(t, 24) + rel)
        shifted.append(c * eta)
    m = Mlde(v.mlde.coeffs, v.mlde.l + t // 2)
    return VvmfComponents(v.weight + t // 2, tuple(r + Fraction(t, 24) for r in v.exponents),
                          shifted, m, v.params, v.route, v.hyp_data)


# --- Kaneko-Zagier equation and supersingular polynomials ----------------------------

def kaneko_zagier_mlde(k: int) -> Mlde:
    """D_k^2 - k(k+2)/144 E4 acting on weight k."""
    return monic_mlde([Fraction(-k * (k + 2), 144)], weight=k)


def kaneko_zagier_scalar(k: int, precision=30) -> PuiseuxSeries:
    """The solution of the Kaneko-Zagier equation with q-expansion 1 + O(q)."""
    if (k + 1) % 6 == 0:
        raise LogarithmicCase(f"indicial roots 0 and {Fraction(k + 1, 6)} differ by an integer")
    return frobenius_solve_mlde(kaneko_zagier_mlde(k), 0, precision)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def supersingular_exponents(p: int) -> tuple:
    """(m, delta, epsilon) with 12m + 4 delta + 6 epsilon = p - 1."""
    w = p - 1
    for eps in range(3):
        for delta in range(4):
            rest = w - 4 * delta - 6 * eps
            if rest >= 0 and rest % 12 == 0:
                return rest // 12, delta, eps
    raise ValueError(f"no decomposition for weight {w}")


def kaneko_zagier_j_polynomial(p: int, precision=None) -> list:
    """Rational coefficients (lowest first) of f with F_{p-1} / (Delta^m E4^d E6^e) = f(j)."""
    m, delta, eps = supersingular_exponents(p)
    prec = Fraction(m + 4) if precision is None else to_fraction(precision)
    if prec < m + 2:
        raise PrecisionTooLow(f"need at least {m + 2} coefficients, got {prec}")
    work = prec + 2
    F = kaneko_zagier_scalar(p - 1, work)
    suite = hauptmodul_suite(work)
    denom = PuiseuxSeries.one()
    for _ in range(m):
        denom = denom * suite.delta
    e4 = eisenstein_level1(4, work)
    e6 = eisenstein_level1(6, work)
    for _ in range(delta):
        denom = denom * e4
    for _ in range(eps):
        denom = denom * e6
    g = F / denom
    jp = suite.j
    powers = [PuiseuxSeries.one()]
    for _ in range(m):
        powers.append(powers[-1] * jp)
    coeffs = [Fraction(0)] * (m + 1)
    rest = g
    for d in range(m, -1, -1):
        c = rest.coefficient(-d)
        coeffs[d] = c
        rest = rest - powers[d].scale(c)
    if not rest.is_zero():
        raise PrecisionTooLow(f"weight-zero quotient is not a polynomial in j: remainder {rest}")
    return coeffs


def _poly_mod_p(coeffs, p: int) -> list:
    out = []
    for c in coeffs:
        c = to_fraction(c)
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"coefficient {c} has p in its denominator")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    while out and out[-1] == 0:
        out.pop()
    return out


def _fp_trim(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_poly_divmod(a, b, p):
    a, b = _fp_trim(a, p), _fp_trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv % p
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    r = a[: len(b) - 1]
    while r and r[-1] == 0:
        r.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, r


def fp_poly_gcd(a, b, p):
    a, b = _fp_trim(a, p), _fp_trim(b, p)
    while b:
        _, r = fp_poly_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def fp_poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def fp_squarefree_monic(f, p):
    """Product of the distinct irreducible factors of f (f/gcd(f, f'))."""
    f = list(f)
    d = [(i * c) % p for i, c in enumerate(f)][1:]
    while d and d[-1] == 0:
        d.pop()
    g = fp_poly_gcd(f, d, p) if d else list(f)
    q, _ = fp_poly_divmod(f, g, p)
    inv = pow(q[-1], -1, p)
    return [c * inv % p for c in q]


def supersingular_polynomial(p: int, precision=None) -> list:
    """Monic squarefree reduction mod p of the j-polynomial attached to F_{p-1}.

    Coefficients are integers in [0, p), lowest degree first.
    """
    if not is_prime(p):
        raise CompositeInput(f"{p} is not prime")
    if p <= 5:
        raise ValueError("p must exceed 5")
    f = _poly_mod_p(kaneko_zagier_j_polynomial(p, precision), p)
    if len(f) <= 1:
        return [1]
    return fp_squarefree_monic(f, p)


def supersingular_polynomial_full(p: int, precision=None) -> list:
    """As above, times j^delta (j - 1728)^epsilon."""
    _, delta, eps = supersingular_exponents(p)
    f = supersingular_polynomial(p, precision)
    if delta:
        f = fp_poly_mul(f, [0, 1], p)
    if eps:
        f = fp_poly_mul(f, [(-1728) % p, 1], p)
    return fp_squarefree_monic(f, p)
