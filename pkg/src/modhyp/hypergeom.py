"""Generalized hypergeometric series, Beukers-Heckman operators, indicial roots."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import InvalidLowerParameter, ResonantExponent
from .exactnum import lcm, to_fraction
from .fuchs import FuchsOperator, RatK
from .polys import peval, pmul, ptrim
from .qseries import PuiseuxSeries


def rising_factorial(a, r: int) -> Fraction:
    """a (a+1) ... (a+r-1)."""
    a = to_fraction(a)
    out = Fraction(1)
    for i in range(r):
        out *= a + i
    return out


@dataclass(frozen=True)
class HypParams:
    uppers: tuple
    lowers: tuple

    def __init__(self, uppers, lowers):
        ups = tuple(to_fraction(a) for a in uppers)
        lows = tuple(to_fraction(b) for b in lowers)
        if len(ups) != len(lows) + 1:
            raise ValueError("need exactly one more upper than lower parameter")
        for b in lows:
            if b <= 0 and b.denominator == 1:
                raise InvalidLowerParameter(f"lower parameter {b} is zero or a negative integer")
        object.__setattr__(self, "uppers", ups)
        object.__setattr__(self, "lowers", lows)

    def __str__(self):
        u = ", ".join(str(a) for a in self.uppers)
        b = ", ".join(str(x) for x in self.lowers)
        return f"{len(self.uppers)}F{len(self.lowers)}({u}; {b})"


def hyp_coefficients(p: HypParams, count: int) -> list:
    """First ``count`` coefficients via the term ratio recurrence."""
    out = []
    c = Fraction(1)
    for r in range(count):
        out.append(c)
        if not c:
            out.extend([Fraction(0)] * (count - r - 1))
            break
        num = Fraction(1)
        for a in p.uppers:
            num *= a + r
        den = Fraction(r + 1)
        for b in p.lowers:
            den *= b + r
        c = c * num / den
    return out


def hyp_series(p: HypParams, precision: int) -> PuiseuxSeries:
    """The series 1 + sum prod(a)_r / (prod(b)_r r!) z^r + O(z^precision)."""
    precision = int(precision)
    return PuiseuxSeries(hyp_coefficients(p, precision), 0, 1, precision)


def bh_operator(alphas, betas) -> FuchsOperator:
    """(theta+b1-1)...(theta+bn-1) - K (theta+a1)...(theta+an)."""
    alphas = [to_fraction(a) for a in alphas]
    betas = [to_fraction(b) for b in betas]
    if len(alphas) != len(betas):
        raise ValueError("alphas and betas must have equal length")
    th = FuchsOperator.theta()
    left = FuchsOperator.scalar(1)
    for b in betas:
        left = left * (th + (b - 1))
    right = FuchsOperator.scalar(1)
    for a in alphas:
        right = right * (th + a)
    return left - right.left_scale(RatK.K())


def bh_solution_params(alphas, betas, i: int):
    """(exponent, HypParams) of the i-th local solution at K = 0."""
    alphas = [to_fraction(a) for a in alphas]
    betas = [to_fraction(b) for b in betas]
    bi = betas[i]
    ups = [1 + a - bi for a in alphas]
    lows = [1 + b - bi for j, b in enumerate(betas) if j != i]
    return 1 - bi, HypParams(ups, lows)


def bh_solution_basis(alphas, betas, precision: int) -> list:
    """K^(1-b_i) nF(n-1)(1+a-b_i; 1+b_j-b_i, j != i; K) for each i."""
    betas = [to_fraction(b) for b in betas]
    for i in range(len(betas)):
        for j in range(i + 1, len(betas)):
            if (betas[i] - betas[j]).denominator == 1:
                raise ResonantExponent(
                    f"beta parameters {betas[i]} and {betas[j]} differ by an integer")
    out = []
    for i in range(len(betas)):
        e, p = bh_solution_params(alphas, betas, i)
        out.append(hyp_series(p, precision).shift_exponent(e))
    return out


@dataclass(frozen=True)
class ThetaOde:
    """theta^n f + g_1 theta^(n-1) f + ... + g_n f = 0 with g_i regular at 0."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_operator(cls, op: FuchsOperator, prec: int = 8) -> ThetaOde:
        op = op.normalized()
        n = op.degree
        gs = []
        for i in range(1, n + 1):
            c = op.coefficient(n - i)
            if c.kpow:
                raise ValueError("coefficients must be regular at 0")
            gs.append(c.to_series(prec))
        return cls(tuple(gs))


def indicial_polynomial(ode) -> tuple:
    """r^n + g_1(0) r^(n-1) + ... + g_n(0), listed lowest degree first."""
    if isinstance(ode, FuchsOperator):
        ode = ThetaOde.from_operator(ode)
    n = ode.degree
    out = [Fraction(0)] * (n + 1)
    out[n] = Fraction(1)
    for i, g in enumerate(ode.coeffs, start=1):
        out[n - i] = g.coefficient(0) if g.valuation <= 0 else Fraction(0)
    return tuple(out)


def poly_from_roots(roots) -> tuple:
    out = (Fraction(1),)
    for r in roots:
        out = pmul(out, (-to_fraction(r), Fraction(1)))
    return out


def _divisors(n: int) -> list:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(poly) -> list:
    """Rational roots with multiplicity of a polynomial over Q (lowest first)."""
    p = list(ptrim(poly))
    roots = []
    while p and p[0] == 0:
        roots.append(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return roots
    den = reduce(lcm, (c.denominator for c in p), 1)
    ints = [int(c * den) for c in p]
    g = reduce(gcd, ints)
    ints = [c // g for c in ints]
    cands = set()
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    for c in sorted(cands):
        while len(p) > 1 and peval(p, c) == 0:
            roots.append(c)
            # synthetic division by (x - c)
            q = [Fraction(0)] * (len(p) - 1)
            acc = Fraction(0)
            for i in range(len(p) - 1, 0, -1):
                acc = acc * c + p[i]
                q[i - 1] = acc
            p = q
    return sorted(roots)
