"""Truncated Puiseux series in q and the classical level-one q-expansions.

A series is stored densely: ``coeffs[i]`` is the coefficient of
``q^(shift + i/ram)``.  ``prec`` is the first exponent whose coefficient is
unknown (``math.inf`` for exact finite sums).  Coefficients are ``Fraction``
or ``CycNumber``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import (InfinitePrecision, InvalidWeight, NonMonicLeadingCoefficient,
                     ZeroLeadingCoefficient)
from .exactnum import (CycNumber, format_scalar, lcm, scalar_from_record,
                       scalar_to_record, to_fraction)

INF = math.inf


def _prec(p):
    if p is None or p == INF:
        return INF
    return to_fraction(p)


def _norm_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, CycNumber):
        r = c.rational_value()
        return r if r is not None else c
    return to_fraction(c)


def _count_below(start: Fraction, ram: int, prec) -> int:
    """Number of grid points start + i/ram lying strictly below prec."""
    if prec == INF:
        raise InfinitePrecision("series has infinite precision")
    d = (prec - start) * ram
    if d <= 0:
        return 0
    return math.ceil(d)


def _all_fractions(seq) -> bool:
    return all(type(c) is Fraction for c in seq)


def _convolve(a: list, b: list, n: int) -> list:
    """First n coefficients of the product of two coefficient lists."""
    n = min(n, len(a) + len(b) - 1) if a and b else 0
    if n <= 0:
        return []
    if _all_fractions(a) and _all_fractions(b):
        da = reduce(lcm, (c.denominator for c in a), 1)
        db = reduce(lcm, (c.denominator for c in b), 1)
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        den = da * db
        out = []
        lb = len(ib)
        for k in range(n):
            lo = max(0, k - lb + 1)
            hi = min(k, len(ia) - 1)
            s = 0
            for i in range(lo, hi + 1):
                x = ia[i]
                if x:
                    s += x * ib[k - i]
            out.append(Fraction(s, den))
        return out
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j in range(min(len(b), n - i)):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return out


class PuiseuxSeries:
    """Immutable truncated series sum c_i q^(shift + i/ram) + O(q^prec)."""

    __slots__ = ("shift", "ram", "coeffs", "prec")

    def __init__(self, coeffs=(), shift=0, ram: int = 1, prec=INF):
        shift = to_fraction(shift)
        prec = _prec(prec)
        ram = int(ram)
        if ram < 1:
            raise ValueError("ramification must be positive")
        cs = [_norm_coeff(c) for c in coeffs]
        if prec != INF:
            cs = cs[: _count_below(shift, ram, prec)]
        lead = 0
        while lead < len(cs) and not cs[lead]:
            lead += 1
        cs = cs[lead:]
        shift += Fraction(lead, ram)
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            shift, ram = Fraction(0), 1
        else:
            g = ram
            for i, c in enumerate(cs):
                if c and i:
                    g = math.gcd(g, i)
                    if g == 1:
                        break
            if g > 1:
                cs = cs[::g]
                ram //= g
        self.shift = shift
        self.ram = ram
        self.coeffs = tuple(cs)
        self.prec = prec

    # -- constructors --------------------------------------------------------

    @classmethod
    def monomial(cls, exp=0, coeff=1, prec=INF) -> PuiseuxSeries:
        exp = to_fraction(exp)
        return cls([coeff], shift=exp, prec=prec)

    @classmethod
    def from_terms(cls, terms, prec=INF) -> PuiseuxSeries:
        """Build from an iterable of (exponent, coefficient) pairs."""
        terms = [(to_fraction(e), c) for e, c in terms]
        terms = [(e, c) for e, c in terms if c]
        if not terms:
            return cls([], prec=prec)
        base = min(e for e, _ in terms)
        m = reduce(lcm, ((e - base).denominator for e, _ in terms), 1)
        n = max(int((e - base) * m) for e, _ in terms) + 1
        cs = [Fraction(0)] * n
        for e, c in terms:
            i = int((e - base) * m)
            cs[i] = cs[i] + c
        return cls(cs, shift=base, ram=m, prec=prec)

    @classmethod
    def zero(cls, prec=INF) -> PuiseuxSeries:
        return cls([], prec=prec)

    @classmethod
    def one(cls) -> PuiseuxSeries:
        return cls([Fraction(1)])

    # -- basic properties ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self):
        return self.prec if not self.coeffs else self.shift

    @property
    def ramification(self) -> int:
        if not self.coeffs:
            return 1
        return lcm(self.ram, self.shift.denominator)

    @property
    def precision(self):
        return self.prec

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            raise ZeroLeadingCoefficient("series is zero to its precision")
        return self.coeffs[0]

    def exponents(self):
        return [self.shift + Fraction(i, self.ram) for i, c in enumerate(self.coeffs) if c]

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in increasing order."""
        return [(self.shift + Fraction(i, self.ram), c)
                for i, c in enumerate(self.coeffs) if c]

    def coefficient(self, exp):
        exp = to_fraction(exp)
        if exp >= self.prec:
            raise ValueError(f"coefficient of q^{exp} is beyond precision {self.prec}")
        if not self.coeffs:
            return Fraction(0)
        idx = (exp - self.shift) * self.ram
        if idx < 0 or idx.denominator != 1 or idx >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[int(idx)]

    __getitem__ = coefficient

    def coefficient_list(self, start, step, count: int) -> list:
        return [self.coefficient(to_fraction(start) + i * to_fraction(step)) for i in range(count)]

    def _grid(self, base: Fraction, m: int, n: int) -> list:
        """Coefficients on the grid base + i/m, 0 <= i < n."""
        out = [Fraction(0)] * n
        if not self.coeffs:
            return out
        off = (self.shift - base) * m
        assert off.denominator == 1 and off >= 0
        off = int(off)
        step = m // self.ram
        for i, c in enumerate(self.coeffs):
            k = off + i * step
            if k >= n:
                break
            out[k] = c
        return out

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> PuiseuxSeries:
        if isinstance(x, PuiseuxSeries):
            return x
        return PuiseuxSeries([x])

    def _addsub(self, other, sign):
        g = self._coerce(other)
        f = self
        prec = min(f.prec, g.prec)
        if not f.coeffs:
            return PuiseuxSeries([sign * c for c in g.coeffs], g.shift, g.ram, prec)
        if not g.coeffs:
            return PuiseuxSeries(f.coeffs, f.shift, f.ram, prec)
        base = min(f.shift, g.shift)
        m = lcm(lcm(f.ram, g.ram), lcm((f.shift - base).denominator, (g.shift - base).denominator))
        top = max(f.shift + Fraction(len(f.coeffs) - 1, f.ram),
                  g.shift + Fraction(len(g.coeffs) - 1, g.ram))
        n = int((top - base) * m) + 1
        if prec != INF:
            n = min(n, _count_below(base, m, prec))
        a = f._grid(base, m, n)
        b = g._grid(base, m, n)
        if sign > 0:
            cs = [x + y for x, y in zip(a, b)]
        else:
            cs = [x - y for x, y in zip(a, b)]
        return PuiseuxSeries(cs, base, m, prec)

    def __add__(self, other):
        if not isinstance(other, (PuiseuxSeries, int, Fraction, CycNumber)):
            return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (PuiseuxSeries, int, Fraction, CycNumber)):
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        if not isinstance(other, (PuiseuxSeries, int, Fraction, CycNumber)):
            return NotImplemented
        return self._coerce(other)._addsub(self, -1)

    def __neg__(self):
        return PuiseuxSeries([-c for c in self.coeffs], self.shift, self.ram, self.prec)

    def __pos__(self):
        return self

    def scale(self, c) -> PuiseuxSeries:
        c = _norm_coeff(c)
        if not c:
            return PuiseuxSeries([], prec=self.prec)
        return PuiseuxSeries([x * c for x in self.coeffs], self.shift, self.ram, self.prec)

    def shift_exponent(self, e) -> PuiseuxSeries:
        """Multiply by q^e."""
        e = to_fraction(e)
        return PuiseuxSeries(self.coeffs, self.shift + e, self.ram, self.prec + e)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.scale(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        f, g = self, other
        prec = min(f.prec + g.valuation, g.prec + f.valuation)
        if not f.coeffs or not g.coeffs:
            return PuiseuxSeries([], prec=prec)
        m = lcm(f.ram, g.ram)
        shift = f.shift + g.shift
        a = f._grid(f.shift, m, (len(f.coeffs) - 1) * (m // f.ram) + 1)
        b = g._grid(g.shift, m, (len(g.coeffs) - 1) * (m // g.ram) + 1)
        n = len(a) + len(b) - 1
        if prec != INF:
            n = min(n, _count_below(shift, m, prec))
        return PuiseuxSeries(_convolve(a, b, n), shift, m, prec)

    __rmul__ = __mul__

    def _relative(self, prec=None):
        """Unit part u (list on grid 1/ram) with its relative precision."""
        if not self.coeffs:
            raise ZeroLeadingCoefficient("series is zero to its precision")
        p = self.prec if prec is None else min(self.prec, _prec(prec) + self.shift)
        if p == INF:
            raise InfinitePrecision("an explicit precision is required for this operation")
        rel = p - self.shift
        n = _count_below(Fraction(0), self.ram, rel)
        u = list(self.coeffs[:n]) + [Fraction(0)] * max(0, n - len(self.coeffs))
        return u, rel

    def invert(self, prec=None) -> PuiseuxSeries:
        """Multiplicative inverse.

        ``prec`` caps the relative precision (measured from the leading
        exponent); it is required when the series is exact.
        """
        u, rel = self._relative(prec)
        u0 = u[0]
        inv0 = 1 / u0 if isinstance(u0, CycNumber) else Fraction(1) / u0
        n = len(u)
        w = [inv0]
        for k in range(1, n):
            s = Fraction(0)
            for i in range(1, k + 1):
                if u[i]:
                    s = s + u[i] * w[k - i]
            w.append(-(s * inv0))
        return PuiseuxSeries(w, -self.shift, self.ram, rel - self.shift)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / other)
        if isinstance(other, CycNumber):
            return self.scale(other.inverse())
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        if other.prec == INF and len(other.coeffs) == 1:
            return self.shift_exponent(-other.shift).scale(_inv(other.coeffs[0]))
        return self * other.invert()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def pow_rational(self, e, prec=None) -> PuiseuxSeries:
        """f^e for rational e; the leading coefficient must be 1 unless e is an integer.

        ``prec`` caps the relative precision as in :meth:`invert`.
        """
        e = to_fraction(e)
        if e == 0:
            return PuiseuxSeries.one()
        if not self.coeffs:
            if e > 0:
                return PuiseuxSeries([], prec=self.prec * e if self.prec != INF else INF)
            raise ZeroLeadingCoefficient("zero series has no negative powers")
        u0 = self.coeffs[0]
        if e.denominator != 1 and u0 != 1:
            raise NonMonicLeadingCoefficient(
                f"rational power needs leading coefficient 1, got {format_scalar(u0)}")
        if e.denominator == 1 and e > 0 and self.prec == INF and prec is None:
            result = PuiseuxSeries.one()
            base = self
            k = int(e)
            while k:
                if k & 1:
                    result = result * base
                base = base * base
                k >>= 1
            return result
        u, rel = self._relative(prec)
        n = len(u)
        w0 = Fraction(1) if u0 == 1 else (u0 ** int(e))
        w = [w0]
        inv0 = _inv(u0)
        for k in range(1, n):
            s = Fraction(0)
            for i in range(1, k + 1):
                if u[i]:
                    s = s + ((e + 1) * i - k) * u[i] * w[k - i]
            w.append(s * inv0 / k)
        shift = e * self.shift
        return PuiseuxSeries(w, shift, self.ram, shift + rel)

    def __pow__(self, e):
        if isinstance(e, (int, Fraction)):
            if isinstance(e, int) and e < 0 and self.prec == INF and len(self.coeffs) != 1:
                raise InfinitePrecision("an explicit precision is required for this operation")
            if isinstance(e, int) and self.prec == INF and len(self.coeffs) == 1:
                c = self.coeffs[0]
                return PuiseuxSeries([c ** e if e >= 0 else _inv(c) ** (-e)],
                                     self.shift * e)
            return self.pow_rational(e)
        return NotImplemented

    def theta(self) -> PuiseuxSeries:
        """q d/dq."""
        cs = [c * (self.shift + Fraction(i, self.ram)) if c else c
              for i, c in enumerate(self.coeffs)]
        return PuiseuxSeries(cs, self.shift, self.ram, self.prec)

    def truncate(self, prec) -> PuiseuxSeries:
        p = min(self.prec, _prec(prec))
        return PuiseuxSeries(self.coeffs, self.shift, self.ram, p)

    def compose(self, inner: PuiseuxSeries, prec=None) -> PuiseuxSeries:
        """Substitute ``inner`` for the variable; self must have integral exponents.

        ``prec`` optionally caps the absolute precision of the result.
        """
        if self.ramification != 1:
            raise ValueError("outer series must have integral exponents")
        v = inner.valuation
        if not inner.coeffs or v <= 0:
            raise ValueError("inner series must have positive valuation")
        s = int(self.shift) if self.coeffs else 0
        target = INF if self.prec == INF else self.prec * v
        if prec is not None:
            target = min(target, _prec(prec))
        if target == INF and (s < 0 or inner.prec != INF):
            target = INF if s >= 0 else None
            if target is None:
                raise InfinitePrecision("an explicit precision is required for composition")
        gtarget = target - s * v
        cs = list(self.coeffs)
        if gtarget != INF:
            n = 0
            while n < len(cs) and n * v < gtarget:
                n += 1
            cs = cs[:n]
        if not cs:
            return PuiseuxSeries.zero(target)
        kk = inner.truncate(gtarget)
        body = PuiseuxSeries([cs[-1]])
        for c in reversed(cs[:-1]):
            body = (body * kk).truncate(gtarget) + c
        body = body.truncate(gtarget)
        if s == 0:
            out = body
        elif s > 0 and gtarget == INF:
            out = body * inner.pow_rational(s)
        else:
            out = body * inner.pow_rational(s, prec=gtarget)
        return out.truncate(target)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            other = PuiseuxSeries([other])
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (self.prec == other.prec and self.shift == other.shift
                and self.ram == other.ram and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.shift, self.ram, self.coeffs, self.prec))

    def first_difference(self, other, prec=None):
        """First exponent below the common precision where the series differ.

        Returns ``None`` if they agree, else ``(exp, self_coeff, other_coeff)``.
        """
        other = self._coerce(other)
        diff = self - other
        if prec is not None:
            diff = diff.truncate(prec)
        if not diff.coeffs:
            return None
        e = diff.shift
        return e, self.coefficient(e), other.coefficient(e)

    def agrees_with(self, other, prec=None) -> bool:
        return self.first_difference(other, prec) is None

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return f"PuiseuxSeries({self})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "q") -> str:
        parts = []
        for e, c in self.terms():
            cs = format_scalar(c)
            neg = False
            if isinstance(c, Fraction):
                neg = c < 0
                cs = format_scalar(abs(c))
            elif cs.startswith("-") and " " not in cs:
                neg, cs = True, cs[1:]
            elif " " in cs:
                cs = f"({cs})"
            mono = _mono(var, e)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            parts.append(("-" if neg else "+", body))
        if self.prec != INF:
            parts.append(("+", f"O({_mono(var, self.prec) or '1'})"))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_record(self) -> dict:
        return {
            "ramification": self.ramification,
            "precision": "inf" if self.prec == INF else str(self.prec),
            "terms": [{"exp": str(e), "coeff": scalar_to_record(c)} for e, c in self.terms()],
        }

    @classmethod
    def from_record(cls, rec: dict) -> PuiseuxSeries:
        prec = INF if rec["precision"] == "inf" else Fraction(rec["precision"])
        return cls.from_terms(((Fraction(t["exp"]), scalar_from_record(t["coeff"]))
                               for t in rec["terms"]), prec=prec)


def _inv(c):
    if isinstance(c, CycNumber):
        return c.inverse()
    return Fraction(1) / c


def _mono(var, e) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    if isinstance(e, Fraction) and e.denominator != 1:
        return f"{var}^({e})"
    return f"{var}^{e}" if e >= 0 else f"{var}^({e})"


# --- arithmetic entry points -------------------------------------------------

def series_arith(f: PuiseuxSeries, g: PuiseuxSeries, op: str) -> PuiseuxSeries:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def series_invert(f: PuiseuxSeries, prec=None) -> PuiseuxSeries:
    return f.invert(prec)


def series_pow_rational(f: PuiseuxSeries, e, prec=None) -> PuiseuxSeries:
    return f.pow_rational(e, prec)


def theta_q(f: PuiseuxSeries) -> PuiseuxSeries:
    return f.theta()


# --- level-one series ---------------------------------------------------------

@dataclass(frozen=True)
class SeriesContext:
    default_precision: Fraction = Fraction(30)
    coefficient_order: int = 1

    def __post_init__(self):
        if self.default_precision <= 0:
            raise ValueError("default_precision must be positive")


def _ctx_prec(ctx) -> Fraction:
    if isinstance(ctx, SeriesContext):
        return to_fraction(ctx.default_precision)
    return to_fraction(ctx)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = +1/2 (Akiyama-Tanigawa)."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def zeta_negative(k: int) -> Fraction:
    """zeta(1-k) = -B_k/k for even k >= 2."""
    return -bernoulli(k) / k


def divisor_sigma_table(power: int, n: int) -> list:
    """[sigma_power(m) for m in range(n)] with sigma(0) = 0."""
    out = [0] * n
    for d in range(1, n):
        dp = d ** power
        for m in range(d, n, d):
            out[m] += dp
    return out


@lru_cache(maxsize=64)
def _eisenstein(k: int, prec: Fraction) -> PuiseuxSeries:
    n = math.ceil(prec)
    c = 2 / zeta_negative(k)
    sig = divisor_sigma_table(k - 1, n)
    cs = [Fraction(1)] + [c * s for s in sig[1:]]
    return PuiseuxSeries(cs, 0, 1, prec)


def eisenstein_level1(k: int, ctx=SeriesContext()) -> PuiseuxSeries:
    """E_k = 1 + (2/zeta(1-k)) sum sigma_{k-1}(n) q^n."""
    if not isinstance(k, int) or k < 2 or k % 2:
        raise InvalidWeight(f"weight must be an even integer >= 2, got {k}")
    return _eisenstein(k, _ctx_prec(ctx))


@lru_cache(maxsize=64)
def _euler_product(n: int) -> tuple:
    """Coefficients of prod_{m>=1} (1 - q^m) below q^n (pentagonal numbers)."""
    cs = [0] * n
    k = 0
    while True:
        done = True
        for kk in ((k,) if k == 0 else (k, -k)):
            e = kk * (3 * kk - 1) // 2
            if e < n:
                cs[e] += -1 if kk % 2 else 1
                done = False
        if done and k > 0:
            break
        k += 1
    return tuple(cs)


def eta_power(t: int, ctx=SeriesContext()) -> PuiseuxSeries:
    """eta^t with eta = q^(1/24) prod (1 - q^n), to absolute precision ctx."""
    prec = _ctx_prec(ctx)
    v = Fraction(t, 24)
    rel = prec - v
    if rel <= 0:
        return PuiseuxSeries.zero(prec)
    n = math.ceil(rel)
    base = PuiseuxSeries(list(_euler_product(n)), 0, 1, n)
    if t == 0:
        return PuiseuxSeries.one()
    body = base.pow_rational(t, prec=rel)
    return body.shift_exponent(v).truncate(prec)


@dataclass(frozen=True)
class HauptmodulSuite:
    delta: PuiseuxSeries
    j: PuiseuxSeries
    K: PuiseuxSeries
    A: PuiseuxSeries

    def __iter__(self):
        return iter((self.delta, self.j, self.K, self.A))


@lru_cache(maxsize=32)
def _suite(prec: Fraction) -> HauptmodulSuite:
    work = prec + 2
    e4 = eisenstein_level1(4, work)
    e6 = eisenstein_level1(6, work)
    e43 = e4 * e4 * e4
    delta = (e43 - e6 * e6) / 1728
    j = e43 / delta
    k = (delta * 1728) / e43
    a = e6 / e4
    return HauptmodulSuite(delta.truncate(prec), j.truncate(prec),
                           k.truncate(prec), a.truncate(prec))


def hauptmodul_suite(ctx=SeriesContext()) -> HauptmodulSuite:
    """(Delta, j, K, A) with K = 1728/j and A = E6/E4."""
    return _suite(_ctx_prec(ctx))
