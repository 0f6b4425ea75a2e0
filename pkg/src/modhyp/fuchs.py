"""Rational functions in K with poles only at K = 0, 1, and operators in theta_K."""
from __future__ import annotations

from fractions import Fraction

from .errors import NotFuchsianOnThreePoints
from .exactnum import to_fraction
from .polys import (padd, pdeg, pformat, pmul, ppow, pscale, ptheta, ptrim,
                    ore_mul)
from .qseries import PuiseuxSeries

ONE_MINUS_K = (Fraction(1), Fraction(-1))


class RatK:
    """num(K) / (K^kpow (1-K)^ompow), kept in lowest terms."""

    __slots__ = ("num", "kpow", "ompow")

    def __init__(self, num=(), kpow: int = 0, ompow: int = 0):
        if isinstance(num, (int, Fraction)):
            num = (num,)
        num = list(ptrim(num))
        if not num:
            self.num, self.kpow, self.ompow = (), 0, 0
            return
        if kpow < 0:
            num = [Fraction(0)] * (-kpow) + num
            kpow = 0
        if ompow < 0:
            num = list(pmul(num, ppow(ONE_MINUS_K, -ompow)))
            ompow = 0
        while kpow > 0 and num[0] == 0:
            num = num[1:]
            kpow -= 1
        while ompow > 0 and sum(num) == 0:
            num = _divide_one_minus_k(num)
            ompow -= 1
        self.num = tuple(num)
        self.kpow = kpow
        self.ompow = ompow

    @classmethod
    def const(cls, c) -> RatK:
        return cls((to_fraction(c),))

    @classmethod
    def K(cls) -> RatK:
        return cls((Fraction(0), Fraction(1)))

    def is_zero(self) -> bool:
        return not self.num

    def is_const(self) -> bool:
        return len(self.num) <= 1 and self.kpow == 0 and self.ompow == 0

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else Fraction(0)

    @property
    def degree(self) -> int:
        return pdeg(self.num)

    def _lift(self, k: int, m: int) -> tuple:
        """Numerator over the denominator K^k (1-K)^m (k, m at least ours)."""
        n = self.num
        if k > self.kpow:
            n = (Fraction(0),) * (k - self.kpow) + tuple(n)
        if m > self.ompow:
            n = pmul(n, ppow(ONE_MINUS_K, m - self.ompow))
        return n

    def __add__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        k = max(self.kpow, other.kpow)
        m = max(self.ompow, other.ompow)
        return RatK(padd(self._lift(k, m), other._lift(k, m)), k, m)

    __radd__ = __add__

    def __neg__(self):
        return RatK(pscale(self.num, -1), self.kpow, self.ompow)

    def __sub__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        return RatK(pmul(self.num, other.num), self.kpow + other.kpow, self.ompow + other.ompow)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        # the divisor must be c K^a (1-K)^b
        num = list(other.num)
        a = 0
        while num[0] == 0:
            num = num[1:]
            a += 1
        b = 0
        while len(num) > 1 and sum(num) == 0:
            num = list(_divide_one_minus_k(num))
            b += 1
        if len(num) != 1:
            raise NotFuchsianOnThreePoints(
                f"division by {pformat(other.num)} introduces singularities outside 0, 1, infinity")
        c = num[0]
        return RatK(pscale(self.num, 1 / c), self.kpow - other.kpow + a,
                    self.ompow - other.ompow + b)

    def __rtruediv__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if e < 0:
            return RatK.const(1) / (self ** (-e))
        out = RatK.const(1)
        for _ in range(e):
            out = out * self
        return out

    def theta(self) -> RatK:
        """K d/dK."""
        if not self.num:
            return self
        k, m = self.kpow, self.ompow
        tn = ptheta(self.num)
        first = pmul(padd(tn, pscale(self.num, -k)), ONE_MINUS_K)
        second = pscale(pmul((Fraction(0), Fraction(1)), self.num), m)
        return RatK(padd(first, second), k, m + 1)

    def __eq__(self, other):
        other = _as_ratk(other)
        if other is None:
            return NotImplemented
        return (self.num, self.kpow, self.ompow) == (other.num, other.kpow, other.ompow)

    def __hash__(self):
        return hash((self.num, self.kpow, self.ompow))

    def to_series(self, prec) -> PuiseuxSeries:
        """Expansion at K = 0 as a series in the variable K."""
        prec = to_fraction(prec)
        n = PuiseuxSeries(self.num)
        if self.ompow:
            geo = PuiseuxSeries([1, -1]).pow_rational(-self.ompow, prec=prec + self.kpow)
            n = n * geo
        return n.shift_exponent(-self.kpow).truncate(prec)

    def __str__(self):
        if not self.num:
            return "0"
        if self.is_const():
            return str(self.num[0])
        den = []
        if self.kpow:
            den.append("K" if self.kpow == 1 else f"K^{self.kpow}")
        if self.ompow:
            den.append("(1 - K)" if self.ompow == 1 else f"(1 - K)^{self.ompow}")
        num = pformat(self.num)
        if not den:
            return num
        if len([c for c in self.num if c]) > 1:
            num = f"({num})"
        return f"{num}/{'*'.join(den) if len(den) == 1 else '(' + '*'.join(den) + ')'}"

    __repr__ = __str__


def _divide_one_minus_k(num):
    """Exact division by (1 - K) of a polynomial vanishing at K = 1."""
    q, acc = [], Fraction(0)
    for c in num[:-1]:
        acc += c
        q.append(acc)
    return ptrim(q)


def _as_ratk(x):
    if isinstance(x, RatK):
        return x
    if isinstance(x, (int, Fraction)):
        return RatK.const(x)
    return None


class FuchsOperator:
    """sum_i coeffs[i] * theta_K^i with coefficients in Q(K)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, RatK) else _as_ratk(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def theta(cls) -> FuchsOperator:
        return cls([RatK(), RatK.const(1)])

    @classmethod
    def scalar(cls, c) -> FuchsOperator:
        return cls([c if isinstance(c, RatK) else RatK.const(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> RatK:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RatK()

    def __add__(self, other):
        other = _as_op(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return FuchsOperator([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return FuchsOperator([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_op(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_op(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_op(other)
        if other is None:
            return NotImplemented
        prod = ore_mul(list(self.coeffs), list(other.coeffs),
                       mul=lambda a, b: a * b, add=lambda a, b: a + b,
                       deriv=lambda c: c.theta(), zero=RatK(),
                       scale=lambda a, c: a * c)
        return FuchsOperator(prod)

    def __rmul__(self, other):
        other = _as_op(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, e: int):
        out = FuchsOperator.scalar(1)
        for _ in range(e):
            out = out * self
        return out

    def left_scale(self, c: RatK) -> FuchsOperator:
        return FuchsOperator([c * x for x in self.coeffs])

    def normalized(self) -> FuchsOperator:
        """Divide by the leading coefficient so that theta_K^n has coefficient 1."""
        lead = self.coeffs[-1]
        return FuchsOperator([c / lead for c in self.coeffs])

    def is_normalized(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == RatK.const(1)

    def apply(self, f: PuiseuxSeries, prec=None) -> PuiseuxSeries:
        """Apply to a series in the variable K."""
        p = f.prec if prec is None else min(f.prec, to_fraction(prec))
        if p == float("inf"):
            raise ValueError("an explicit precision is required")
        out = PuiseuxSeries.zero(p)
        g = f.truncate(p)
        for c in self.coeffs:
            if not c.is_zero():
                cs = c.to_series(p - g.valuation + c.kpow + 1)
                out = out + cs * g
            g = g.theta()
        return out.truncate(p)

    def __eq__(self, other):
        other = _as_op(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("TK" if i == 1 else f"TK^{i}")
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if not c.is_const() else cs)
            elif c == RatK.const(1):
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def _as_op(x):
    if isinstance(x, FuchsOperator):
        return x
    if isinstance(x, RatK):
        return FuchsOperator([x])
    if isinstance(x, (int, Fraction)):
        return FuchsOperator.scalar(x)
    return None


def apply_in_q(L: FuchsOperator, f: PuiseuxSeries, prec) -> PuiseuxSeries:
    """Apply L to a q-series by substituting K = K(q) and theta_K = (K/theta_q K) theta_q."""
    from .qseries import hauptmodul_suite
    prec = to_fraction(prec)
    K = hauptmodul_suite(prec + 3).K
    ratio = K / K.theta()
    out = PuiseuxSeries.zero(prec)
    g = f
    for i, c in enumerate(L.coeffs):
        if i:
            g = ratio * g.theta()
        if not c.is_zero():
            out = out + c.to_series(prec).compose(K, prec=prec) * g
    return out.truncate(prec)
