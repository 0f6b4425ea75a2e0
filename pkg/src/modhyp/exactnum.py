"""Exact scalars: rationals (``fractions.Fraction``) and cyclotomic numbers.

Elements of Q(zeta_N) are stored in the power basis 1, z, ..., z^(phi(N)-1)
reduced modulo the N-th cyclotomic polynomial.  Rational numbers are kept as
plain ``Fraction`` wherever possible; a ``CycNumber`` of order 1 is only
created when a caller asks for one explicitly.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

import mpmath

from .errors import DivisionByZero, IncompatibleEmbedding

Rational = Fraction


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, CycNumber):
        r = x.rational_value()
        if r is None:
            raise TypeError(f"{x} is not rational")
        return r
    raise TypeError(f"cannot interpret {x!r} as a rational number")


# --- dense polynomial helpers over Q (lowest degree first) -----------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            c = Fraction(c) / lead
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest first."""
    if n < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _pdivmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int, count: int) -> tuple:
    """Reductions of z^i mod Phi_n for 0 <= i < count, as tuples of ints."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    for _ in range(count):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(n: int, poly) -> tuple:
    deg = euler_phi(n)
    out = [Fraction(0)] * deg
    table = _power_table(n, max(len(poly), deg))
    for i, c in enumerate(poly):
        if c:
            row = table[i]
            for t in range(deg):
                if row[t]:
                    out[t] += c * row[t]
    return tuple(out)


class CycNumber:
    """An element of the cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "coeffs", "_canon")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        coeffs = [to_fraction(c) for c in coeffs]
        deg = euler_phi(order)
        if len(coeffs) > deg:
            self.coeffs = _reduce(order, coeffs)
        else:
            self.coeffs = tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))
        self._canon = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CycNumber:
        power %= order
        poly = [0] * power + [1]
        return cls(order, _reduce(order, poly))

    @classmethod
    def rational(cls, x, order: int = 1) -> CycNumber:
        return cls(order, [to_fraction(x)])

    @classmethod
    def coerce(cls, x, order: int = 1) -> CycNumber:
        if isinstance(x, CycNumber):
            return x.embed(lcm(order, x.order)) if order % x.order else x.embed(order)
        return cls.rational(x, order)

    # -- structure -----------------------------------------------------------

    def embed(self, order: int) -> CycNumber:
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N); needs N | M."""
        if order == self.order:
            return self
        if order % self.order:
            raise IncompatibleEmbedding(
                f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return CycNumber(order, _reduce(order, poly))

    def project(self, order: int) -> CycNumber:
        """Inverse of :meth:`embed`; raises if the value does not lie in Q(zeta_order)."""
        if order == self.order:
            return self
        if self.order % order:
            raise IncompatibleEmbedding(f"zeta_{order} does not lie in Q(zeta_{self.order})")
        step = self.order // order
        basis = [CycNumber(order, [0] * i + [1]).embed(self.order).coeffs
                 for i in range(euler_phi(order))]
        sol = _solve_columns(basis, self.coeffs)
        if sol is None:
            raise IncompatibleEmbedding(f"{self} does not lie in Q(zeta_{order})")
        del step
        return CycNumber(order, sol)

    def canonical(self) -> CycNumber:
        """The same value written over the smallest possible order."""
        if self._canon is None:
            result = self
            for d in range(1, self.order):
                if self.order % d == 0:
                    try:
                        result = self.project(d)
                        break
                    except IncompatibleEmbedding:
                        continue
            self._canon = result
        return self._canon

    def rational_value(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _common(self, other):
        if isinstance(other, CycNumber):
            if other.order == self.order:
                return self, other
            m = lcm(self.order, other.order)
            return self.embed(m), other.embed(m)
        try:
            f = to_fraction(other)
        except TypeError:
            return None
        return self, CycNumber(self.order, [f])

    def __add__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, [-x for x in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNumber(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNumber(a.order, [y - x for x, y in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, [x * other for x in self.coeffs])
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNumber(a.order, _reduce(a.order, _pmul(a.coeffs, b.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(zeta_%d)" % self.order)
        # extended Euclid: find u with u*a = 1 mod Phi
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        c = r1[0]
        return CycNumber(self.order, _reduce(self.order, [x / c for x in s1]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return CycNumber(self.order, [x / other for x in self.coeffs])
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNumber.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> CycNumber:
        """Complex conjugation, zeta -> zeta^-1."""
        n = self.order
        poly = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            poly[(-i) % n] += c
        return CycNumber(n, _reduce(n, poly))

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        r = self.rational_value()
        if r is not None:
            return hash(r)
        c = self.canonical()
        return hash((c.order, c.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return f"CycNumber({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_scalar(self)

    def to_record(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_record(cls, rec: dict) -> CycNumber:
        return cls(int(rec["order"]), [Fraction(c) for c in rec["coeffs"]])


def _psub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _solve_columns(columns, target):
    """Solve sum_i x_i * columns[i] == target over Q; None if inconsistent."""
    rows = len(target)
    ncol = len(columns)
    mat = [[Fraction(columns[j][i]) for j in range(ncol)] + [Fraction(target[i])]
           for i in range(rows)]
    pivots = []
    r = 0
    for c in range(ncol):
        piv = next((i for i in range(r, rows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    if any(mat[i][-1] for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(pivots):
        sol[c] = mat[i][-1]
    return sol


def format_scalar(x) -> str:
    """Human-readable exact form: ``3/2`` or ``1 - zeta3`` style."""
    if not isinstance(x, CycNumber):
        return str(x)
    r = x.rational_value()
    if r is not None:
        return str(r)
    parts = []
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        mono = "" if i == 0 else (f"zeta{x.order}" if i == 1 else f"zeta{x.order}^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def scalar_to_record(x) -> dict:
    if isinstance(x, CycNumber):
        return x.to_record()
    return {"order": 1, "coeffs": [str(to_fraction(x))]}


def scalar_from_record(rec: dict):
    if int(rec["order"]) == 1:
        return Fraction(rec["coeffs"][0])
    return CycNumber.from_record(rec)


def cyc_arith(x, y, op: str):
    """Exact field arithmetic on two scalars after coercion to a common order."""
    a = CycNumber.coerce(x)
    if op == "add":
        return a + y
    if op == "sub":
        return a - y
    if op == "mul":
        return a * y
    if op == "div":
        return a / y
    raise ValueError(f"unknown operation {op!r}")


def cyc_embed_numeric(x, precision_bits: int = 53):
    """Evaluate at zeta_N = exp(2*pi*i/N); returns an ``mpmath.mpc``."""
    if precision_bits < 53:
        raise ValueError("precision_bits must be at least 53")
    with mpmath.workprec(precision_bits + 16):
        if not isinstance(x, CycNumber):
            f = to_fraction(x)
            val = mpmath.mpc(mpmath.mpf(f.numerator) / f.denominator)
        else:
            z = mpmath.expjpi(mpmath.mpf(2) / x.order)
            val = mpmath.mpc(0)
            zi = mpmath.mpc(1)
            for c in x.coeffs:
                if c:
                    val += (mpmath.mpf(c.numerator) / c.denominator) * zi
                zi *= z
    with mpmath.workprec(precision_bits):
        return +val
