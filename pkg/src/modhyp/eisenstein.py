"""Weight-2 Eisenstein series on Gamma(N): cusp labels, Fourier coefficients
and the holomorphic cusp-difference combinations."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EqualCusps, NonHolomorphicCombination, NotPrimitive, UnknownFixture
from .exactnum import CycNumber, format_scalar, to_fraction
from .qseries import PuiseuxSeries


@dataclass(frozen=True)
class EisLabel:
    level: int
    vector: tuple

    def __init__(self, level: int, vector):
        level = int(level)
        if level < 1:
            raise ValueError("level must be positive")
        a1, a2 = (int(x) % level for x in vector)
        if math.gcd(math.gcd(a1, a2), level) != 1:
            raise NotPrimitive(f"({a1}, {a2}) is not primitive mod {level}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "vector", (a1, a2))

    def negate(self) -> EisLabel:
        return EisLabel(self.level, (-self.vector[0], -self.vector[1]))

    def sign_class(self) -> tuple:
        """Canonical representative of {a, -a}."""
        return min(self.vector, self.negate().vector)


@dataclass(frozen=True)
class CuspLabel:
    """a/b in lowest terms; b = 0 stands for infinity."""
    level: int
    num: int
    den: int

    def __init__(self, level: int, num: int, den: int = 1):
        num, den = int(num), int(den)
        if den == 0:
            num = 1
        else:
            g = math.gcd(num, den)
            if den < 0:
                g = -g
            num, den = num // g, den // g
        object.__setattr__(self, "level", int(level))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def parse(cls, level: int, text: str) -> CuspLabel:
        t = text.strip().lower()
        if t in ("oo", "inf", "infinity", "∞"):
            return cls(level, 1, 0)
        f = Fraction(t)
        return cls(level, f.numerator, f.denominator)

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def sort_key(self):
        return (1, 0) if self.is_infinity else (0, Fraction(self.num, self.den))

    def __str__(self):
        if self.is_infinity:
            return "oo"
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"

    __repr__ = __str__


def cusp_to_vector(c: CuspLabel) -> EisLabel:
    """a/b -> (a, b) reduced mod N; infinity -> (1, 0)."""
    if c.is_infinity:
        return EisLabel(c.level, (1, 0))
    return EisLabel(c.level, (c.num, c.den))


def _class_count(N: int) -> int:
    prim = sum(1 for a in range(N) for b in range(N) if math.gcd(math.gcd(a, b), N) == 1)
    return prim if N <= 2 else prim // 2


def cusp_enumerate(N: int) -> list:
    """One cusp per class of primitive vectors mod N up to sign, sorted by value, infinity last."""
    if N < 1:
        raise ValueError("level must be positive")
    want = _class_count(N)
    seen = {}
    inf = CuspLabel(N, 1, 0)
    seen[cusp_to_vector(inf).sign_class()] = inf
    b = 1
    while len(seen) < want:
        for a in range(N * b):
            if math.gcd(a, b) != 1:
                continue
            c = CuspLabel(N, a, b)
            key = cusp_to_vector(c).sign_class()
            if key not in seen:
                seen[key] = c
        b += 1
    return sorted(seen.values(), key=CuspLabel.sort_key)


def _zeta(N: int, e: int) -> CycNumber:
    return CycNumber.zeta(N, e % N)


def eis2_alpha(N: int, a, n: int):
    """Fourier coefficient alpha_n(N, a) of the weight-2 series, exact in Q(zeta_N).

    For n >= 1 the divisor sum runs over m of both signs.  For n = 0 the
    lattice sum is replaced by its closed form 1/(2 - zeta^a2 - zeta^-a2).
    """
    if isinstance(a, CuspLabel):
        a = cusp_to_vector(a)
    if not isinstance(a, EisLabel):
        a = EisLabel(N, a)
    a1, a2 = a.vector
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        if a1 % N:
            return Fraction(0)
        if a2 % N == 0:
            return Fraction(1, 12)
        return (CycNumber.rational(2, N) - _zeta(N, a2) - _zeta(N, -a2)).inverse().canonical()
    total = CycNumber.rational(0, N)
    for d in range(1, n + 1):
        if n % d:
            continue
        for m in (d, -d):
            if (n // m - a1) % N == 0:
                total = total - _zeta(N, a2 * m) * d
    return total.canonical() if N > 1 else total.rational_value()


def eis2_series(N: int, a, nterms: int) -> list:
    return [eis2_alpha(N, a, n) for n in range(nterms)]


def combination_series(N: int, combo: dict, precision) -> PuiseuxSeries:
    """sum c_P G_P over cusps P as a series in q (exponents in (1/N)Z).

    The coefficients must sum to zero so that the nonholomorphic parts cancel.
    ``precision`` is the absolute q-exponent.
    """
    precision = to_fraction(precision)
    total = CycNumber.rational(0, N)
    for c in combo.values():
        total = total + c
    if not total.is_zero():
        raise NonHolomorphicCombination(f"coefficients sum to {format_scalar(total)}, not 0")
    nterms = math.ceil(precision * N)
    coeffs = [CycNumber.rational(0, N)] * nterms
    for cusp, c in combo.items():
        lab = cusp_to_vector(cusp) if isinstance(cusp, CuspLabel) else EisLabel(N, cusp)
        for n in range(nterms):
            coeffs[n] = coeffs[n] + CycNumber.coerce(eis2_alpha(N, lab, n), N) * c
    return PuiseuxSeries(coeffs, 0, N, precision)


def eis2_difference(N: int, P: CuspLabel, Q: CuspLabel, precision) -> PuiseuxSeries:
    """G_P - G_Q in q_N = q^(1/N)."""
    if cusp_to_vector(P).sign_class() == cusp_to_vector(Q).sign_class():
        raise EqualCusps(f"{P} and {Q} are the same cusp of Gamma({N})")
    return combination_series(N, {P: 1, Q: -1}, precision)


def alpha_table_csv(N: int, labels, nterms: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "a1", "a2", "n", "coeff"])
    for lab in labels:
        if isinstance(lab, CuspLabel):
            lab = cusp_to_vector(lab)
        for n in range(nterms):
            w.writerow([N, lab.vector[0], lab.vector[1], n, format_scalar(eis2_alpha(N, lab, n))])
    return buf.getvalue()


# --- printed bases -------------------------------------------------------------------

FIXTURE_LEVELS = {"S4-2dim": 4, "A4-3dim": 3, "S4-3dim": 4, "A5-3dim-1": 5, "A5-3dim-2": 5}


def _combo(N: int, pairs) -> dict:
    out = {}
    for text, c in pairs:
        cusp = CuspLabel.parse(N, text)
        out[cusp] = out.get(cusp, 0) + c
    return out


def _a5_basis(N: int, alpha) -> list:
    one = CycNumber.rational(1, N)
    return [
        _combo(N, [("0", one), ("1", -one), ("3/2", alpha), ("2", alpha), ("5/2", -one),
                   ("7/2", one), ("4", -alpha), ("9/2", -alpha)]),
        _combo(N, [("2/5", one), ("1", alpha), ("3/2", -one), ("2", alpha), ("7/2", -alpha),
                   ("4", one), ("9/2", -alpha), ("oo", -one)]),
        _combo(N, [("1/2", one), ("1", -alpha), ("3/2", -alpha), ("2", one), ("3", -one),
                   ("7/2", alpha), ("4", alpha), ("9/2", -one)]),
    ]


def a5_alpha() -> CycNumber:
    """zeta5^3 + zeta5^2."""
    return CycNumber.zeta(5, 3) + CycNumber.zeta(5, 2)


def fixture_basis(name: str) -> list:
    """Cusp-class combinations (dicts CuspLabel -> coefficient) of a printed basis."""
    if name == "S4-2dim":
        return [_combo(4, [("0", 1), ("1/2", 1), ("1", -2), ("2", 1), ("3", -2), ("oo", 1)]),
                _combo(4, [("1/2", 1), ("1", -1), ("3", -1), ("oo", 1)])]
    if name == "A4-3dim":
        return [_combo(3, [("0", 1), ("oo", -1)]), _combo(3, [("1", 1), ("oo", -1)]),
                _combo(3, [("2", 1), ("oo", -1)])]
    if name == "S4-3dim":
        return [_combo(4, [("0", 1), ("2", -1)]), _combo(4, [("1/2", 1), ("oo", -1)]),
                _combo(4, [("1", 1), ("3", -1)])]
    if name == "A5-3dim-1":
        return _a5_basis(5, a5_alpha())
    if name == "A5-3dim-2":
        return _a5_basis(5, -(a5_alpha() + 1))
    raise UnknownFixture(name)


def fixture_series(name: str, precision) -> list:
    if name not in FIXTURE_LEVELS:
        raise UnknownFixture(name)
    N = FIXTURE_LEVELS[name]
    return [combination_series(N, c, precision) for c in fixture_basis(name)]
