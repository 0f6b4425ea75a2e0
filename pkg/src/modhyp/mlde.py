"""Modular derivatives, MLDEs, and their translation to operators in theta_K.

A level-one form is a polynomial in E4, E6 stored as ``{(a, b): c}`` for
``c * E4^a * E6^b``.  An MLDE of degree n acting on weight-l forms is
``sum_j P_j(E4, E6) D^(j)`` with ``D^(j)`` the j-fold modular derivative.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .errors import (BoundViolation, NonzeroWeight, NotAnIndicialRoot,
                     NotFuchsianOnThreePoints, NotMonic, ResonantExponent)
from .exactnum import to_fraction
from .fuchs import FuchsOperator, RatK
from .polys import padd, peval, pmul, ppow, pscale, ptrim, ore_mul
from .qseries import PuiseuxSeries, eisenstein_level1

# --- forms -------------------------------------------------------------------


class Form:
    """A polynomial in E4 and E6 with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, (int, Fraction)):
            terms = {(0, 0): terms}
        clean = {}
        for key, c in (terms or {}).items():
            c = to_fraction(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> Form:
        return cls({(0, 0): c})

    @classmethod
    def E4(cls) -> Form:
        return cls({(1, 0): 1})

    @classmethod
    def E6(cls) -> Form:
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> Form:
        return cls({(a, b): c})

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> set:
        return {4 * a + 6 * b for a, b in self.terms}

    @property
    def weight(self) -> int:
        w = self.weights()
        if len(w) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return w.pop() if w else 0

    def is_const(self) -> bool:
        return all(key == (0, 0) for key in self.terms)

    def const_value(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def __add__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return Form(out)

    __radd__ = __add__

    def __neg__(self):
        return Form({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Form({k: c * other for k, c in self.terms.items()})
        other = _as_form(other)
        if other is None:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return Form(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Form.const(1)
        for _ in range(e):
            out = out * self
        return out

    def derive(self) -> Form:
        """Modular derivative via D(E4) = -E6/3 and D(E6) = -E4^2/2."""
        out = {}
        for (a, b), c in self.terms.items():
            if a:
                key = (a - 1, b + 1)
                out[key] = out.get(key, 0) - c * Fraction(a, 3)
            if b:
                key = (a + 2, b - 1)
                out[key] = out.get(key, 0) - c * Fraction(b, 2)
        return Form(out)

    def series(self, prec) -> PuiseuxSeries:
        prec = to_fraction(prec)
        out = PuiseuxSeries.zero(prec)
        if not self.terms:
            return out
        e4 = eisenstein_level1(4, prec)
        e6 = eisenstein_level1(6, prec)
        for (a, b), c in sorted(self.terms.items()):
            out = out + (_power(e4, a) * _power(e6, b)).scale(c)
        return out.truncate(prec)

    def __eq__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "*".join(x for x in (_pw("E4", a), _pw("E6", b)) if x)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"({mag})*{mono}" if mag.denominator != 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def _pw(name, e):
    return "" if e == 0 else (name if e == 1 else f"{name}^{e}")


def _power(f: PuiseuxSeries, e: int) -> PuiseuxSeries:
    out = PuiseuxSeries.one()
    for _ in range(e):
        out = out * f
    return out


def _as_form(x):
    if isinstance(x, Form):
        return x
    if isinstance(x, (int, Fraction)):
        return Form.const(x)
    return None


def form_ore_mul(left, right):
    """Product in the skew ring Q[E4, E6]<D> of coefficient lists."""
    return ore_mul(list(left), list(right), mul=lambda a, b: a * b,
                   add=lambda a, b: a + b, deriv=lambda f: f.derive(),
                   zero=Form(), scale=lambda a, c: a * c)


# --- modular derivative ----------------------------------------------------------

def modular_derivative(f: PuiseuxSeries, k: int) -> PuiseuxSeries:
    """D_k f = theta f - (k/12) E2 f."""
    th = f.theta()
    if k == 0:
        return th
    if f.prec == math.inf:
        raise ValueError("modular derivative needs a series of finite precision")
    rel = f.prec - f.valuation
    e2 = eisenstein_level1(2, max(rel, Fraction(1)))
    return th - (e2 * f).scale(Fraction(k, 12))


def iterated_derivative(f: PuiseuxSeries, k: int, n: int) -> PuiseuxSeries:
    """D_k^(n) = D_{k+2(n-1)} o ... o D_k; n = 0 is the identity."""
    for i in range(n):
        f = modular_derivative(f, k + 2 * i)
    return f


def _det(matrix):
    n = len(matrix)
    total = None
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = matrix[0][perm[0]]
        for i in range(1, n):
            term = term * matrix[i][perm[i]]
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def modular_wronskian(components, k: int) -> PuiseuxSeries:
    """det of the matrix with rows f_i and columns D^(j) f_i, j < n."""
    comps = list(components)
    if not comps:
        raise ValueError("at least one component is required")
    n = len(comps)
    rows = [[iterated_derivative(f, k, j) for j in range(n)] for f in comps]
    return _det(rows)


# --- MLDEs ------------------------------------------------------------------------


class Mlde:
    """sum_{j=0}^n coeffs[j] * D^(j), acting on forms of weight ``weight``."""

    __slots__ = ("coeffs", "l")

    def __init__(self, coeffs, weight: int = 0):
        cs = [c if isinstance(c, Form) else Form(c) if isinstance(c, dict) else Form.const(c)
              for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            raise ValueError("an MLDE needs a nonzero coefficient")
        self.coeffs = tuple(cs)
        self.l = int(weight)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def weight_pair(self) -> tuple:
        return (self.coeffs[-1].weight, self.l)

    @property
    def coeff_polys(self) -> list:
        """Coefficient polynomials listed from D^(n) down to D^(0)."""
        return [dict(c.terms) for c in reversed(self.coeffs)]

    def is_monic(self) -> bool:
        return self.coeffs[-1] == Form.const(1)

    def is_homogeneous(self) -> bool:
        k = self.coeffs[-1].weight
        n = self.degree
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if c.weights() != {k + 2 * (n - j)}:
                return False
        return True

    def apply(self, f: PuiseuxSeries) -> PuiseuxSeries:
        """Evaluate the operator on a q-series of weight l."""
        rel = f.prec - f.valuation
        out = None
        g = f
        for j, c in enumerate(self.coeffs):
            if j:
                g = modular_derivative(g, self.l + 2 * (j - 1))
            if c.is_zero():
                continue
            term = c.series(max(rel, Fraction(1))) * g
            out = term if out is None else out + term
        return out

    def indicial_polynomial(self) -> tuple:
        """Polynomial in x (lowest first) whose roots are the q-exponents at q = 0."""
        total = ()
        u = (Fraction(1),)
        for j, c in enumerate(self.coeffs):
            if j:
                u = pmul(u, (Fraction(-(self.l + 2 * (j - 1)), 12), Fraction(1)))
            total = padd(total, pscale(u, sum(c.terms.values(), Fraction(0))))
        return total

    def __mul__(self, other):
        if isinstance(other, Mlde):
            return Mlde(form_ore_mul(self.coeffs, other.coeffs), other.l)
        if isinstance(other, (Form, int, Fraction)):
            return Mlde([c * other for c in self.coeffs], self.l)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Form, int, Fraction)):
            return Mlde([_as_form(other) * c for c in self.coeffs], self.l)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Mlde):
            return NotImplemented
        return self.coeffs == other.coeffs and self.l == other.l

    def __hash__(self):
        return hash((self.coeffs, self.l))

    def __str__(self):
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            mono = "" if j == 0 else ("D" if j == 1 else f"D^{j}")
            sign = "+"
            if len(c.terms) == 1 and next(iter(c.terms.values())) < 0:
                sign, c = "-", -c
            cs = str(c)
            if not mono:
                body = cs
            elif c == Form.const(1):
                body = mono
            elif len(c.terms) == 1:
                body = f"{cs}*{mono}"
            else:
                body = f"({cs})*{mono}"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


MONIC_SHAPES = {
    2: [(0, (1, 0))],
    3: [(1, (1, 0)), (0, (0, 1))],
    4: [(2, (1, 0)), (1, (0, 1)), (0, (2, 0))],
    5: [(3, (1, 0)), (2, (0, 1)), (1, (2, 0)), (0, (1, 1))],
}


def monic_mlde(params, weight: int = 0) -> Mlde:
    """Monic MLDE of degree len(params)+1 in the standard parameterization.

    Degree 2: D^2 + a E4; degree 3: D^3 + a E4 D + b E6;
    degree 4: D^4 + a E4 D^2 + b E6 D + c E4^2;
    degree 5: D^5 + a E4 D^3 + b E6 D^2 + c E4^2 D + d E4 E6.
    """
    params = [to_fraction(p) for p in params]
    n = len(params) + 1
    if n not in MONIC_SHAPES:
        raise ValueError("standard parameterization exists for degrees 2 to 5")
    coeffs = [Form() for _ in range(n + 1)]
    coeffs[n] = Form.const(1)
    for p, (j, (a, b)) in zip(params, MONIC_SHAPES[n]):
        coeffs[j] = coeffs[j] + Form.monomial(a, b, p)
    return Mlde(coeffs, weight)


# --- D in terms of theta_K ----------------------------------------------------------


class ThetaPoly:
    """P_j(K, theta_K) = sum_r p_{jr}(K)/(1-K)^rho(j,r) theta_K^r with D^(j) = A^j P_j."""

    __slots__ = ("j", "coeffs")

    def __init__(self, j: int, coeffs):
        self.j = j
        self.coeffs = tuple(coeffs)

    @staticmethod
    def rho(j: int, r: int) -> int:
        return min(j - r, j // 2)

    def p(self, r: int) -> tuple:
        """Numerator polynomial p_{jr} written over (1-K)^rho(j,r)."""
        c = self.coeffs[r]
        rho = self.rho(self.j, r)
        if c.kpow or c.ompow > rho:
            raise BoundViolation(f"coefficient of theta^{r} in P_{self.j} is {c}")
        return pmul(c.num, ppow((Fraction(1), Fraction(-1)), rho - c.ompow))

    def check_bounds(self) -> bool:
        for r in range(1, self.j + 1):
            c = self.coeffs[r]
            rho = self.rho(self.j, r)
            if c.kpow or c.ompow > rho or len(self.p(r)) - 1 > rho:
                return False
        return self.coeffs[0].is_zero() and self.coeffs[self.j] == RatK.const(1)

    def operator(self) -> FuchsOperator:
        return FuchsOperator(self.coeffs)

    def __str__(self):
        return str(self.operator())


@lru_cache(maxsize=None)
def _theta_poly_coeffs(j: int) -> tuple:
    if j == 1:
        return (RatK(), RatK.const(1))
    prev = FuchsOperator(_theta_poly_coeffs(j - 1))
    corr = RatK((Fraction(1), Fraction(2)), 0, 1) * Fraction(j - 1, 6)
    nxt = FuchsOperator.theta() * prev - prev.left_scale(corr)
    cs = list(nxt.coeffs) + [RatK()] * (j + 1 - len(nxt.coeffs))
    return tuple(cs)


def d_to_theta(j: int) -> ThetaPoly:
    if j < 1:
        raise ValueError("j must be positive")
    return ThetaPoly(j, _theta_poly_coeffs(j))


def monic_mlde_to_fuchsian(m: Mlde) -> FuchsOperator:
    """Rewrite a monic weight (0, 0) MLDE in theta_K after dividing by A^n."""
    if m.l != 0:
        raise NonzeroWeight(f"the MLDE acts on weight {m.l}, expected 0")
    if not m.is_monic():
        raise NotMonic("leading coefficient must be the constant 1")
    n = m.degree
    total = FuchsOperator([])
    for j, c in enumerate(m.coeffs):
        if c.is_zero():
            continue
        q = RatK()
        for (a, b), coef in c.terms.items():
            if 2 * a + 3 * b != n - j:
                raise NotMonic(f"coefficient of D^({j}) is not of weight {2 * (n - j)}")
            q = q + RatK((coef,), 0, a + b)
        p = FuchsOperator.scalar(1) if j == 0 else d_to_theta(j).operator()
        total = total + p.left_scale(q)
    _check_fuchsian_shape(total, n)
    return total


def _check_fuchsian_shape(op: FuchsOperator, n: int):
    """coeff of theta^(n-r) must be f/(1-K)^min(r, n//2) with deg f <= min(r, n//2)."""
    if op.coefficient(n) != RatK.const(1):
        raise BoundViolation("leading coefficient is not 1")
    for r in range(1, n + 1):
        c = op.coefficient(n - r)
        if c.is_zero():
            continue
        bound = min(r, n // 2)
        if c.kpow or c.ompow > bound or c.degree > c.ompow:
            raise BoundViolation(f"coefficient of theta_K^{n - r} is {c}")


def fuchsian_coefficient_matrix(n: int):
    """g[m][r]: coefficient of theta^r in P_m = A^(-m) D^(m), 1 <= r <= m <= n."""
    return {m: d_to_theta(m).coeffs for m in range(1, n + 1)}


def theta_in_terms_of_d(n: int):
    """h[m][j] with theta^m = sum_j h[m][j] A^(-j) D^(j), for 1 <= j <= m <= n.

    The bound that h[m][j] has denominator dividing (1-K)^(m-j) and numerator
    of degree at most m-j is asserted during the inversion.
    """
    g = fuchsian_coefficient_matrix(n)
    h = {}
    for m in range(1, n + 1):
        h[m] = {m: RatK.const(1)}
        for j in range(m - 1, 0, -1):
            acc = RatK()
            for r in range(j, m):
                acc = acc + g[m][r] * h[r][j]
            acc = -acc
            if acc.kpow or acc.ompow > m - j or acc.degree > m - j:
                raise BoundViolation(f"h[{m}][{j}] = {acc} exceeds the (1-K)^{m - j} bound")
            h[m][j] = acc
    return h


def fuchsian_to_mlde(L: FuchsOperator) -> Mlde:
    """MLDE sum_j F_{n-j} (E4 E6)^j D^(j) whose K-pullback form is L (normalized).

    The result equals (E4 E6)^n A^n times L written in D, so for L coming from a
    monic MLDE M it is (E4 E6)^n M.
    """
    if not L.coeffs:
        raise ValueError("zero operator")
    L = L.normalized()
    n = L.degree
    for m, c in enumerate(L.coeffs):
        if c.is_zero():
            continue
        if c.kpow:
            raise NotFuchsianOnThreePoints(f"coefficient {c} of theta_K^{m} is singular at K = 0")
        if c.ompow > n - m or c.degree > c.ompow:
            raise NotFuchsianOnThreePoints(
                f"coefficient {c} of theta_K^{m} is not regular singular at K = 1 or infinity")
    h = theta_in_terms_of_d(n)
    big = {j: RatK() for j in range(n + 1)}
    big[0] = L.coefficient(0)
    for m in range(1, n + 1):
        c = L.coefficient(m)
        if c.is_zero():
            continue
        for j, hv in h[m].items():
            big[j] = big[j] + c * hv
    coeffs = []
    for j in range(n + 1):
        cj = big[j]
        e = cj.ompow
        if cj.kpow or e > n - j or cj.degree > e:
            raise BoundViolation(f"coefficient of D^({j}) is {cj}")
        # N(K) E4^(3e) E6^(2(n-j-e)) with K = (E4^3 - E6^2)/E4^3
        form = Form()
        for t, a in enumerate(cj.num):
            if not a:
                continue
            kt = (Form.E4() ** 3 - Form.E6() ** 2) ** t * Form.E4() ** (3 * (e - t))
            form = form + kt * a
        form = form * (Form.E6() ** (2 * (n - j - e))) * ((Form.E4() * Form.E6()) ** j)
        coeffs.append(form)
    return Mlde(coeffs, 0)


# --- Frobenius solutions at q = 0 -----------------------------------------------------

def _root_offsets(phi0, r) -> list:
    """Positive integers M with phi0(r + M) = 0."""
    lead = phi0[-1]
    bound = 1 + max((abs(c / lead) for c in phi0[:-1]), default=0)
    top = math.floor(bound - r) + 1 if bound - r > 0 else 0
    return [M for M in range(1, top + 1) if peval(phi0, r + M) == 0]


def frobenius_solve_mlde(m: Mlde, r, precision) -> PuiseuxSeries:
    """The solution q^r (1 + O(q)) of the MLDE, to absolute precision ``precision``."""
    r = to_fraction(r)
    precision = to_fraction(precision)
    n = m.degree
    nterms = math.ceil(precision - r)
    if nterms <= 0:
        return PuiseuxSeries.zero(precision)
    work = Fraction(nterms)
    e2 = eisenstein_level1(2, work).coefficient_list(0, 1, nterms)
    # U[j][t]: polynomial in x for the q^t coefficient of q^(-x) D^(j) q^x
    U = [[(Fraction(1),)] + [()] * (nterms - 1)]
    for j in range(n):
        prev = U[-1]
        w = Fraction(m.l + 2 * j, 12)
        cur = []
        for t in range(nterms):
            val = pmul(prev[t], (Fraction(t), Fraction(1)))
            acc = ()
            for i in range(t + 1):
                if e2[i] and prev[t - i]:
                    acc = padd(acc, pscale(prev[t - i], e2[i]))
            cur.append(ptrim(padd(val, pscale(acc, -w))))
        U.append(cur)
    coeff_series = [c.series(work).coefficient_list(0, 1, nterms) for c in m.coeffs]
    phi = []
    for t in range(nterms):
        acc = ()
        for j in range(n + 1):
            pc = coeff_series[j]
            for i in range(t + 1):
                if pc[i] and U[j][t - i]:
                    acc = padd(acc, pscale(U[j][t - i], pc[i]))
        phi.append(acc)
    phi0 = phi[0]
    if not phi0 or not phi0[-1] or len(phi0) - 1 != n:
        raise NotAnIndicialRoot("leading coefficient of the MLDE vanishes at q = 0")
    if peval(phi0, r) != 0:
        raise NotAnIndicialRoot(f"{r} is not a root of the indicial polynomial")
    clash = _root_offsets(phi0, r)
    if clash:
        raise ResonantExponent(f"indicial roots {r} and {r + clash[0]} differ by an integer")
    c = [Fraction(1)]
    for M in range(1, nterms):
        s = Fraction(0)
        for k in range(M):
            if c[k] and phi[M - k]:
                s += c[k] * peval(phi[M - k], r + k)
        c.append(-s / peval(phi0, r + M))
    return PuiseuxSeries(c, r, 1, precision)


def mlde_indicial_roots(m: Mlde) -> list:
    """Rational roots of the indicial polynomial at q = 0 (with multiplicity)."""
    from .hypergeom import rational_roots
    return rational_roots(m.indicial_polynomial())
