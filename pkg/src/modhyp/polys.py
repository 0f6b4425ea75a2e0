"""Dense univariate polynomials over Q and skew-polynomial multiplication.

Polynomials are tuples of ``Fraction`` listed lowest degree first with no
trailing zeros; the zero polynomial is ``()``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb


def ptrim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(Fraction(c) for c in p)


def padd(a, b) -> tuple:
    n = max(len(a), len(b))
    return ptrim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def psub(a, b) -> tuple:
    n = max(len(a), len(b))
    return ptrim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def pscale(a, c) -> tuple:
    return ptrim(x * c for x in a)


def pmul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return ptrim(out)


def ppow(a, e: int) -> tuple:
    out = (Fraction(1),)
    for _ in range(e):
        out = pmul(out, a)
    return out


def ptheta(a) -> tuple:
    """x d/dx."""
    return ptrim(i * c for i, c in enumerate(a))


def peval(a, x):
    s = 0
    for c in reversed(a):
        s = s * x + c
    return s


def pdeg(a) -> int:
    return len(a) - 1


def pdivmod(a, b):
    """Quotient and remainder of polynomial division over Q."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            c = Fraction(c) / b[-1]
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return ptrim(q), ptrim(a[: len(b) - 1])


def pformat(a, var: str = "K") -> str:
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def ore_mul(left, right, *, mul, add, deriv, zero, scale):
    """Product of skew polynomials sum a_i d^i and sum b_j d^j.

    Coefficients live in a ring with derivation ``deriv``; the commutation rule
    is d*b = b*d + deriv(b), so d^i * b = sum_t C(i,t) deriv^t(b) d^(i-t).
    """
    if not left or not right:
        return []
    out = [zero] * (len(left) + len(right) - 1)
    for j, b in enumerate(right):
        derivs = [b]
        for i, a in enumerate(left):
            while len(derivs) <= i:
                derivs.append(deriv(derivs[-1]))
            for t in range(i + 1):
                db = derivs[t]
                term = mul(a, db)
                c = comb(i, t)
                if c != 1:
                    term = scale(term, c)
                out[i - t + j] = add(out[i - t + j], term)
    return out
