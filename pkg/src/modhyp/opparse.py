"""Text syntax for differential operators.

Two rings share one grammar of numbers, + - * / ^ and parentheses:

* MLDE ring: atoms ``D``, ``E4``, ``E6`` (D is the modular derivative).
* Fuchsian ring: atoms ``TK`` (theta_K) and ``K``.

Division is only allowed by scalars, or in the Fuchsian ring by c K^a (1-K)^b.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import NotFuchsianOnThreePoints, ParseError
from .fuchs import FuchsOperator, RatK
from .mlde import Form, Mlde, form_ore_mul

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z][A-Za-z0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", Fraction(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    out.append(("end", None))
    return out


class _MldeRing:
    atoms = ("D", "E4", "E6")

    def const(self, c):
        return (Form.const(c),)

    def atom(self, name):
        if name == "D":
            return (Form(), Form.const(1))
        if name == "E4":
            return (Form.E4(),)
        if name == "E6":
            return (Form.E6(),)
        raise ParseError(f"unknown symbol {name!r}; expected one of D, E4, E6")

    def add(self, a, b):
        n = max(len(a), len(b))
        return tuple((a[i] if i < len(a) else Form()) + (b[i] if i < len(b) else Form())
                     for i in range(n))

    def neg(self, a):
        return tuple(-c for c in a)

    def mul(self, a, b):
        return tuple(form_ore_mul(a, b))

    def divide(self, a, b):
        b = [c for c in b]
        while len(b) > 1 and b[-1].is_zero():
            b.pop()
        if len(b) != 1 or not b[0].is_const() or b[0].is_zero():
            raise ParseError("division is only allowed by nonzero scalars")
        c = b[0].const_value()
        return tuple(x * (1 / c) for x in a)

    def finish(self, a, weight):
        return Mlde(list(a), weight)


class _FuchsRing:
    atoms = ("TK", "K")

    def const(self, c):
        return FuchsOperator.scalar(c)

    def atom(self, name):
        if name in ("TK", "T", "theta"):
            return FuchsOperator.theta()
        if name == "K":
            return FuchsOperator([RatK.K()])
        raise ParseError(f"unknown symbol {name!r}; expected TK or K")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def divide(self, a, b):
        if b.degree != 0:
            raise ParseError("division by an operator involving TK is not allowed")
        try:
            return FuchsOperator([c / b.coeffs[0] for c in a.coeffs])
        except NotFuchsianOnThreePoints as exc:
            raise ParseError(str(exc)) from exc

    def finish(self, a, weight):
        return a


class _Parser:
    def __init__(self, text, ring):
        self.toks = tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, found {t[1]!r}")

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty operator")
        v = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return v

    def expr(self):
        r = self.ring
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = r.add(v, w if op == "+" else r.neg(w))
        return v

    def term(self):
        r = self.ring
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            v = r.mul(v, w) if op == "*" else r.divide(v, w)
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return self.ring.neg(self.unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            t = self.take()
            if t[0] == "end":
                raise ParseError("unexpected end of input")
            if t[0] != "num" or t[1].denominator != 1:
                raise ParseError("exponents must be integer literals")
            e = int(t[1])
            out = self.ring.const(1)
            for _ in range(e):
                out = self.ring.mul(out, base)
            if neg:
                out = self.ring.divide(self.ring.const(1), out)
            return out
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return self.ring.const(t[1])
        if t[0] == "name":
            return self.ring.atom(t[1])
        if t == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        if t[0] == "end":
            raise ParseError("unexpected end of input")
        raise ParseError(f"unexpected token {t[1]!r}")


def parse_mlde(text: str, weight: int = 0) -> Mlde:
    """Parse e.g. ``D^2 - (1/18)*E4`` into an Mlde acting on weight ``weight``."""
    ring = _MldeRing()
    return ring.finish(_Parser(text, ring).parse(), weight)


def parse_fuchsian(text: str) -> FuchsOperator:
    """Parse e.g. ``TK^2 - (2*K+1)/(6*(1-K))*TK + a/(1-K)``."""
    return _Parser(text, _FuchsRing()).parse()
