"""Printed q-expansions used as golden references.

GOLDEN_F maps a key to (valuation, {offset: coeff}, last): integer offsets
from the valuation, with ``last`` the largest offset covered by the print.
GOLDEN_G maps a key to (fixture, index, {n: coeff}, last) in powers of q_N.
Missing entries inside the covered range mean the print shows no term.
"""
from __future__ import annotations

from fractions import Fraction as F

from .exactnum import CycNumber


def _z3(a, b):
    """a + b*zeta3."""
    return CycNumber(3, [F(a), F(b)])


def _dense(vals, start=0):
    return {start + i: F(c) for i, c in enumerate(vals)}


# q-series in q; keys are exponent offsets from the valuation (integers)
GOLDEN_F = {
    "s4-2dim-f1": (F(0), _dense([1, 24, 24, 96, 24]), 4),
    "s4-2dim-f2": (F(1, 2), _dense([1, 4, 6, 8, 13]), 4),
    "a4-3dim-f1": (F(0), _dense([1, 12, 36, 12, 84, 72, 36]), 6),
    "a4-3dim-f2": (F(1, 3), _dense([1, 7, 8, 18, 14, 31, 20]), 6),
    "a4-3dim-f3": (F(2, 3), {0: F(1), 1: F(2), 2: F(5), 3: F(4), 4: F(8), 5: F(6), 8: F(14)}, 8),
    "n7-3dim-f1": (F(1, 7), _dense([1, -3, 0, 4, 2, 3, -12, -5]), 7),
    "n7-3dim-f2": (F(2, 7), _dense([1, -3, -1, 8, 0, -6, -4]), 6),
    "n7-3dim-f3": (F(4, 7), _dense([1, -4, 3, 5, -5, 0, -8, 10]), 7),
}

GOLDEN_EXPONENTS = {
    "s4-2dim-f1": (F(0), F(1, 2)),
    "s4-2dim-f2": (F(0), F(1, 2)),
    "a4-3dim-f1": (F(0), F(1, 3), F(2, 3)),
    "a4-3dim-f2": (F(0), F(1, 3), F(2, 3)),
    "a4-3dim-f3": (F(0), F(1, 3), F(2, 3)),
    "n7-3dim-f1": (F(1, 7), F(2, 7), F(4, 7)),
    "n7-3dim-f2": (F(1, 7), F(2, 7), F(4, 7)),
    "n7-3dim-f3": (F(1, 7), F(2, 7), F(4, 7)),
}

# Eisenstein combinations in q_N; keys are powers of q_N
GOLDEN_G = {
    "s4-2dim-g1": ("S4-2dim", 0, {0: F(1, 2), 2: F(-12), 4: F(12), 6: F(-48),
                                   8: F(12), 10: F(-72), 12: F(48), 14: F(-96)}, 14),
    "s4-2dim-g2": ("S4-2dim", 1, {2: F(-8), 6: F(-32), 10: F(-48), 14: F(-64),
                                   18: F(-104), 22: F(-96), 26: F(-112)}, 26),
    "a4-3dim-g1": ("A4-3dim", 0, _dense([F(1, 3), 1, 3, 4, 7, 6, 12, 8, 15]), 8),
    "a4-3dim-g2": ("A4-3dim", 1, {1: _z3(1, -1), 2: _z3(6, 3), 4: _z3(7, -7), 5: _z3(12, 6)}, 5),
    "a4-3dim-g3": ("A4-3dim", 2, {1: _z3(2, 1), 2: _z3(3, -3), 4: _z3(14, 7), 5: _z3(6, -6)}, 5),
}
