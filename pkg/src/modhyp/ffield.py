"""Brute-force supersingularity over F_{p^2}, used as an independent oracle.

Elements of F_{p^2} = F_p[w]/(w^2 - n) are encoded as integers a + b*p.
"""
from __future__ import annotations

import numpy as np


def _nonresidue(p: int) -> int:
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise ValueError(f"no quadratic nonresidue mod {p}")


class Fp2:
    def __init__(self, p: int):
        self.p = p
        self.n = _nonresidue(p)
        idx = np.arange(p * p, dtype=np.int64)
        self.a, self.b = idx % p, idx // p
        sq = self.mul(self.a, self.b, self.a, self.b)
        is_sq = np.zeros(p * p, dtype=bool)
        is_sq[self.encode(*sq)] = True
        # quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise
        self.chi = np.where(is_sq, 1, -1)
        self.chi[0] = 0

    def encode(self, a, b):
        return a % self.p + (b % self.p) * self.p

    def mul(self, a1, b1, a2, b2):
        p = self.p
        return (a1 * a2 + self.n * b1 * b2) % p, (a1 * b2 + a2 * b1) % p

    def from_int(self, c: int):
        return c % self.p, 0

    def point_count(self, A, B) -> int:
        """#E(F_{p^2}) for y^2 = x^3 + A x + B (A, B given as (a, b) pairs)."""
        xa, xb = self.a, self.b
        x2 = self.mul(xa, xb, xa, xb)
        x3 = self.mul(*x2, xa, xb)
        ax = self.mul(A[0], A[1], xa, xb)
        fa = (x3[0] + ax[0] + B[0]) % self.p
        fb = (x3[1] + ax[1] + B[1]) % self.p
        s = int(self.chi[self.encode(fa, fb)].sum())
        return self.p * self.p + 1 + s

    def elements(self):
        return zip(self.a.tolist(), self.b.tolist())


def curve_with_j(F: Fp2, j):
    """(A, B) of a curve with j-invariant j."""
    p = F.p
    ja, jb = j
    if (ja, jb) == (0, 0):
        return (0, 0), (1, 0)
    if (ja, jb) == (1728 % p, 0):
        return (1, 0), (0, 0)
    c = ((1728 - ja) % p, (-jb) % p)
    jc = F.mul(ja, jb, *c)
    A = ((3 * jc[0]) % p, (3 * jc[1]) % p)
    jc2 = F.mul(*jc, *c)
    B = ((2 * jc2[0]) % p, (2 * jc2[1]) % p)
    return A, B


def supersingular_j_invariants(p: int) -> set:
    """All j in F_{p^2} (as (a, b) pairs) whose curves have trace divisible by p."""
    F = Fp2(p)
    out = set()
    for j in F.elements():
        A, B = curve_with_j(F, j)
        trace = p * p + 1 - F.point_count(A, B)
        if trace % p == 0:
            out.add(j)
    return out


def poly_roots_fp2(coeffs, p: int) -> set:
    """Roots in F_{p^2} of a polynomial with F_p coefficients (lowest degree first)."""
    F = Fp2(p)
    ra = np.zeros(p * p, dtype=np.int64)
    rb = np.zeros(p * p, dtype=np.int64)
    for c in reversed(coeffs):
        ra, rb = F.mul(ra, rb, F.a, F.b)
        ra = (ra + c) % p
    mask = (ra == 0) & (rb == 0)
    return {(int(a), int(b)) for a, b in zip(F.a[mask], F.b[mask])}
