#!/usr/bin/env python3
"""Exact cyclotomic arithmetic over Fraction: polynomials mod Phi_N.

Prototype for the build + independent oracle for frozen constants.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd

def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out

def poly_divmod(a, b):
    # b monic
    a = a[:]
    db, da = len(b) - 1, len(a) - 1
    q = [Fraction(0)] * max(0, da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c != 0:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a

@lru_cache(maxsize=None)
def cyclotomic(n):
    # Phi_n as list of Fractions, x^n - 1 divided by all proper Phi_d
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, r = poly_divmod(num, cyclotomic(d))
            assert r == [] or all(c == 0 for c in r)
    return tuple(num)

def phi(n):
    return len(cyclotomic(n)) - 1

class Cyc:
    """Element of Q(zeta_N), reduced mod Phi_N (power basis 0..phi(N)-1)."""
    __slots__ = ("n", "c")

    def __init__(self, n, coeffs):
        # coeffs: dict exp -> Fraction, exponents arbitrary ints
        self.n = n
        vec = [Fraction(0)] * n
        for e, v in coeffs.items():
            vec[e % n] += Fraction(v)
        _, r = poly_divmod(vec + [Fraction(0)], list(cyclotomic(n)))
        r = r + [Fraction(0)] * (phi(n) - len(r))
        self.c = tuple(r[: phi(n)])

    @staticmethod
    def root(n, e=1):
        return Cyc(n, {e: Fraction(1)})

    @staticmethod
    def rat(n, q):
        return Cyc(n, {0: Fraction(q)})

    def lift(self, m):
        assert m % self.n == 0
        k = m // self.n
        return Cyc(m, {i * k: v for i, v in enumerate(self.c)})

    def __add__(self, o):
        n = self.n * o.n // gcd(self.n, o.n)
        a, b = self.lift(n), o.lift(n)
        return Cyc(n, {i: x + y for i, (x, y) in enumerate(zip(a.c, b.c))})

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Cyc(self.n, {i: v * o for i, v in enumerate(self.c)})
        n = self.n * o.n // gcd(self.n, o.n)
        a, b = self.lift(n), o.lift(n)
        prod = poly_mul(list(a.c), list(b.c))
        return Cyc(n, {i: v for i, v in enumerate(prod)})

    __rmul__ = __mul__

    def __sub__(self, o):
        return self + o * Fraction(-1)

    def galois(self, s):
        assert gcd(s, self.n) == 1
        return Cyc(self.n, {i * s: v for i, v in enumerate(self.c)})

    def as_rational(self):
        if all(v == 0 for v in self.c[1:]):
            return self.c[0] if self.c else Fraction(0)
        return None

    def __eq__(self, o):
        return (self - o).as_rational() == 0 if isinstance(o, Cyc) else self.as_rational() == o

    def __repr__(self):
        return f"Cyc({self.n},{self.c})"
