#!/usr/bin/env python3
"""Independent oracle: eigenvalue multiplicities of D(u) from partial augmentations."""
from fractions import Fraction
from math import gcd as igcd
from cyclo import Cyc

class Table:
    def __init__(self, classes, chars, powermaps):
        self.classes = classes
        self.chars = chars  # {id: {classid: Cyc or int}}
        self.powermaps = powermaps

    def val(self, chi, cid, n=1):
        v = self.chars[chi][cid]
        return v if isinstance(v, Cyc) else Cyc.rat(1, v)

    def power_class(self, cid, e):
        o = self.classes[cid]
        e %= o
        if e == 0:
            return next(c for c, od in self.classes.items() if od == 1)
        res = cid
        while e > 1:
            for p in sorted(self.powermaps):
                if e % p == 0:
                    res = self.powermaps[p][res]
                    e //= p
                    break
            else:
                raise ValueError("no powermap for %d" % e)
        return res

def char_at_power(tab, chi, pa, j, k):
    j %= k
    if j == 0:
        one = next(c for c, od in tab.classes.items() if od == 1)
        return tab.val(chi, one)
    d = igcd(j, k)
    c = j // d
    acc = Cyc.rat(1, 0)
    for x, eps in pa[d].items():
        acc = acc + Fraction(eps) * tab.val(chi, x)
    # field automorphism zeta -> zeta^c on the value; gcd(c, acc.n) need not be 1
    # when acc.n has stray factors, so reduce c mod the order-lcm first
    n = acc.n
    cc = c % n if n > 1 else 0
    if n > 1:
        from math import gcd as g
        assert g(c % n, n) == 1 or all(v == 0 for v in acc.c[1:]), (chi, j, k, n, c)
        if g(c % n, n) == 1:
            acc = acc.galois(c % n)
    return acc

def mults(tab, chi, pa, k):
    ms = []
    for l in range(k):
        s = Cyc.rat(1, 0)
        for j in range(k):
            s = s + char_at_power(tab, chi, pa, j, k) * Cyc.root(k, (-(j * l)) % k)
        r = (s * Fraction(1, k)).as_rational()
        assert r is not None, (chi, l)
        ms.append(r)
    return ms

def m22():
    classes = {"1a": 1, "2a": 2, "3a": 3}
    chars = {
        "chi2": {"1a": 21, "2a": 5, "3a": 3},
        "chi8": {"1a": 210, "2a": 2, "3a": 3},
        "chi9": {"1a": 231, "2a": 7, "3a": -3},
    }
    pm = {2: {"1a": "1a", "2a": "1a", "3a": "3a"}, 3: {"1a": "1a", "2a": "2a", "3a": "1a"}}
    return Table(classes, chars, pm)

def l2_81():
    classes = {"1a": 1, "3a": 3, "5a": 5}
    chars = {
        "chi1": {"1a": 1, "3a": 1, "5a": 1},
        "chi4": {"1a": 1, "3a": 1, "5a": 1},
        "chi28": {"1a": 81, "3a": 0, "5a": 1},
        "chi29": {"1a": 81, "3a": 0, "5a": 1},
        "chi35": {"1a": 164, "3a": 2, "5a": -1},
    }
    pm = {3: {"1a": "1a", "3a": "1a", "5a": "5a"}, 5: {"1a": "1a", "3a": "3a", "5a": "1a"}}
    return Table(classes, chars, pm)

def l3_7():
    classes = {"1a": 1, "3a": 3, "7a": 7, "7b": 7, "7c": 7}
    chars = {
        "chi1": {"1a": 1, "3a": 1, "7a": 1, "7b": 1, "7c": 1},
        "chi2": {"1a": 1, "3a": 1, "7a": 1, "7b": 1, "7c": 1},
        "chi4": {"1a": 56, "3a": 2, "7a": 7, "7b": 0, "7c": 0},
        "chi5": {"1a": 57, "3a": 3, "7a": 8, "7b": 1, "7c": 1},
        "chi7": {"1a": 152, "3a": -1, "7a": 5, "7b": 5, "7c": -2},
        "chi8": {"1a": 152, "3a": -1, "7a": 5, "7b": 5, "7c": -2},
        "chi9": {"1a": 304, "3a": -2, "7a": 10, "7b": -4, "7c": 3},
        "chi23": {"1a": 399, "3a": 3, "7a": 7, "7b": 0, "7c": 0},
        "chi25": {"1a": 456, "3a": -3, "7a": 15, "7b": 1, "7c": 1},
    }
    pm = {3: {"1a": "1a", "3a": "1a", "7a": "7a", "7b": "7b", "7c": "7c"},
          7: {"1a": "1a", "3a": "3a", "7a": "1a", "7b": "1a", "7c": "1a"}}
    return Table(classes, chars, pm)

def a5():
    b = Cyc(5, {1: -1, 4: -1})
    bb = Cyc(5, {2: -1, 3: -1})
    classes = {"1a": 1, "2a": 2, "3a": 3, "5a": 5, "5b": 5}
    chars = {
        "chi1": {"1a": 1, "2a": 1, "3a": 1, "5a": 1, "5b": 1},
        "chi2": {"1a": 3, "2a": -1, "3a": 0, "5a": b, "5b": bb},
        "chi3": {"1a": 3, "2a": -1, "3a": 0, "5a": bb, "5b": b},
        "chi4": {"1a": 4, "2a": 0, "3a": 1, "5a": -1, "5b": -1},
        "chi5": {"1a": 5, "2a": 1, "3a": -1, "5a": 0, "5b": 0},
    }
    pm = {2: {"1a": "1a", "2a": "1a", "3a": "3a", "5a": "5b", "5b": "5a"},
          3: {"1a": "1a", "2a": "2a", "3a": "1a", "5a": "5b", "5b": "5a"},
          5: {"1a": "1a", "2a": "2a", "3a": "3a", "5a": "1a", "5b": "1a"}}
    return Table(classes, chars, pm)

def group_blocks(ms, k, p, m):
    out = {}
    for i in range(m):
        a = ms[(p * i) % k]
        bs = sorted(set(ms[(p * i + m * j) % k] for j in range(1, p)))
        out[i] = (a, bs)
    return out

def helps(tab, pa, k, chars):
    for chi in chars:
        for l in range(k):
            s = Cyc.rat(1, 0)
            for j in range(k):
                s = s + char_at_power(tab, chi, pa, j, k) * Cyc.root(k, (-(j * l)) % k)
            r = (s * Fraction(1, k)).as_rational()
            if r is None or r.denominator != 1 or r < 0:
                return False
    return True

if __name__ == "__main__":
    tab = m22()
    for name, (x, y) in [("case1", (4, -3)), ("case2", (-2, 3))]:
        pa = {1: {"2a": x, "3a": y}, 2: {"3a": 1}, 3: {"2a": 1}}
        for chi in ["chi2", "chi8", "chi9"]:
            ms = mults(tab, chi, pa, 6)
            print("M22", name, chi, [str(m) for m in ms], "blocks:", group_blocks(ms, 6, 3, 2))

    tab = l2_81()
    pa = {1: {"3a": 6, "5a": -5}, 3: {"5a": 1}, 5: {"3a": 1}}
    for chi in ["chi1", "chi4", "chi28", "chi29", "chi35"]:
        ms = mults(tab, chi, pa, 15)
        print("L281", chi, [str(m) for m in ms], "blocks:", group_blocks(ms, 15, 5, 3))
    print("L281 chi28 at u^5:", [str(m) for m in mults(tab, "chi28", {1: {"3a": 1}}, 3)])
    print("L281 chi28 at u^3:", [str(m) for m in mults(tab, "chi28", {1: {"5a": 1}}, 5)])

    tab = l3_7()
    cases = {
        "case1_e1": ({"3a": -6, "7a": -1, "7b": 7, "7c": 1}, {"7a": 5, "7b": -2, "7c": -2}),
        "case1_e4": ({"3a": -6, "7a": -1, "7b": 4, "7c": 4}, {"7a": 5, "7b": -2, "7c": -2}),
        "case1_e7": ({"3a": -6, "7a": -1, "7b": 1, "7c": 7}, {"7a": 5, "7b": -2, "7c": -2}),
        "case2":    ({"3a": -6, "7a": -1, "7b": -1, "7c": 9}, {"7a": 5, "7b": -1, "7c": -3}),
        "case3":    ({"3a": -6, "7a": -1, "7b": 0, "7c": 8}, {"7a": 5, "7b": 0, "7c": -4}),
    }
    for name, (top, cube) in cases.items():
        pa = {1: top, 3: cube, 7: {"3a": 1}}
        ok = helps(tab, pa, 21, list(tab.chars))
        print("L37", name, "fragment-HeLP:", ok)
        for chi in ["chi4", "chi5", "chi7", "chi9", "chi23", "chi25"]:
            ms = mults(tab, chi, pa, 21)
            g3 = group_blocks(ms, 21, 3, 7)
            g7 = group_blocks(ms, 21, 7, 3)
            print("  ", chi, "c1,c3,c7,c21 =", ms[0], ms[7], ms[3], ms[1],
                  "| p3 b0:", g3[0], "b1:", g3[1], "| p7 b0:", g7[0], "b1:", g7[1])
        # Brauer dims at p=3 (m=7): phi values on 3-regular classes
        brauer3 = {"phi1": {"1a": 1, "7a": 1, "7b": 1, "7c": 1},
                   "phi2": {"1a": 1, "7a": 1, "7b": 1, "7c": 1},
                   "phi3": {"1a": 55, "7a": 6, "7b": -1, "7c": -1},
                   "phi5": {"1a": 57, "7a": 8, "7b": 1, "7c": 1},
                   "phi7": {"1a": 96, "7a": -2, "7b": 5, "7c": -2},
                   "phi21": {"1a": 399, "7a": 7, "7b": 0, "7c": 0}}
        # u_{p'} = u^{p*c}, p*c = 1 mod m: p=3, m=7: c = 5, so u_{3'} = u^{15}
        bt = Table(tab.classes, brauer3, tab.powermaps)
        for ph in ["phi1", "phi2", "phi3", "phi7"]:
            dims = []
            for i in range(7):
                s = Cyc.rat(1, 0)
                for j in range(7):
                    s = s + char_at_power(bt, ph, pa, (15 * j) % 21, 21) * Cyc.root(7, (-(i * j)) % 7)
                dims.append((s * Fraction(1, 7)).as_rational())
            print("  ", ph, "p3 block dims:", [str(d) for d in dims])
        # p=7, m=3: c = 7^{-1} mod 3 = 1: u_{7'} = u^7
        brauer7 = {"phi13": {"1a": 117, "3a": 0}, "phi14": {"1a": 117, "3a": 0}}
        bt7 = Table(tab.classes, brauer7, tab.powermaps)
        for ph in ["phi13", "phi14"]:
            dims = []
            for i in range(3):
                s = Cyc.rat(1, 0)
                for j in range(3):
                    s = s + char_at_power(bt7, ph, pa, (7 * j) % 21, 21) * Cyc.root(3, (-(i * j)) % 3)
                dims.append((s * Fraction(1, 3)).as_rational())
            print("  ", ph, "p7 block dims:", [str(d) for d in dims])

    # A5 orthogonality
    tab = a5()
    sizes = {"1a": 1, "2a": 15, "3a": 20, "5a": 12, "5b": 12}
    names = list(tab.chars)
    bad = []
    for i, c1 in enumerate(names):
        for c2 in names[i:]:
            s = Cyc.rat(1, 0)
            for x in sizes:
                v1, v2 = tab.val(c1, x), tab.val(c2, x)
                # conjugate = galois(-1)
                v2c = v2.galois(v2.n - 1) if v2.n > 1 else v2
                s = s + Fraction(sizes[x]) * v1 * v2c
            r = (s * Fraction(1, 60)).as_rational()
            want = 1 if c1 == c2 else 0
            if r != want:
                bad.append((c1, c2, r))
    print("A5 orthogonality:", "OK" if not bad else bad)
    # decomposition at 3: chi5' = phi1 + phi4 on 3-regular classes
    for x in ["1a", "2a", "5a", "5b"]:
        lhs = tab.val("chi5", x)
        rhs = tab.val("chi1", x) + tab.val("chi4", x)
        assert lhs == rhs, x
    print("A5 chi5' = 1' + chi4' on 3-regular classes: OK")

    allchars = list(tab.chars)
    print("A5 order 5 survivors:", [(x, 1 - x) for x in range(-12, 13)
          if helps(tab, {1: {"5a": x, "5b": 1 - x}}, 5, allchars)])
    for (k, layers) in [(6, lambda x: {1: {"2a": x, "3a": 1 - x}, 2: {"3a": 1}, 3: {"2a": 1}})]:
        surv = [x for x in range(-15, 16) if helps(tab, layers(x), k, allchars)]
        print("A5 order", k, "survivors:", surv)
    # order 10: u^2 of order 5 (two candidates), u^5 = 2a
    for sub in [{"5a": 1}, {"5b": 1}]:
        surv = []
        for x in range(-15, 16):
            pa = {1: {"2a": x, "5a": None, "5b": None}, 2: sub, 5: {"2a": 1}}
            # top layer on classes of order dividing 10: 2a, 5a, 5b; two free among eps with sum 1
            for y in range(-15, 16):
                z = 1 - x - y
                pa = {1: {"2a": x, "5a": y, "5b": z}, 2: sub, 5: {"2a": 1}}
                if helps(tab, pa, 10, allchars):
                    surv.append((x, y, z))
        print("A5 order 10 survivors (u^2 =", sub, "):", surv)
    # order 15: u^3 of order 5, u^5 of order 3
    for sub in [{"5a": 1}, {"5b": 1}]:
        surv = []
        for y in range(-12, 13):
            for z in range(-12, 13):
                x = 1 - y - z
                pa = {1: {"3a": x, "5a": y, "5b": z}, 3: sub, 5: {"3a": 1}}
                if helps(tab, pa, 15, allchars):
                    surv.append((x, y, z))
        print("A5 order 15 survivors (u^3 =", sub, "):", surv)
    # M22 fragment order-6 box survivors with chi2, chi8, chi9
    tab = m22()
    surv = [x for x in range(-30, 31)
            if helps(tab, {1: {"2a": x, "3a": 1 - x}, 2: {"3a": 1}, 3: {"2a": 1}}, 6, list(tab.chars))]
    print("M22 frag order 6 survivors:", surv)
    # L281 fragment order-15 box
    tab = l2_81()
    surv = []
    for y in range(-40, 41):
        x = 1 - y
        pa = {1: {"3a": x, "5a": y}, 3: {"5a": 1}, 5: {"3a": 1}}
        if helps(tab, pa, 15, list(tab.chars)):
            surv.append((x, y))
    print("L281 frag order 15 survivors:", surv)
