#!/usr/bin/env python3
"""LR coefficient prototype: strip-chain algorithm + naive tableau oracle."""
from functools import lru_cache
import sys
sys.setrecursionlimit(100000)

def conj_counts(lam, t):
    return sum(1 for p in lam if p >= t)

def contains(lam, mu):
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))

def horizontal_strips_below(lam, size):
    """All kappa with kappa <= lam, lam/kappa a horizontal strip of |size|.
    Interlacing: lam[i+1] <= kappa[i] <= lam[i]."""
    lam = list(lam)
    n = len(lam)
    out = []
    def rec(i, remaining, acc):
        if remaining < 0:
            return
        if i == n:
            if remaining == 0:
                out.append(tuple(p for p in acc if p > 0))
            return
        lo = lam[i + 1] if i + 1 < n else 0
        hi = lam[i]
        # prune: max removable from remaining rows
        maxrest = sum(lam[j] - (lam[j + 1] if j + 1 < n else 0) for j in range(i + 1, n))
        for k in range(lo, hi + 1):
            rem = hi - k
            if remaining - rem <= maxrest:
                rec(i + 1, remaining - rem, acc + [k])
    rec(0, size, [])
    return out

def lr_count(lam, mu, nu, early_exit=False):
    """Count chains mu = l0 < l1 < ... < lr = lam, horizontal strips of sizes nu,
    with the lattice condition: for all v>=1, i: (#v in rows<=i) >= (#(v+1) in rows<=i+1)."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    if not contains(lam, nu):
        return 0
    # dominance-necessary: counts(mu,t) <= counts(lam,t)
    for t in range(1, (lam[0] if lam else 0) + 1):
        if conj_counts(mu, t) > conj_counts(lam, t) or conj_counts(nu, t) > conj_counts(lam, t):
            return 0
    r = len(nu)
    count = 0
    # peel strips from lam downward: v = r, r-1, ..., 1
    def rec(v, cur, above):
        # above: partition after removing strips v+1..r from lam (i.e. lambda^{(v)})
        nonlocal count
        if v == 0:
            if cur == mu:
                count += 1
                return True
            return False
        for nxt in horizontal_strips_below(cur, nu[v - 1]):
            if not contains(nxt, mu):
                continue
            # lattice: strip v is cur/nxt; strip v+1 was above/cur
            # condition between consecutive strips: for all i:
            # sum_{j<=i} (cur_j - nxt_j) >= sum_{j<=i+1} (above_j - cur_j)
            if above is not None:
                ok = True
                n = max(len(cur), len(above)) + 1
                s_v = 0
                s_v1 = (above[0] if above else 0) - (cur[0] if cur else 0)
                if s_v < s_v1:
                    continue
                for i in range(n):
                    ci = cur[i] if i < len(cur) else 0
                    xi = nxt[i] if i < len(nxt) else 0
                    s_v += ci - xi
                    ai1 = above[i + 1] if i + 1 < len(above) else 0
                    ci1 = cur[i + 1] if i + 1 < len(cur) else 0
                    s_v1 += ai1 - ci1
                    if s_v < s_v1:
                        ok = False
                        break
                if not ok:
                    continue
            if rec(v - 1, nxt, cur) and early_exit:
                return True
        return False
    rec(r, lam, None)
    return count

def lr_nonzero(lam, mu, nu):
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return False
    r = len(nu)
    def rec(v, cur, above):
        if v == 0:
            return cur == mu
        for nxt in horizontal_strips_below(cur, nu[v - 1]):
            if not contains(nxt, mu):
                continue
            if above is not None:
                ok = True
                n = max(len(cur), len(above)) + 1
                s_v = 0
                s_v1 = (above[0] if above else 0) - (cur[0] if cur else 0)
                if s_v < s_v1:
                    continue
                for i in range(n):
                    ci = cur[i] if i < len(cur) else 0
                    xi = nxt[i] if i < len(nxt) else 0
                    s_v += ci - xi
                    ai1 = above[i + 1] if i + 1 < len(above) else 0
                    ci1 = cur[i + 1] if i + 1 < len(cur) else 0
                    s_v1 += ai1 - ci1
                    if s_v < s_v1:
                        ok = False
                        break
                if not ok:
                    continue
            if rec(v - 1, nxt, cur):
                return True
        return False
    return rec(r, lam, None)

# ---------- naive oracle: fill boxes of lam/mu with content nu ----------
def lr_count_naive(lam, mu, nu):
    lam, mu = list(lam), list(mu) + [0] * (len(lam) - len(mu))
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    boxes = [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]
    n = len(boxes)
    fill = {}
    left = list(nu)
    count = 0
    def ok_place(r, c, v):
        if v < 1 or v > len(nu) or left[v - 1] == 0:
            return False
        if (r, c + 1) in fill and fill[(r, c + 1)] < v:
            return False
        if (r - 1, c) in fill and fill[(r - 1, c)] >= v:
            return False
        return True
    # reading word: rows top->bottom, right->left; track lattice counts
    order = sorted(boxes, key=lambda rc: (rc[0], -rc[1]))
    def rec(i, latt):
        nonlocal count
        if i == n:
            count += 1
            return
        r, c = order[i]
        for v in range(1, len(nu) + 1):
            if not ok_place(r, c, v):
                continue
            if v > 1 and latt[v - 2] <= latt[v - 1]:
                continue
            fill[(r, c)] = v
            left[v - 1] -= 1
            latt[v - 1] += 1
            rec(i + 1, latt)
            latt[v - 1] -= 1
            left[v - 1] += 1
            del fill[(r, c)]
    rec(0, [0] * len(nu))
    return count

def partitions_of(n, maxpart=None):
    maxpart = maxpart or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest

def family(a, b, p):
    """z parts of p, (b-z) parts of p-1, (a-z) parts of 1, 0 <= z <= min(a,b)."""
    out = []
    for z in range(min(a, b) + 1):
        lam = [p] * z + [p - 1] * (b - z) + [1] * (a - z)
        out.append(tuple(x for x in lam if x > 0))
    return out

if __name__ == "__main__":
    # cross-check strip-chain vs naive on all |lam| <= 8
    total = bad = 0
    for n in range(0, 9):
        for lam in partitions_of(n):
            for k in range(0, n + 1):
                for mu in partitions_of(k):
                    if not contains(lam, mu):
                        continue
                    for nu in partitions_of(n - k):
                        a = lr_count(lam, mu, nu)
                        b_ = lr_count_naive(lam, mu, nu)
                        total += 1
                        if a != b_:
                            bad += 1
                            print("MISMATCH", lam, mu, nu, a, b_)
    print(f"cross-check: {total} triples, {bad} mismatches")
    # symmetry
    import itertools
    asym = 0
    for n in range(0, 9):
        for lam in partitions_of(n):
            for k in range(0, n + 1):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        if lr_count(lam, mu, nu) != lr_count(lam, nu, mu):
                            asym += 1
                            print("ASYM", lam, mu, nu)
    print("symmetry violations:", asym)
    # spec examples
    print("c^(2)_(1),(1) =", lr_count((2,), (1,), (1,)))          # 1
    print("c^(3,2,1)_(2,1),(2,1) =", lr_count((3, 2, 1), (2, 1), (2, 1)))  # 2
    print("c^(2,1)_(1),(3) =", lr_count((2, 1), (1,), (3,)))       # 0
    print("c^(5,4)_(4),(5) nonzero:", lr_nonzero((5, 4), (4,), (5,)))   # True
    print("c^(2,2)_(2),(1,1) nonzero:", lr_nonzero((2, 2), (2,), (1, 1)))  # True
