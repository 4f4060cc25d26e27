"""Brute-force reference computations on raw tables.

Nothing here touches the lattice engine: submodules are found by scanning
every subset, and the definitions of small, essential, independent and
coindependent are applied literally.  Only usable on tiny modules.
"""

from itertools import combinations

import numpy as np


def closed_subsets(add, action):
    """All subsets containing 0 closed under + and under every row of ``action``."""
    add = np.asarray(add)
    action = np.asarray(action)
    n = add.shape[0]
    assert n <= 16, "brute force only for tiny modules"
    out = []
    for mask in range(1 << n):
        if not mask & 1:
            continue
        ids = [i for i in range(n) if mask >> i & 1]
        s = set(ids)
        if all(int(add[a, b]) in s for a in ids for b in ids) and all(
            int(action[r, m]) in s for r in range(action.shape[0]) for m in ids
        ):
            out.append(frozenset(ids))
    return out


def set_sum(add, A, B):
    return frozenset(int(add[a, b]) for a in A for b in B)


def sum_all(add, parts, zero=frozenset({0})):
    acc = zero
    for P in parts:
        acc = set_sum(add, acc, P)
    return acc


def is_small(add, subs, top, N):
    return all(set_sum(add, N, A) != top for A in subs if A != top)


def is_essential(subs, N):
    return all(len(N & A) > 1 for A in subs if len(A) > 1)


def radical(subs, top):
    maximal = [A for A in subs if A != top and not any(A < B < top for B in subs)]
    out = top
    for A in maximal:
        out = out & A
    return out


def socle(add, subs):
    minimal = [A for A in subs if len(A) > 1 and not any(len(B) > 1 and B < A for B in subs)]
    return sum_all(add, minimal)


def composition_length(subs, lo, hi):
    """Longest chain lo = C_0 < ... < C_k = hi among ``subs``."""
    inside = sorted((A for A in subs if lo <= A <= hi), key=len)
    best = {A: (0 if A == lo else -1) for A in inside}
    for A in inside:
        if best[A] < 0:
            continue
        for B in inside:
            if A < B:
                best[B] = max(best[B], best[A] + 1)
    return best[hi]


def goldie(add, subs):
    """Largest family of nonzero submodules whose sum is direct."""
    nonzero = [A for A in subs if len(A) > 1]
    best = 0
    for k in range(1, len(nonzero) + 1):
        found = False
        for fam in combinations(nonzero, k):
            if all(len(fam[i] & sum_all(add, fam[:i] + fam[i + 1:])) == 1 for i in range(k)):
                found = True
                break
        if not found:
            break
        best = k
    return best


def hollow(add, subs, top):
    """Largest family of proper submodules with K_i + (meet of the rest) = M."""
    proper = [A for A in subs if A != top]
    best = 0
    for k in range(1, len(proper) + 1):
        found = False
        for fam in combinations(proper, k):
            ok = True
            for i in range(k):
                rest = top
                for j in range(k):
                    if j != i:
                        rest = rest & fam[j]
                if set_sum(add, fam[i], rest) != top:
                    ok = False
                    break
            if ok:
                found = True
                break
        if not found:
            break
        best = k
    return best


def ring_ideals(add, mul, side="right"):
    """Right ideals are closed under x -> x*r; left ideals under x -> r*x."""
    mul = np.asarray(mul)
    action = mul.T if side == "right" else mul
    return closed_subsets(add, action)


def jacobson_quasi_regular(add, mul, one):
    """z with 1 - z*r a unit for every r, by direct table scans."""
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    neg = [int(np.flatnonzero(add[x] == 0)[0]) for x in range(n)]
    units = {u for u in range(n) if any(mul[u, v] == one and mul[v, u] == one for v in range(n))}
    return frozenset(z for z in range(n) if all(int(add[one, neg[int(mul[z, r])]]) in units for r in range(n)))
