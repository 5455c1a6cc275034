"""Independent brute-force oracles the tests check the library against.

Nothing here reuses the library's canonicalization search, Smith normal
form elimination or Lie dimension formula; where an oracle needs tree
plumbing it sticks to the raw building blocks (explicit codes and
single-vertex flips).
"""

from itertools import combinations
from math import gcd

from towertrees.trees import explicit_code, flip_at, internal_paths


def gauge_orbit(layout_tree):
    """All (explicit code, sign) pairs reachable by single vertex flips.

    The explicit code already identifies trees up to relabeling and
    edge/holonomy gauge, so the orbit enumerates exactly the vertex
    orientation states modulo isomorphism.
    """
    seen = {}
    frontier = [(layout_tree, 1)]
    while frontier:
        t, sign = frontier.pop()
        code = explicit_code(t)
        signs = seen.setdefault(code, set())
        if sign in signs:
            continue
        signs.add(sign)
        for path in internal_paths(t):
            frontier.append((flip_at(t, path), -sign))
    return seen


def brute_canonical(layout_tree):
    """(min code, sign at the min, torsion flag) by exhaustive search
    over all orientation states and self-maps."""
    orbit = gauge_orbit(layout_tree)
    code = min(orbit)
    signs = orbit[code]
    torsion = any(len(s) == 2 for s in orbit.values())
    return code, (1 if torsion else min(signs)), torsion


def count_classes(raw_trees):
    """Number of trees modulo isomorphism and sign flips, by union-find
    over explicit codes linked through single flips."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    reps = {}
    for t in raw_trees:
        code = explicit_code(t)
        if code not in parent:
            parent[code] = code
            reps[code] = t
    for code, t in reps.items():
        for path in internal_paths(t):
            other = explicit_code(flip_at(t, path))
            if other not in parent:
                parent[other] = other
            union(code, other)
    return len({find(c) for c in parent})


def snf_by_minors(rows, nrows, ncols):
    """Invariant factors through determinant divisors; exponential, for
    small dense matrices only."""

    def det(m):
        n = len(m)
        if n == 0:
            return 1
        if n == 1:
            return m[0][0]
        total = 0
        for j in range(n):
            sub = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det(sub)
        return total

    divisors = [1]
    k = 1
    while k <= min(nrows, ncols):
        g = 0
        for rsel in combinations(range(nrows), k):
            for csel in combinations(range(ncols), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, det(sub))
        if g == 0:
            break
        divisors.append(g)
        k += 1
    return tuple(divisors[i] // divisors[i - 1] for i in range(1, len(divisors)))


def lie_dim_by_rank(m, length):
    """Dimension of the degree-``length`` Lie piece by expanding every
    bracketing of every word and row reducing over the rationals."""
    from fractions import Fraction

    def bracketings(word):
        if len(word) == 1:
            return [{(word[0],): 1}]
        out = []
        for i in range(1, len(word)):
            for a in bracketings(word[:i]):
                for b in bracketings(word[i:]):
                    prod = {}
                    for wa, ca in a.items():
                        for wb, cb in b.items():
                            prod[wa + wb] = prod.get(wa + wb, 0) + ca * cb
                            prod[wb + wa] = prod.get(wb + wa, 0) - ca * cb
                    out.append({w: c for w, c in prod.items() if c})
        return out

    rows = []
    from itertools import product
    for word in product(range(1, m + 1), repeat=length):
        rows.extend(bracketings(list(word)))

    index = {}
    dense = []
    for row in rows:
        if row:
            dense.append({index.setdefault(w, len(index)): Fraction(c) for w, c in row.items()})
    rank = 0
    pivots = {}
    for row in dense:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                pivots[c] = row
                rank += 1
                break
            lead = pivots[c]
            f = row[c] / lead[c]
            for cc, vv in lead.items():
                w = row.get(cc, Fraction(0)) - f * vv
                if w:
                    row[cc] = w
                else:
                    row.pop(cc, None)
    return rank
