"""Exact integer linear algebra: Smith normal form and lattice membership.

Everything here runs over Python ints, never floats; torsion detection
is the whole point.  Matrices are sparse: a row is a dict column ->
nonzero value.
"""

from __future__ import annotations

from math import gcd


def _to_sparse_rows(rows):
    out = []
    for row in rows:
        if isinstance(row, dict):
            out.append({c: v for c, v in row.items() if v})
        else:
            out.append({c: v for c, v in enumerate(row) if v})
    return out


def smith_normal_form(rows, ncols=None):
    """Invariant factors and rank of an integer matrix.

    Accepts dense rows (sequences) or sparse rows (dicts).  Returns
    (factors, rank) where factors is the tuple of nonzero invariant
    factors d1 | d2 | ... (including any 1s) and rank = len(factors).

    Classic elimination: repeatedly pick a least-magnitude pivot, use
    Euclidean row/column steps until the pivot divides its row and
    column, clear them, and recurse on the rest; a final gcd/lcm pass
    enforces the divisibility chain.
    """
    mat = [r for r in _to_sparse_rows(rows) if r]
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(mat):
        for c in row:
            cols.setdefault(c, set()).add(i)

    def set_entry(i, c, v):
        row = mat[i]
        if v:
            row[c] = v
            cols.setdefault(c, set()).add(i)
        else:
            if c in row:
                del row[c]
                cols[c].discard(i)

    def add_row(dst, src, factor):
        # row[dst] += factor * row[src]
        for c, v in list(mat[src].items()):
            set_entry(dst, c, mat[dst].get(c, 0) + factor * v)

    def add_col(dst, src, factor):
        # col[dst] += factor * col[src]
        for i in list(cols.get(src, ())):
            set_entry(i, dst, mat[i].get(dst, 0) + factor * mat[i][src])

    live_rows = set(range(len(mat)))
    live_cols = set(cols)
    factors = []

    while True:
        pivot = None
        best = None
        for i in live_rows:
            for c, v in mat[i].items():
                key = (abs(v), len(mat[i]))
                if best is None or key < best:
                    best, pivot = key, (i, c)
                    if key[0] == 1 and key[1] <= 2:
                        break
            else:
                continue
            if best and best[0] == 1 and best[1] <= 2:
                break
        if pivot is None:
            break
        pi, pc = pivot

        while True:
            # clear the pivot column with Euclidean steps
            again = False
            for i in list(cols.get(pc, ())):
                if i == pi or i not in live_rows:
                    continue
                a, b = mat[pi][pc], mat[i][pc]
                q = b // a
                if q:
                    add_row(i, pi, -q)
                if mat[i].get(pc, 0):
                    pi = i  # smaller remainder becomes the pivot row
                    again = True
                    break
            if again:
                continue
            # clear the pivot row
            for c in list(mat[pi]):
                if c == pc or c not in live_cols:
                    continue
                a, b = mat[pi][pc], mat[pi][c]
                q = b // a
                if q:
                    add_col(c, pc, -q)
                if mat[pi].get(c, 0):
                    pc = c
                    again = True
                    break
            if not again:
                break

        factors.append(abs(mat[pi][pc]))
        live_rows.discard(pi)
        live_cols.discard(pc)
        # pivot row and column are clear except the pivot itself
        cols.get(pc, set()).discard(pi)

    # enforce d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
    factors.sort()
    return tuple(factors), len(factors)


class IntegerLattice:
    """Row span of integer vectors with exact membership tests.

    Holds an echelon basis over Z (Hermite-style: one pivot column per
    row, built by Euclidean elimination).  With ``track=True`` every
    basis row remembers its expression over the added rows, so
    ``solve`` can return an explicit integer combination.
    """

    def __init__(self, track=False):
        self.pivots: dict[int, int] = {}  # column -> basis index
        self.basis: list[dict[int, int]] = []
        self.combos: list[dict] = [] if track else None
        self.track = track
        self.n_added = 0

    @property
    def rank(self):
        return len(self.basis)

    @staticmethod
    def _addmul(dst, src, factor):
        for c, v in src.items():
            w = dst.get(c, 0) + factor * v
            if w:
                dst[c] = w
            else:
                dst.pop(c, None)

    def add(self, vec, tag=None):
        """Insert a vector (sparse dict); returns True if rank grew."""
        v = {c: x for c, x in vec.items() if x}
        combo = {tag if tag is not None else self.n_added: 1} if self.track else None
        self.n_added += 1
        while v:
            c = min(v)
            if c not in self.pivots:
                if v[c] < 0:
                    v = {k: -x for k, x in v.items()}
                    if self.track:
                        combo = {k: -x for k, x in combo.items()}
                self.pivots[c] = len(self.basis)
                self.basis.append(v)
                if self.track:
                    self.combos.append(combo)
                return True
            i = self.pivots[c]
            b = self.basis[i]
            a, x = b[c], v[c]
            if x % a == 0:
                self._addmul(v, b, -(x // a))
                if self.track:
                    self._addmul(combo, self.combos[i], -(x // a))
            else:
                # Euclidean swap: basis row keeps gcd-lead combination
                g, p, q = _xgcd(a, x)
                new_b = {}
                self._addmul(new_b, b, p)
                self._addmul(new_b, v, q)
                new_v = {}
                self._addmul(new_v, v, a // g)
                self._addmul(new_v, b, -(x // g))
                if self.track:
                    new_bc = {}
                    self._addmul(new_bc, self.combos[i], p)
                    self._addmul(new_bc, combo, q)
                    new_vc = {}
                    self._addmul(new_vc, combo, a // g)
                    self._addmul(new_vc, self.combos[i], -(x // g))
                    self.combos[i] = new_bc
                    combo = new_vc
                self.basis[i] = new_b
                v = new_v
        return False

    def reduce(self, vec):
        """Canonical residue of vec modulo the lattice (not inserted).

        Floor-reduces against every pivot in ascending column order
        (reductions only create entries in later columns, so one
        ascending sweep suffices).  The residue is the unique coset
        representative with entries in [0, pivot) at pivot columns; it
        is zero iff vec lies in the lattice.
        """
        v = {c: x for c, x in vec.items() if x}
        seen: set[int] = set()
        while True:
            todo = [c for c in v if c not in seen]
            if not todo:
                return v
            c = min(todo)
            seen.add(c)
            i = self.pivots.get(c)
            if i is None:
                continue
            q = v[c] // self.basis[i][c]
            if q:
                self._addmul(v, self.basis[i], -q)

    def contains(self, vec):
        return not self.reduce(vec)

    def solve(self, vec):
        """Integer combination of the added rows equal to vec, or None.

        Requires track=True.  Returns {tag: coefficient}.
        """
        if not self.track:
            raise ValueError("lattice built without track=True")
        v = {c: x for c, x in vec.items() if x}
        combo: dict = {}
        seen: set[int] = set()
        while True:
            todo = [c for c in v if c not in seen]
            if not todo:
                break
            c = min(todo)
            seen.add(c)
            i = self.pivots.get(c)
            if i is None:
                return None
            a = self.basis[i][c]
            x = v[c]
            if x % a:
                return None
            self._addmul(v, self.basis[i], -(x // a))
            self._addmul(combo, self.combos[i], x // a)
        return combo if not v else None


def _xgcd(a, b):
    """g, p, q with p*a + q*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_rank(rows):
    """Exact rank of a list of sparse or dense integer rows."""
    lat = IntegerLattice()
    rank = 0
    for row in _to_sparse_rows(rows):
        if lat.add(row):
            rank += 1
    return rank
