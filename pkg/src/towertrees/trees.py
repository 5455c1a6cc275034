"""Decorated unitrivalent trees and their canonical forms.

Rooted trees are nested ``Leaf``/``Node`` values; an unrooted tree
(``DecoratedTree``) is stored as an inner product of two rooted trees
fused along one edge.  Every edge carries a free-group word and every
trivalent vertex a cyclic orientation of its three edges, encoded by
the child order: at ``Node(l, r)`` the cyclic order is (l, r, parent).

Gauge moves on these trees:

* AS   - swapping the two children of a vertex costs a sign,
* OR   - reversing an edge inverts its word,
* HOL  - a whisker move at a trivalent vertex multiplies the words of
         its three outgoing edges on the left by a common element.

``canonicalize`` maps a signed tree to a representative that is equal
for any two gauge-equivalent inputs, with the correct relative sign.
The invariant data behind it: pick a root leaf, then the tree is
determined by its shape, its leaf labels, the vertex orientations and
the root-to-leaf holonomies (path products of edge words), which are
unchanged by OR and HOL.  The code is minimized over all root choices
and all orientation states, one sign per vertex swap; if the minimum
is reached with both signs the class is 2-torsion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .words import check_word, winv, wmul, wreduce


class ParseError(ValueError):
    """Syntax error in the tree grammar, with the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BoundsError(ValueError):
    """Requested enumeration exceeds the configured bounds."""


@dataclass(frozen=True, slots=True)
class Bounds:
    max_order: int = 4
    max_labels: int = 6


DEFAULT_BOUNDS = Bounds()


@dataclass(frozen=True, slots=True)
class Leaf:
    label: int
    word: str = ""  # decoration of the edge above, oriented toward this leaf


@dataclass(frozen=True, slots=True)
class Node:
    left: "RootedTree"
    right: "RootedTree"
    word: str = ""  # decoration of the edge above, oriented toward this vertex


RootedTree = Leaf | Node


@dataclass(frozen=True, slots=True)
class DecoratedTree:
    """Unrooted tree presented as two rooted trees fused along one edge.

    The fused edge is oriented left to right and decorated by ``word``;
    a ``word`` on the top of either side also sits on the fused edge and
    is folded in with the correct orientation.
    """

    left: RootedTree
    right: RootedTree
    word: str = ""


@dataclass(frozen=True, slots=True)
class SignedTree:
    sign: int
    tree: DecoratedTree


@dataclass(frozen=True, slots=True)
class CanonicalTree:
    """Total-order encoding of a decorated tree modulo all gauge moves.

    ``two_torsion`` is set when some self-isomorphism of the tree
    reverses an odd number of vertex orientations, so that t = -t.
    """

    code: tuple
    two_torsion: bool

    @property
    def order(self):
        return _code_order(self.code[1])

    @property
    def labels(self):
        out = [self.code[0]]
        _code_labels(self.code[1], out)
        return sorted(out)

    @property
    def nonrepeating(self):
        labs = self.labels
        return len(set(labs)) == len(labs)

    def decode(self):
        """The canonical layout as a concrete DecoratedTree."""
        return DecoratedTree(Leaf(self.code[0]), _decode_rest(self.code[1]), "")

    def text(self):
        return to_text(self.decode())

    def __repr__(self):
        return f"CanonicalTree({self.text()!r})"


@dataclass(frozen=True, slots=True)
class PuncturedTree:
    """A signed tree with one marked edge (identified by a layout path)."""

    sign: int
    tree: CanonicalTree
    edge: str


# ----------------------------------------------------------------- grammar

def _skip_ws(text, i):
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_word(text, i, alphabet):
    j = i
    while j < len(text) and text[j].isalpha():
        j += 1
    w = text[i:j]
    try:
        check_word(w, alphabet)
    except ValueError as exc:
        raise ParseError(str(exc), i) from None
    return w, j


def _parse_label(text, i, alphabet):
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        raise ParseError("expected a label", i)
    label = int(text[i:j])
    if label < 1:
        raise ParseError(f"label {label} out of range (labels start at 1)", i)
    word = ""
    if j < len(text) and text[j] == ":":
        word, j = _parse_word(text, j + 1, alphabet)
    return Leaf(label, word), j


def _parse_rooted(text, i, alphabet):
    i = _skip_ws(text, i)
    if i >= len(text):
        raise ParseError("unexpected end of input", i)
    if text[i] == "(":
        left, i = _parse_rooted(text, i + 1, alphabet)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ",":
            raise ParseError("expected ','", i)
        right, i = _parse_rooted(text, i + 1, alphabet)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ")":
            raise ParseError("expected ')'", i)
        return Node(left, right), i + 1
    return _parse_label(text, i, alphabet)


def parse_tree(text, alphabet=None):
    """Parse the tree grammar; returns a RootedTree or a DecoratedTree.

    rooted   := label | "(" rooted "," rooted ")"
    label    := decimal [":" word]
    unrooted := "inner(" rooted "," rooted "," word ")"

    Words use letters a-z, with uppercase for inverses; `alphabet`
    optionally restricts the generators.  Whitespace is insignificant.
    """
    i = _skip_ws(text, 0)
    if text[i:i + 6] == "inner(":
        left, i = _parse_rooted(text, i + 6, alphabet)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ",":
            raise ParseError("expected ','", i)
        right, i = _parse_rooted(text, i + 1, alphabet)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ",":
            raise ParseError("expected ','", i)
        i = _skip_ws(text, i + 1)
        word, i = _parse_word(text, i, alphabet)
        i = _skip_ws(text, i)
        if i >= len(text) or text[i] != ")":
            raise ParseError("expected ')'", i)
        tree, i = DecoratedTree(left, right, word), i + 1
    else:
        tree, i = _parse_rooted(text, i, alphabet)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("trailing input", i)
    return tree


def parse_signed(text, alphabet=None):
    """Parse an optional +/- sign followed by a tree."""
    i = _skip_ws(text, 0)
    sign = 1
    if i < len(text) and text[i] in "+-":
        sign = 1 if text[i] == "+" else -1
        i += 1
    return sign, parse_tree(text[i:], alphabet)


def to_text(tree):
    """Print a tree in the grammar; exact inverse of the parser.

    Rooted trees with decorated internal edges are not representable
    and raise ValueError (push decorations to the leaves first).
    """
    if isinstance(tree, Leaf):
        return f"{tree.label}:{tree.word}" if tree.word else str(tree.label)
    if isinstance(tree, Node):
        if tree.word:
            raise ValueError("internal edge decoration is not representable")
        return f"({to_text(tree.left)},{to_text(tree.right)})"
    if isinstance(tree, DecoratedTree):
        return f"inner({to_text(tree.left)},{to_text(tree.right)},{tree.word})"
    raise TypeError(f"not a tree: {tree!r}")


# ------------------------------------------------------------ basic algebra

def order_of(tree):
    """Number of trivalent vertices."""
    if isinstance(tree, Leaf):
        return 0
    if isinstance(tree, Node):
        return 1 + order_of(tree.left) + order_of(tree.right)
    if isinstance(tree, DecoratedTree):
        return order_of(tree.left) + order_of(tree.right)
    if isinstance(tree, CanonicalTree):
        return tree.order
    raise TypeError(f"not a tree: {tree!r}")


def labels_of(tree):
    if isinstance(tree, Leaf):
        return [tree.label]
    if isinstance(tree, Node):
        return labels_of(tree.left) + labels_of(tree.right)
    if isinstance(tree, DecoratedTree):
        return labels_of(tree.left) + labels_of(tree.right)
    if isinstance(tree, CanonicalTree):
        return tree.labels
    raise TypeError(f"not a tree: {tree!r}")


def rooted_product(a, b):
    """Fuse the roots of a and b under a new root vertex.

    The cyclic order at the new vertex is (a, b, root), so the order of
    the result is order(a) + order(b) + 1.
    """
    return Node(a, b)


def inner_product(a, b, g=""):
    """Fuse the roots of a and b into a single edge decorated by g."""
    return DecoratedTree(a, b, wreduce(g))


# ----------------------------------------------------- adjacency and views

class _Graph:
    """Adjacency form of a DecoratedTree.

    nbr[v] lists (edge, neighbor) pairs; for a trivalent vertex the list
    order realizes the cyclic orientation.  edges[e] = (tail, head, word)
    with the word read along tail -> head.
    """

    __slots__ = ("labels", "nbr", "edges", "leaves", "fused")

    def __init__(self):
        self.labels = []   # label int for leaves, None for trivalent
        self.nbr = []
        self.edges = []
        self.leaves = []
        self.fused = None

    def _vertex(self, label=None):
        self.labels.append(label)
        self.nbr.append([])
        if label is not None:
            self.leaves.append(len(self.labels) - 1)
        return len(self.labels) - 1

    def _edge(self, tail, head, word):
        self.edges.append((tail, head, word))
        return len(self.edges) - 1

    def _link(self, parent, child, word):
        e = self._edge(parent, child, word)
        self.nbr[parent].append((e, child))
        self.nbr[child].append((e, parent))
        return e


def _build_side(g, rt):
    if isinstance(rt, Leaf):
        return g._vertex(rt.label)
    v = g._vertex()
    lv = _build_side(g, rt.left)
    rv = _build_side(g, rt.right)
    # children first, fused/parent entry last: cyclic order (l, r, parent)
    e1 = g._edge(v, lv, rt.left.word)
    e2 = g._edge(v, rv, rt.right.word)
    g.nbr[v].append((e1, lv))
    g.nbr[v].append((e2, rv))
    g.nbr[lv].append((e1, v))
    g.nbr[rv].append((e2, v))
    return v


def _graph(t):
    g = _Graph()
    lv = _build_side(g, t.left)
    rv = _build_side(g, t.right)
    fused_word = wmul(winv(t.left.word), t.word, t.right.word)
    g.fused = g._edge(lv, rv, fused_word)
    g.nbr[lv].append((g.fused, rv))
    g.nbr[rv].append((g.fused, lv))
    return g


def _cross(g, v, entry, hol):
    e, u = entry
    tail, head, word = g.edges[e]
    return u, wmul(hol, word if tail == v else winv(word))


def _view(g, v, e_in, hol):
    """Plain rooted view: (0, label, holonomy) or (1, left, right)."""
    if g.labels[v] is not None:
        return (0, g.labels[v], hol)
    ns = g.nbr[v]
    k = next(i for i, (e, _) in enumerate(ns) if e == e_in)
    c1, c2 = ns[(k + 1) % 3], ns[(k + 2) % 3]
    u1, h1 = _cross(g, v, c1, hol)
    u2, h2 = _cross(g, v, c2, hol)
    return (1, _view(g, u1, c1[0], h1), _view(g, u2, c2[0], h2))


def _root_views(g):
    for r in g.leaves:
        entry = g.nbr[r][0]
        u, h = _cross(g, r, entry, "")
        yield r, (g.labels[r], _view(g, u, entry[0], h))


def _canon_rec(view):
    """Minimal code over vertex orientation states, with sign and tie flag."""
    if view[0] == 0:
        return view, 1, False
    ca, sa, aa = _canon_rec(view[1])
    cb, sb, ab = _canon_rec(view[2])
    amb = aa or ab
    if cb < ca:
        return (1, cb, ca), -sa * sb, amb
    if ca == cb:
        amb = True
    return (1, ca, cb), sa * sb, amb


def canonicalize(signed):
    """Canonical form of a signed decorated tree.

    Returns (CanonicalTree, sign).  Gauge-equivalent inputs map to equal
    canonical trees with the AS-predicted sign relation; for 2-torsion
    classes the sign is normalized to +1.
    """
    if isinstance(signed, DecoratedTree):
        signed = SignedTree(1, signed)
    ct, sign = _canonicalize_full(signed.tree)
    return ct, (1 if ct.two_torsion else sign * signed.sign)


def _canonicalize_full(tree):
    g = _graph(tree)
    best = None
    signs = set()
    amb_at_best = False
    for _, (lab, view) in _root_views(g):
        code, sign, amb = _canon_rec(view)
        full = (lab, code)
        if best is None or full < best:
            best, signs, amb_at_best = full, {sign}, amb
        elif full == best:
            signs.add(sign)
            amb_at_best = amb_at_best or amb
    torsion = amb_at_best or len(signs) == 2
    return CanonicalTree(best, torsion), min(signs) if not torsion else 1


def canonicalize_with_edges(signed):
    """Like canonicalize, also tracking where the fused edge of the
    input presentation lands in the canonical layout.

    The tracking is one deterministic choice when the tree has
    symmetries.  Returns (CanonicalTree, sign, path_of_fused_edge).
    """
    if isinstance(signed, DecoratedTree):
        signed = SignedTree(1, signed)
    g = _graph(signed.tree)
    best = None
    best_root = None
    signs = set()
    amb_at_best = False
    for r, (lab, view) in _root_views(g):
        code, sign, amb = _canon_rec(view)
        full = (lab, code)
        if best is None or full < best:
            best, best_root, signs, amb_at_best = full, r, {sign}, amb
        elif full == best:
            signs.add(sign)
            amb_at_best = amb_at_best or amb
    torsion = amb_at_best or len(signs) == 2
    ct = CanonicalTree(best, torsion)
    sign = 1 if torsion else min(signs) * signed.sign

    paths = {}
    entry = g.nbr[best_root][0]
    paths[entry[0]] = ""
    u, h = _cross(g, best_root, entry, "")
    _assign_paths(g, u, entry[0], h, "", paths)
    return ct, sign, paths[g.fused]


def _assign_paths(g, v, e_in, hol, path, paths):
    if g.labels[v] is not None:
        return
    ns = g.nbr[v]
    k = next(i for i, (e, _) in enumerate(ns) if e == e_in)
    c1, c2 = ns[(k + 1) % 3], ns[(k + 2) % 3]
    u1, h1 = _cross(g, v, c1, hol)
    u2, h2 = _cross(g, v, c2, hol)
    k1, _, _ = _canon_rec(_view(g, u1, c1[0], h1))
    k2, _, _ = _canon_rec(_view(g, u2, c2[0], h2))
    if k2 < k1:
        c1, c2, u1, u2, h1, h2 = c2, c1, u2, u1, h2, h1
    paths[c1[0]] = path + "L"
    paths[c2[0]] = path + "R"
    _assign_paths(g, u1, c1[0], h1, path + "L", paths)
    _assign_paths(g, u2, c2[0], h2, path + "R", paths)


def canonicalize_rooted(sign, rooted):
    """Canonical form of a signed rooted tree under AS flips and
    OR/HOL gauge only (the root stays put).

    Returns (rooted tree in layout form, sign, two_torsion).
    """
    def view(sub, hol):
        if isinstance(sub, Leaf):
            return (0, sub.label, wmul(hol, sub.word))
        h = wmul(hol, sub.word)
        return (1, view(sub.left, h), view(sub.right, h))

    code, s, amb = _canon_rec(view(rooted, ""))
    return _decode_rest(code), (1 if amb else s * sign), amb


def explicit_code(tree):
    """Isomorphism + OR/HOL invariant code keeping vertex orientations.

    Two decorated trees get equal explicit codes iff they are related by
    edge reversals, whisker moves and relabeling of the internal
    structure, with no AS flips.  Used as the raw generator identity.
    """
    g = _graph(tree)
    return min((lab, view) for _, (lab, view) in _root_views(g))


def decode_code(code):
    """Rebuild the layout tree of a canonical or explicit code."""
    return DecoratedTree(Leaf(code[0]), _decode_rest(code[1]), "")


def _decode_rest(c):
    if c[0] == 0:
        return Leaf(c[1], c[2])
    return Node(_decode_rest(c[1]), _decode_rest(c[2]))


def _code_order(c):
    if c[0] == 0:
        return 0
    return 1 + _code_order(c[1]) + _code_order(c[2])


def _code_labels(c, out):
    if c[0] == 0:
        out.append(c[1])
    else:
        _code_labels(c[1], out)
        _code_labels(c[2], out)


def _code_words(c, out):
    if c[0] == 0:
        out.append(c[2])
    else:
        _code_words(c[1], out)
        _code_words(c[2], out)


def decorations_of(ct):
    """All leaf holonomies of a canonical tree."""
    out = []
    _code_words(ct.code[1], out)
    return out


def is_trivially_decorated(ct):
    return all(w == "" for w in decorations_of(ct))


# -------------------------------------------------------- layout addressing

def edge_paths(ct):
    """All edge identifiers of a canonical layout.

    The edge above the layout subtree at path p is named p; "" is the
    edge at the root leaf.  A tree of order n has 2n + 1 edges.
    """
    rest = _decode_rest(ct.code[1])
    return [p for p, _ in _positions(rest, "")]


def interior_edge_paths(ct):
    """Edges whose both endpoints are trivalent."""
    rest = _decode_rest(ct.code[1])
    return [p for p, sub in _positions(rest, "") if p and isinstance(sub, Node)]


def _positions(sub, path):
    yield path, sub
    if isinstance(sub, Node):
        yield from _positions(sub.left, path + "L")
        yield from _positions(sub.right, path + "R")


def _subtree_at(rest, path):
    for step in path:
        rest = rest.left if step == "L" else rest.right
    return rest


def _replace_at(rest, path, new):
    if not path:
        return new
    if path[0] == "L":
        return Node(_replace_at(rest.left, path[1:], new), rest.right, rest.word)
    return Node(rest.left, _replace_at(rest.right, path[1:], new), rest.word)


def flip_at(tree, path):
    """Swap the two children of the internal vertex at a layout path
    (a single AS move on a layout-form DecoratedTree)."""
    rest = tree.right
    sub = _subtree_at(rest, path)
    if not isinstance(sub, Node):
        raise ValueError(f"no internal vertex at path {path!r}")
    flipped = Node(sub.right, sub.left, sub.word)
    return DecoratedTree(tree.left, _replace_at(rest, path, flipped), tree.word)


def internal_paths(tree):
    """Paths of the internal vertices of a layout-form DecoratedTree."""
    return [p for p, sub in _positions(tree.right, "") if isinstance(sub, Node)]


def ihx_at(ct, path):
    """The H and X companions of a canonical tree at an interior edge.

    With the edge's endpoints carrying subtree pairs (A, B) and (C, D)
    in cyclic order following the edge, the three trees joining (A,B |
    C,D), (A,C | B,D) and (A,D | B,C) satisfy I - H + X = 0, the tree
    form of the Jacobi identity.  Returns the raw layout trees (H, X).
    """
    if not path:
        raise ValueError("the root-leaf edge is not interior")
    rest = _decode_rest(ct.code[1])
    sub = _subtree_at(rest, path)
    if not isinstance(sub, Node):
        raise ValueError(f"edge {path!r} is not interior")
    parent = _subtree_at(rest, path[:-1])
    a, b = sub.left, sub.right
    if path[-1] == "L":
        s = parent.right
        h_sub = Node(Node(a, s), b)
        x_sub = Node(Node(b, s), a)
    else:
        s = parent.left
        h_sub = Node(Node(b, s), a)
        x_sub = Node(Node(a, s), b)
    root = Leaf(ct.code[0])
    h = DecoratedTree(root, _replace_at(rest, path[:-1], h_sub), "")
    x = DecoratedTree(root, _replace_at(rest, path[:-1], x_sub), "")
    return h, x


# ------------------------------------------------------------ normal forms

def hol_normalize(t):
    """Push all decorations onto the leaf edges.

    Returns an OR/HOL-equivalent presentation rooted at the leaf with
    the least plain code: the root edge and every interior edge carry
    the identity and each remaining leaf edge carries the holonomy from
    the root, oriented toward its leaf.  Idempotent.
    """
    g = _graph(t)
    best = min((lab, view) for _, (lab, view) in _root_views(g))
    return decode_code(best)


def is_simple(t):
    """True iff the tree shape is a caterpillar (right/left-normed):
    all trivalent vertices lie on a single path."""
    if isinstance(t, CanonicalTree):
        t = t.decode()
    g = _graph(t)
    triv = [v for v in range(len(g.labels)) if g.labels[v] is None]
    if len(triv) <= 1:
        return True
    tset = set(triv)
    deg = {v: sum(1 for _, u in g.nbr[v] if u in tset) for v in triv}
    if any(d > 2 for d in deg.values()):
        return False
    # a forest on k vertices with k-1 internal adjacencies is connected
    adj = sum(deg.values()) // 2
    return adj == len(triv) - 1


# ------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def _shapes(n):
    """Full binary tree shapes with n internal vertices (None = leaf slot)."""
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for l in _shapes(k):
            for r in _shapes(n - 1 - k):
                out.append((l, r))
    return tuple(out)


def _leaf_slots(shape):
    return 1 if shape is None else _leaf_slots(shape[0]) + _leaf_slots(shape[1])


def _fill(shape, labels, i=0):
    if shape is None:
        return Leaf(labels[i]), i + 1
    left, i = _fill(shape[0], labels, i)
    right, i = _fill(shape[1], labels, i)
    return Node(left, right), i


def iter_raw_trees(order, labels):
    """All planar rooted presentations of order-n trees with labels in
    1..m, trivially decorated.  Every unrooted tree occurs (several
    times); callers dedupe through a code."""
    for shape in _shapes(order):
        slots = _leaf_slots(shape)
        for root_label in range(1, labels + 1):
            for assignment in itertools.product(range(1, labels + 1), repeat=slots):
                rest, _ = _fill(shape, assignment)
                yield DecoratedTree(Leaf(root_label), rest, "")


def check_bounds(order, labels, bounds=None):
    bounds = bounds or DEFAULT_BOUNDS
    if order > bounds.max_order or order < 0:
        raise BoundsError(f"order {order} exceeds bound {bounds.max_order}")
    if labels > bounds.max_labels or labels < 1:
        raise BoundsError(f"label count {labels} exceeds bound {bounds.max_labels}")


@lru_cache(maxsize=None)
def _all_trees_cached(order, labels):
    seen = {}
    for t in iter_raw_trees(order, labels):
        ct, _ = canonicalize(SignedTree(1, t))
        seen[ct.code] = ct
    return tuple(seen[c] for c in sorted(seen))


def all_trees(order, labels, bounds=None):
    """All canonical order-n trees over labels 1..m with trivial
    decorations, sorted by code and free of duplicates."""
    check_bounds(order, labels, bounds)
    return _all_trees_cached(order, labels)
