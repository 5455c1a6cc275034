"""Split Whitney tower models and the certified move calculus.

A tower model is a multiset of signed punctured trees over m order-0
surfaces: one point per unpaired intersection, each stored as a
canonical tree with a marked edge.  The moves never touch geometry,
only its combinatorial shadow:

* ``move_puncture``     relocates the mark, tree and sign unchanged,
* ``ihx_insert``        adds the three points +I, -H, +X of a local
                        IHX move (any sign), changing the hat-level sum
                        by a relator and the group-level class not at all,
* ``cancel_simple_pair`` removes two points carrying the same simple
                        tree with opposite signs.

``certify_raise_order`` plans a replayable certificate that empties the
order-n layer whenever the intersection sum vanishes in the order-n
group, and ``verify_certificate`` replays one, checking every move.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .groups import is_zero, normal_form, relator_solver, ts_to_vec
from .sums import TreeSum
from .trees import (
    CanonicalTree,
    DecoratedTree,
    Leaf,
    Node,
    PuncturedTree,
    RootedTree,
    SignedTree,
    canonicalize,
    canonicalize_with_edges,
    edge_paths,
    ihx_at,
    interior_edge_paths,
    is_simple,
    is_trivially_decorated,
    parse_tree,
    to_text,
)
from .words import check_word, winv, wmul


class TowerError(ValueError):
    """A raw tower violates its well-formedness invariants."""


class MoveError(ValueError):
    """A move's precondition failed; ``reason`` names the condition."""

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class ObstructionNonzero(Exception):
    """The intersection sum is nonzero; carries its normal form."""

    def __init__(self, normal_form_sum):
        super().__init__(f"obstruction nonzero: {normal_form_sum.text()}")
        self.normal_form = normal_form_sum


class PlannerError(Exception):
    """The certificate calculus cannot realize the required plan.

    Insertions only ever add points and pair cancellation is restricted
    to simple trees, so a point carrying a non-simple tree (possible
    from order 4 on) can never be removed by these moves.
    """


# ---------------------------------------------------------------- brackets

def parse_bracket(text):
    """Non-associative bracketing over 1..m, e.g. "((1,2),3)"."""
    tree = parse_tree(text)
    return _tree_to_bracket(tree, text)


def _tree_to_bracket(t, text):
    if isinstance(t, Leaf):
        if t.word:
            raise TowerError(f"bracket {text!r} must not carry decorations")
        return t.label
    if isinstance(t, Node):
        if t.word:
            raise TowerError(f"bracket {text!r} must not carry decorations")
        return (_tree_to_bracket(t.left, text), _tree_to_bracket(t.right, text))
    raise TowerError(f"{text!r} is not a bracket")


def bracket_text(b):
    if isinstance(b, int):
        return str(b)
    return f"({bracket_text(b[0])},{bracket_text(b[1])})"


def bracket_order(b):
    if isinstance(b, int):
        return 0
    return 1 + bracket_order(b[0]) + bracket_order(b[1])


def bracket_labels(b):
    if isinstance(b, int):
        return [b]
    return bracket_labels(b[0]) + bracket_labels(b[1])


def tree_of_bracket(b) -> RootedTree:
    """Rooted tree of a bracketing; vertex orientations follow the
    bracket order, so order(tree) = order(bracket)."""
    if isinstance(b, int):
        return Leaf(b)
    return Node(tree_of_bracket(b[0]), tree_of_bracket(b[1]))


def sub_brackets(b):
    yield b
    if not isinstance(b, int):
        yield from sub_brackets(b[0])
        yield from sub_brackets(b[1])


# --------------------------------------------------------------- raw towers

@dataclass(frozen=True)
class RawDisk:
    bracket: tuple | int
    whisker: str = ""
    orientation: int = 1


@dataclass(frozen=True)
class RawPoint:
    sign: int
    left: tuple | int
    right: tuple | int
    word: str = ""
    paired_by: tuple | int | None = None

    @property
    def order(self):
        return bracket_order(self.left) + bracket_order(self.right)


@dataclass(frozen=True)
class RawTower:
    """Surfaces, Whitney disks and intersection points, as described:
    a disk entry per Whitney disk (singleton entries may carry order-0
    surface data), and a point entry per intersection point, paired
    ones naming their disk."""

    m: int
    order: int
    disks: tuple[RawDisk, ...]
    points: tuple[RawPoint, ...]


def validate_raw(raw: RawTower):
    """Check the well-formedness invariants, naming the offender."""
    disk_by_bracket = {}
    for d in raw.disks:
        for lab in bracket_labels(d.bracket):
            if not 1 <= lab <= raw.m:
                raise TowerError(f"disk {bracket_text(d.bracket)}: label {lab} out of 1..{raw.m}")
        if d.bracket in disk_by_bracket:
            raise TowerError(f"duplicate disk {bracket_text(d.bracket)}")
        if d.orientation not in (1, -1):
            raise TowerError(f"disk {bracket_text(d.bracket)}: orientation must be +-1")
        check_word(d.whisker)
        disk_by_bracket[d.bracket] = d

    def require_present(b, what):
        if isinstance(b, int):
            if not 1 <= b <= raw.m:
                raise TowerError(f"{what}: label {b} out of 1..{raw.m}")
            return
        if b not in disk_by_bracket:
            raise TowerError(f"{what}: surface {bracket_text(b)} has no disk entry")

    for d in raw.disks:
        if isinstance(d.bracket, int):
            continue
        i_br, j_br = d.bracket
        require_present(i_br, f"disk {bracket_text(d.bracket)}")
        require_present(j_br, f"disk {bracket_text(d.bracket)}")

    pairs: dict = {b: [] for b in disk_by_bracket if not isinstance(b, int)}
    unpaired = []
    for k, p in enumerate(raw.points):
        what = f"point #{k}"
        if p.sign not in (1, -1):
            raise TowerError(f"{what}: sign must be +-1")
        check_word(p.word)
        require_present(p.left, what)
        require_present(p.right, what)
        if p.paired_by is None:
            unpaired.append(p)
            continue
        if p.paired_by not in pairs:
            raise TowerError(f"{what}: pairing disk {bracket_text(p.paired_by)} not present")
        if {p.left, p.right} != set(p.paired_by):
            raise TowerError(
                f"{what}: paired by {bracket_text(p.paired_by)} but lies on "
                f"{bracket_text(p.left)} and {bracket_text(p.right)}")
        pairs[p.paired_by].append(p)

    for b, pts in pairs.items():
        if len(pts) != 2:
            raise TowerError(f"disk {bracket_text(b)} pairs {len(pts)} points, expected 2")
        if pts[0].sign + pts[1].sign != 0:
            raise TowerError(f"disk {bracket_text(b)} pairs two points of equal sign")
        if pts[0].order != pts[1].order:
            raise TowerError(f"disk {bracket_text(b)} pairs points of different order")

    for k, p in enumerate(raw.points):
        if p.paired_by is None and p.order < raw.order:
            raise TowerError(
                f"point #{k} is unpaired of order {p.order} < declared order {raw.order}")
    return unpaired


def extract_model(raw: RawTower):
    """Split-tower model of a raw tower: one punctured tree per unpaired
    point, with whiskers and orientations consumed by canonicalization.

    Edge words telescope through the disk whiskers; the fused edge of
    the point p on W_I and W_J carries w_I^-1 g_p w_J, and flipping a
    disk orientation swaps the child order at its vertex and negates
    the sign of any point it supports.
    """
    unpaired = validate_raw(raw)
    whisker = {d.bracket: d.whisker for d in raw.disks}
    orient = {d.bracket: d.orientation for d in raw.disks}
    for i in range(1, raw.m + 1):
        whisker.setdefault(i, "")
        orient.setdefault(i, 1)

    def build(b, parent):
        word = wmul(winv(whisker[parent]), whisker[b]) if parent is not None else ""
        if isinstance(b, int):
            return Leaf(b, word)
        left = build(b[0], b)
        right = build(b[1], b)
        if orient[b] * orient.get(b[0], 1) * orient.get(b[1], 1) == -1:
            left, right = right, left
        return Node(left, right, word)

    points = []
    next_id = 0
    orders = []
    for p in unpaired:
        fused = wmul(winv(whisker[p.left]), p.word, whisker[p.right])
        tree = DecoratedTree(build(p.left, None), build(p.right, None), fused)
        sign = p.sign * orient[p.left] * orient[p.right]
        ct, csign, fused_path = canonicalize_with_edges(SignedTree(sign, tree))
        points.append((next_id, PuncturedTree(csign, ct, fused_path)))
        orders.append(ct.order)
        next_id += 1

    model_order = min(orders) if orders else raw.order
    return TowerModel(raw.m, model_order, tuple(points), next_id)


# --------------------------------------------------------------- the model

@dataclass(frozen=True)
class TowerModel:
    """Immutable split-tower model; every move returns a new model."""

    m: int
    order: int
    points: tuple[tuple[int, PuncturedTree], ...]
    next_id: int = 0

    def __post_init__(self):
        for pid, pt in self.points:
            if pt.tree.order < self.order:
                raise TowerError(
                    f"point {pid} has order {pt.tree.order} below the tower order {self.order}")

    def point(self, pid):
        for qid, pt in self.points:
            if qid == pid:
                return pt
        raise MoveError("UnknownPoint", f"no point with id {pid}")

    def point_ids(self):
        return [pid for pid, _ in self.points]

    def trivially_decorated(self):
        return all(is_trivially_decorated(pt.tree) for _, pt in self.points)


def make_model(m, order, signed_trees):
    """Model from (sign, CanonicalTree, puncture-edge) triples."""
    pts = []
    for k, (sign, ct, edge) in enumerate(signed_trees):
        if edge not in edge_paths(ct):
            raise TowerError(f"puncture {edge!r} is not an edge of {ct.text()}")
        pts.append((k, PuncturedTree(1 if ct.two_torsion else sign, ct, edge)))
    return TowerModel(m, order, tuple(pts), len(pts))


def bch_tower(sigma, order, m):
    """Model realizing a list of signed trees as its intersection sum,
    punctures at the root-leaf edge."""
    pts = []
    for k, st in enumerate(sigma):
        if isinstance(st, SignedTree):
            ct, sign = canonicalize(st)
        else:
            sgn, tree = st
            ct, sign = canonicalize(SignedTree(sgn, tree))
        if ct.order != order:
            raise TowerError(f"tree {ct.text()} has order {ct.order}, expected {order}")
        if any(lab > m or lab < 1 for lab in ct.labels):
            raise TowerError(f"tree {ct.text()} uses labels outside 1..{m}")
        pts.append((k, PuncturedTree(sign, ct, "")))
    return TowerModel(m, order, tuple(pts), len(pts))


def tau(model: TowerModel) -> TreeSum:
    """Signed sum of the trees of the points at the tower's own order
    (punctures forgotten); the obstruction class lives in the order-n
    tree group."""
    return TreeSum(
        [(pt.tree, pt.sign) for _, pt in model.points if pt.tree.order == model.order])


def hat_tau(model: TowerModel) -> TreeSum:
    """Same sum as tau, but read in the lift without IHX: it vanishes
    iff the points pair off into algebraically cancelling pairs."""
    return tau(model)


def glue(a: TowerModel, b: TowerModel) -> TowerModel:
    """Union with all signs of b reversed, so tau(glue) = tau(a) - tau(b)."""
    if a.m != b.m or a.order != b.order:
        raise TowerError(
            f"cannot glue ({a.m}, order {a.order}) with ({b.m}, order {b.order})")
    pts = []
    k = 0
    for _, pt in a.points:
        pts.append((k, pt))
        k += 1
    for _, pt in b.points:
        sign = 1 if pt.tree.two_torsion else -pt.sign
        pts.append((k, PuncturedTree(sign, pt.tree, pt.edge)))
        k += 1
    return TowerModel(a.m, a.order, tuple(pts), k)


# -------------------------------------------------------------------- moves

@dataclass(frozen=True)
class IhxInsert:
    tree: CanonicalTree
    edge: str
    sign: int
    h: DecoratedTree
    x: DecoratedTree


@dataclass(frozen=True)
class PunctureMove:
    point: int
    edge: str


@dataclass(frozen=True)
class CancelPair:
    p: int
    q: int


@dataclass(frozen=True)
class MoveCertificate:
    moves: tuple


def make_ihx_insert(tree: CanonicalTree, edge: str, sign: int = 1):
    h, x = ihx_at(tree, edge)
    return IhxInsert(tree, edge, sign, h, x)


def move_puncture(model: TowerModel, point_id, edge) -> TowerModel:
    """Relocate the marked edge of a point; the signed tree (hence tau
    and its hat lift) is unchanged."""
    pt = model.point(point_id)
    if edge not in edge_paths(pt.tree):
        raise MoveError("UnknownEdge", f"{edge!r} is not an edge of {pt.tree.text()}")
    pts = tuple(
        (pid, PuncturedTree(pt.sign, pt.tree, edge) if pid == point_id else old)
        for pid, old in model.points)
    return replace(model, points=pts)


def ihx_insert(model: TowerModel, tree, edge, sign=1) -> TowerModel:
    """Add the three points of the local IHX move at an interior edge:
    +I, -H, +X, all scaled by ``sign``.  The group-level zero-ness of
    tau is unchanged; the hat-level sum changes by the relator."""
    move = _coerce_ihx(tree, edge, sign)
    return _apply_ihx(model, move)


def _coerce_ihx(tree, edge, sign):
    if isinstance(tree, str):
        tree = parse_tree(tree)
    if isinstance(tree, DecoratedTree):
        ct, csign = canonicalize(SignedTree(1, tree))
        tree, sign = ct, sign * csign
    if sign not in (1, -1):
        raise MoveError("BadSign", "insertion sign must be +-1")
    if edge not in interior_edge_paths(tree):
        raise MoveError("NotInterior", f"{edge!r} is not an interior edge of {tree.text()}")
    return make_ihx_insert(tree, edge, sign)


def _apply_ihx(model, move: IhxInsert) -> TowerModel:
    ct = move.tree
    if ct.order != model.order:
        raise MoveError(
            "WrongOrder", f"tree has order {ct.order}, tower has order {model.order}")
    if any(lab > model.m or lab < 1 for lab in ct.labels):
        raise MoveError("BadLabels", f"tree {ct.text()} uses labels outside 1..{model.m}")
    if move.edge not in interior_edge_paths(ct):
        raise MoveError("NotInterior", f"{move.edge!r} is not an interior edge of {ct.text()}")
    h, x = ihx_at(ct, move.edge)
    if canonicalize(SignedTree(1, h)) != canonicalize(SignedTree(1, move.h)) or \
            canonicalize(SignedTree(1, x)) != canonicalize(SignedTree(1, move.x)):
        raise MoveError("BadTriple", "H and X do not match the local move at this edge")
    pts = list(model.points)
    k = model.next_id
    for raw, coeff in ((ct.decode(), move.sign), (h, -move.sign), (x, move.sign)):
        t, s = canonicalize(SignedTree(coeff, raw))
        pts.append((k, PuncturedTree(s, t, "")))
        k += 1
    return replace(model, points=tuple(pts), next_id=k)


def cancel_simple_pair(model: TowerModel, p, q) -> TowerModel:
    """Remove an algebraically cancelling pair of simple points: same
    canonical tree, opposite signs (a 2-torsion tree admits either
    sign), both at the tower's own order."""
    if p == q:
        raise MoveError("SamePoint", "a pair needs two distinct points")
    pa, pb = model.point(p), model.point(q)
    for pid, pt in ((p, pa), (q, pb)):
        if pt.tree.order != model.order:
            raise MoveError("WrongOrder", f"point {pid} has order {pt.tree.order}, "
                                          f"tower has order {model.order}")
        if not is_simple(pt.tree):
            raise MoveError("NotSimple", f"point {pid} carries the non-simple tree {pt.tree.text()}")
    if pa.tree != pb.tree:
        raise MoveError("TreesDiffer", f"points {p} and {q} carry different trees")
    if not pa.tree.two_torsion and pa.sign + pb.sign != 0:
        raise MoveError("SameSign", f"points {p} and {q} have equal signs")
    pts = tuple((pid, pt) for pid, pt in model.points if pid not in (p, q))
    return replace(model, points=pts)


def apply_move(model, move):
    if isinstance(move, IhxInsert):
        return _apply_ihx(model, move)
    if isinstance(move, PunctureMove):
        return move_puncture(model, move.point, move.edge)
    if isinstance(move, CancelPair):
        return cancel_simple_pair(model, move.p, move.q)
    raise MoveError("UnknownMove", f"unknown move {move!r}")


# ------------------------------------------------------ certify and verify

def certify_raise_order(model: TowerModel) -> MoveCertificate:
    """Plan a certificate emptying the order-n layer.

    Requires the trivial group alphabet and a vanishing obstruction;
    raises ObstructionNonzero (with the normal form) otherwise.  The
    plan expresses tau as an integer combination of IHX relators,
    inserts the negated combination so that the points pair off
    algebraically, then cancels the pairs.
    """
    n, m = model.order, model.m
    if not model.trivially_decorated():
        raise PlannerError("certification supports the trivial group alphabet only")
    ts = tau(model)
    if not is_zero(ts, n, m):
        raise ObstructionNonzero(normal_form(ts, n, m))

    moves = []
    state = model
    combo = {}
    if not ts.is_empty():
        triples, solver = relator_solver(n, m)
        combo = solver.solve(ts_to_vec(ts, n, m))
        if combo is None:  # contradicts is_zero; defensive
            raise PlannerError("relator solve failed on a zero class")
        for tag in sorted(k for k in combo if k[0] == "ihx"):
            coeff = combo[tag]
            if coeff == 0:
                continue
            ct, edge = triples[tag[1]]
            sign = -1 if coeff > 0 else 1
            for _ in range(abs(coeff)):
                move = make_ihx_insert(ct, edge, sign)
                state = _apply_ihx(state, move)
                moves.append(move)

    by_tree: dict = {}
    for pid, pt in state.points:
        if pt.tree.order == n:
            by_tree.setdefault(pt.tree, []).append((pid, pt.sign))
    for tree in sorted(by_tree, key=lambda t: t.code):
        entries = sorted(by_tree[tree])
        if tree.two_torsion:
            if len(entries) % 2:
                raise PlannerError(f"odd number of points on the 2-torsion tree {tree.text()}")
            pairs = [(entries[i][0], entries[i + 1][0]) for i in range(0, len(entries), 2)]
        else:
            plus = [pid for pid, s in entries if s > 0]
            minus = [pid for pid, s in entries if s < 0]
            if len(plus) != len(minus):
                raise PlannerError(f"unbalanced signs on the tree {tree.text()}")
            pairs = list(zip(plus, minus))
        if pairs and not is_simple(tree):
            raise PlannerError(
                f"cannot cancel the non-simple tree {tree.text()}: insertions only add "
                f"points and pair cancellation is restricted to simple trees")
        for p, q in pairs:
            move = CancelPair(p, q)
            state = apply_move(state, move)
            moves.append(move)
    return MoveCertificate(tuple(moves))


def replay_certificate(model: TowerModel, cert: MoveCertificate) -> TowerModel:
    """Apply every move, checking preconditions and conservation of the
    zero-ness of tau; returns the final model with the order raised.
    Raises MoveError on the first violation."""
    n, m = model.order, model.m
    if not model.trivially_decorated():
        raise MoveError("Decorated", "replay supports the trivial group alphabet only")
    zero_before = is_zero(tau(model), n, m)
    state = model
    for k, move in enumerate(cert.moves):
        state = apply_move(state, move)
        if is_zero(tau(state), n, m) != zero_before:
            raise MoveError("ZeronessChanged", f"move #{k} changed the vanishing of tau")
    leftover = [pid for pid, pt in state.points if pt.tree.order == n]
    if leftover:
        raise MoveError("PointsRemain", f"order-{n} points remain: {leftover}")
    return replace(state, order=n + 1)


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_certificate(model: TowerModel, cert: MoveCertificate) -> VerificationResult:
    """Replay a certificate; failures come back as a result, not an
    exception."""
    try:
        replay_certificate(model, cert)
    except (MoveError, TowerError) as exc:
        return VerificationResult(False, str(exc))
    return VerificationResult(True, None)


# ---------------------------------------------------------------- JSON i/o

def model_to_json(model: TowerModel) -> str:
    doc = {
        "m": model.m,
        "order": model.order,
        "points": [
            {"sign": pt.sign, "tree": pt.tree.text(), "puncture": pt.edge}
            for _, pt in model.points
        ],
    }
    return json.dumps(doc, indent=2)


def model_from_json(text: str) -> TowerModel:
    doc = json.loads(text)
    pts = []
    for entry in doc["points"]:
        tree = parse_tree(entry["tree"])
        if not isinstance(tree, DecoratedTree):
            raise TowerError(f"point tree {entry['tree']!r} is not an unrooted tree")
        ct, sign = canonicalize(SignedTree(entry["sign"], tree))
        pts.append((sign, ct, entry["puncture"]))
    return make_model(doc["m"], doc["order"], pts)


def raw_to_json(raw: RawTower) -> str:
    doc = {
        "m": raw.m,
        "order": raw.order,
        "disks": [
            {"bracket": bracket_text(d.bracket), "whisker": d.whisker,
             "orientation": d.orientation}
            for d in raw.disks
        ],
        "points": [
            {"sign": p.sign, "left": bracket_text(p.left), "right": bracket_text(p.right),
             "g": p.word,
             "paired_by": bracket_text(p.paired_by) if p.paired_by is not None else None}
            for p in raw.points
        ],
    }
    return json.dumps(doc, indent=2)


def raw_from_json(text: str) -> RawTower:
    doc = json.loads(text)
    disks = tuple(
        RawDisk(parse_bracket(d["bracket"]), d.get("whisker", ""), d.get("orientation", 1))
        for d in doc.get("disks", ()))
    points = tuple(
        RawPoint(p["sign"], parse_bracket(p["left"]), parse_bracket(p["right"]),
                 p.get("g", ""),
                 parse_bracket(p["paired_by"]) if p.get("paired_by") else None)
        for p in doc.get("points", ()))
    return RawTower(doc["m"], doc["order"], disks, points)


def load_tower(text: str):
    """Load either schema: a raw tower (has "disks") is extracted."""
    doc = json.loads(text)
    if "disks" in doc:
        return extract_model(raw_from_json(text))
    return model_from_json(text)


def certificate_to_json(cert: MoveCertificate) -> str:
    out = []
    for move in cert.moves:
        if isinstance(move, IhxInsert):
            out.append({"move": "ihx_insert", "i": move.tree.text(), "h": to_text(move.h),
                        "x": to_text(move.x), "edge": move.edge, "sign": move.sign})
        elif isinstance(move, PunctureMove):
            out.append({"move": "move_puncture", "point": move.point, "edge": move.edge})
        elif isinstance(move, CancelPair):
            out.append({"move": "cancel_pair", "p": move.p, "q": move.q})
        else:
            raise ValueError(f"unknown move {move!r}")
    return json.dumps(out, indent=2)


def certificate_from_json(text: str) -> MoveCertificate:
    doc = json.loads(text)
    moves = []
    for entry in doc:
        kind = entry.get("move")
        if kind == "ihx_insert":
            # fold a non-canonical I string into the sign by hand: the
            # insertion sign stays meaningful through H and X even when
            # the I tree is 2-torsion, so canonicalize's torsion sign
            # normalization must not touch it
            ct, csign = canonicalize(SignedTree(1, parse_tree(entry["i"])))
            h = parse_tree(entry["h"])
            x = parse_tree(entry["x"])
            moves.append(IhxInsert(ct, entry["edge"], entry["sign"] * csign, h, x))
        elif kind == "move_puncture":
            moves.append(PunctureMove(entry["point"], entry["edge"]))
        elif kind == "cancel_pair":
            moves.append(CancelPair(entry["p"], entry["q"]))
        else:
            raise ValueError(f"unknown move record {entry!r}")
    return MoveCertificate(tuple(moves))


# ----------------------------------------------------------- random towers

def random_raw_tower(rng, m_range=(2, 4), max_bracket_order=2, unpaired_range=(1, 3),
                     alphabet="ab"):
    """A random well-formed raw tower, for randomized suites and demos."""
    m = rng.randint(*m_range)

    def random_word(maxlen=2):
        letters = []
        for _ in range(rng.randint(0, maxlen)):
            ch = rng.choice(alphabet)
            letters.append(ch if rng.random() < 0.5 else ch.upper())
        return wmul(*letters)

    def random_bracket(max_order):
        if max_order == 0 or rng.random() < 0.4:
            return rng.randint(1, m)
        k = rng.randint(0, max_order - 1)
        return (random_bracket(k), random_bracket(max_order - 1 - k))

    needed = {}
    tops = []
    for _ in range(rng.randint(1, 3)):
        b = random_bracket(max_bracket_order)
        tops.append(b)
        for sb in sub_brackets(b):
            if not isinstance(sb, int):
                needed[sb] = True

    disks = [RawDisk(b, random_word(), rng.choice((1, -1))) for b in needed]
    if rng.random() < 0.5:  # optional order-0 surface data
        disks.append(RawDisk(rng.randint(1, m), random_word(), rng.choice((1, -1))))

    points = []
    for b in needed:
        s = rng.choice((1, -1))
        points.append(RawPoint(s, b[0], b[1], random_word(), b))
        points.append(RawPoint(-s, b[0], b[1], random_word(), b))

    surfaces = list(range(1, m + 1)) + list(needed)
    unpaired = []
    for _ in range(rng.randint(*unpaired_range)):
        left = rng.choice(tops + surfaces)
        right = rng.choice(surfaces)
        unpaired.append(RawPoint(rng.choice((1, -1)), left, right, random_word()))
    points.extend(unpaired)

    order = min(bracket_order(p.left) + bracket_order(p.right) for p in unpaired)
    return RawTower(m, order, tuple(disks), tuple(points))
