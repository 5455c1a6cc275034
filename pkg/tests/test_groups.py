import itertools

import pytest

from towertrees.groups import (
    group_structure,
    ihx_relators,
    ihx_triples,
    is_zero,
    normal_form,
    presentation,
    raw_generators,
    reduce_to_simple,
    relator_sum,
)
from towertrees.sums import TreeSum
from towertrees.trees import (
    SignedTree,
    all_trees,
    canonicalize,
    is_simple,
    parse_tree,
)


def canon(text):
    return canonicalize(SignedTree(1, parse_tree(text)))[0]


# ------------------------------------------------------------ IHX relators

def test_no_interior_edges_at_order_one():
    assert ihx_relators(1, 4) == []


def test_distinct_label_relator_has_three_terms():
    # among the order-2 relators on 4 distinct labels there is one whose
    # three terms are the I, H, X trees
    rels = ihx_relators(2, 4)
    distinct = [r for r in rels
                if len(r) == 3 and all(t.labels == [1, 2, 3, 4] for t in r.trees())]
    assert distinct
    r = distinct[0]
    coeffs = sorted(c for _, c in r.items())
    assert coeffs == [-1, 1, 1]


def test_relator_count_matches_direct_enumeration():
    # an order-n tree has 2n+1 edges of which exactly n-1 are interior,
    # so the relator count is (n-1) * (number of canonical trees)
    for n, m in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        assert len(ihx_relators(n, m)) == (n - 1) * len(all_trees(n, m)), (n, m)


def test_relators_vanish():
    for n in range(4):
        for m in range(1, 5):
            for r in ihx_relators(n, m):
                assert is_zero(r, n, m), (n, m, r.text())


# ------------------------------------------------------------ presentation

def test_presentation_order0():
    mat = presentation(0, 1)
    assert len(mat.generators) == 1
    assert mat.rows == ()


def test_presentation_forces_two_torsion():
    mat = presentation(1, 1)
    assert len(mat.generators) == 1
    assert mat.rows == (((0, 2),),)


def test_presentation_row_counts():
    mat = presentation(2, 3)
    n_gens = len(mat.generators)
    # one AS row per generator and internal vertex, one IHX row per
    # (canonical tree, interior edge) pair
    assert mat.as_count == 2 * n_gens
    assert mat.ihx_count == len(ihx_triples(2, 3))
    assert len(mat.rows) == mat.as_count + mat.ihx_count


def test_raw_generators_are_orientation_explicit():
    gens = raw_generators(1, 2)
    # Y(1,2,3)-style classes split by orientation only when labels
    # distinguish the flip; with labels from {1,2} the four AS classes
    # have representatives with a flip partner inside the list
    assert len(gens) >= len(all_trees(1, 2))


# ---------------------------------------------------------- group structure

def test_group_structure_smallest():
    assert group_structure(0, 1).text() == "Z"
    assert group_structure(1, 1).text() == "Z/2"


def test_order0_rank_formula():
    for m in range(1, 5):
        gs = group_structure(0, m)
        assert gs.free_rank == m * (m + 1) // 2
        assert gs.torsion == ()


def test_nonrepeating_torsion_free():
    for n in range(3):
        gs = group_structure(n, n + 2, nonrepeating=True)
        assert gs.torsion == (), (n, gs)


def test_known_structures():
    # computed values, cross-checked by the Lie oracle rank equalities
    assert group_structure(1, 2).text() == "Z/2 + Z/2 + Z/2 + Z/2"
    assert group_structure(2, 2).text() == "Z"
    assert group_structure(2, 3).free_rank == 6
    assert group_structure(2, 4).free_rank == 20
    assert group_structure(2, 4).torsion == ()


def test_label_permutation_invariance():
    # relabeling 1..m by any permutation preserves the isomorphism type;
    # check by restricting label multisets is not possible at the group
    # level, so compare via a relabeled zero test instead
    base = group_structure(2, 3)
    # the group only sees the label count, so this is a determinism
    # check plus an explicit relabeled-relator membership sweep
    for perm in itertools.permutations([1, 2, 3]):
        for ct, edge in ihx_triples(2, 3)[:6]:
            rel = relator_sum(ct, edge)
            relabeled = TreeSum([
                (canonicalize(SignedTree(c, _relabel(t, perm)))) for t, c in rel.items()
            ])
            assert is_zero(relabeled, 2, 3)
    assert group_structure(2, 3) == base


def _relabel(ct, perm):
    from towertrees.trees import DecoratedTree, Leaf, Node

    def go(sub):
        if isinstance(sub, Leaf):
            return Leaf(perm[sub.label - 1], sub.word)
        return Node(go(sub.left), go(sub.right), sub.word)

    layout = ct.decode()
    return DecoratedTree(go(layout.left), go(layout.right), layout.word)


# ------------------------------------------------------------ the zero test

def test_single_nonrepeating_tree_nonzero():
    t = canon("inner((1,2),(3,4),)")
    assert not is_zero(TreeSum({t: 1}), 2, 4)


def test_torsion_pair_is_zero():
    y = canon("inner(1,(1,1),)")
    assert is_zero(TreeSum([(y, 1), (y, 1)]), 1, 1)


def test_is_zero_rejects_wrong_order():
    t = canon("inner(1,2,)")
    with pytest.raises(ValueError):
        is_zero(TreeSum({t: 1}), 1, 2)


def test_normal_form_deterministic_and_reduced():
    t = canon("inner((1,2),(3,4),)")
    nf = normal_form(TreeSum({t: 1}), 2, 4)
    assert not nf.is_empty()
    assert normal_form(nf, 2, 4) == nf
    # the representative differs from t by a lattice element
    assert is_zero(nf - TreeSum({t: 1}), 2, 4)


# --------------------------------------------------------- reduce_to_simple

def test_reduce_identity_on_low_order():
    for n in range(4):
        for ct in all_trees(n, 3):
            assert reduce_to_simple(ct) == TreeSum({ct: 1})


def test_reduce_star():
    star = canon("inner((1,2),((3,4),(1,2)),)")
    assert not is_simple(star)
    ts = reduce_to_simple(star)
    assert all(is_simple(t) for t in ts.trees())
    diff = ts - TreeSum({star: 1})
    assert is_zero(diff, 4, 4)


def test_reduce_identity_on_order5_caterpillar():
    cat = canon("inner(1,(2,(3,(4,(5,(6,7))))),)")
    assert reduce_to_simple(cat) == TreeSum({cat: 1})


# ------------------------------------------------- raw-route cross checks

def _raw_zero_test(ts, n, m):
    """Zero test straight from the raw presentation: express the sum
    over orientation-explicit generators and test membership in the
    integer span of the AS and IHX rows."""
    from towertrees.intlinalg import IntegerLattice
    from towertrees.trees import explicit_code

    mat = presentation(n, m)
    index = {explicit_code(g): i for i, g in enumerate(mat.generators)}
    lat = IntegerLattice()
    for row in mat.rows:
        lat.add(dict(row))
    vec = {}
    for t, c in ts.items():
        # any raw representative works; representatives differ by AS rows
        g = t.decode()
        ct, s = canonicalize(SignedTree(1, g))
        assert ct == t
        i = index[explicit_code(g)]
        vec[i] = vec.get(i, 0) + c * s
    return lat.contains({i: v for i, v in vec.items() if v})


def test_zero_test_agrees_with_raw_presentation():
    import random
    rng = random.Random(99)
    for n, m in [(1, 2), (2, 2), (2, 3)]:
        trees = all_trees(n, m)
        agree_zero = agree_nonzero = 0
        for _ in range(40):
            ts = TreeSum([(rng.choice(trees), rng.randint(-2, 2)) for _ in range(3)])
            a = is_zero(ts, n, m)
            b = _raw_zero_test(ts, n, m)
            assert a == b, (n, m, ts.text())
            if a:
                agree_zero += 1
            else:
                agree_nonzero += 1
        assert agree_nonzero  # the sample is not degenerate
        for r in ihx_relators(n, m):
            assert _raw_zero_test(r, n, m)


def test_cokernels_agree_between_presentations():
    # SNF of the raw presentation vs SNF of the canonical-coordinate
    # lattice (2t rows for torsion trees plus IHX rows): equal free
    # rank and equal invariant factors > 1
    from towertrees.groups import relator_sum, ts_to_vec
    from towertrees.intlinalg import smith_normal_form

    for n, m in [(0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2)]:
        raw = group_structure(n, m)
        trees = all_trees(n, m)
        rows = [{i: 2} for i, t in enumerate(trees) if t.two_torsion]
        for ct, edge in ihx_triples(n, m):
            rows.append(ts_to_vec(relator_sum(ct, edge), n, m))
        factors, rank = smith_normal_form(rows)
        assert len(trees) - rank == raw.free_rank, (n, m)
        assert tuple(d for d in factors if d > 1) == raw.torsion, (n, m)
