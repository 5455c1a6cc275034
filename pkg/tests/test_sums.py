import pytest

from towertrees.sums import TreeSum, nonrepeating_project, sum_add, sum_negate, sum_scale
from towertrees.trees import SignedTree, canonicalize, parse_tree


def canon(text):
    return canonicalize(SignedTree(1, parse_tree(text)))[0]


Y123 = canon("inner(1,(2,3),)")
Y111 = canon("inner(1,(1,1),)")
E12 = canon("inner(1,2,)")


def test_cancel():
    t = TreeSum({Y123: 1})
    assert (t + (-t)).is_empty()


def test_torsion_mod_two():
    assert Y111.two_torsion
    assert TreeSum({Y111: 2}).is_empty()
    assert sum_scale(TreeSum({Y111: 1}), 3) == TreeSum({Y111: 1})
    assert TreeSum({Y111: -1}) == TreeSum({Y111: 1})


def test_add_sub_roundtrip():
    s = TreeSum({Y123: 2})
    t = TreeSum({Y111: 1})
    assert sum_add(s, t) - t == s
    assert sum_negate(sum_negate(s)) == s


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        TreeSum({Y123: 1, E12: 1})
    with pytest.raises(ValueError):
        TreeSum({Y123: 1}) + TreeSum({E12: 1})


def test_order_property():
    assert TreeSum().order is None
    assert TreeSum({E12: 5}).order == 0


def test_nonrepeating_project():
    kept = canon("inner((1,2),(3,4),)")
    dropped = canon("inner((1,1),(2,3),)")
    ts = TreeSum({kept: 2, dropped: 3})
    proj = nonrepeating_project(ts)
    assert proj == TreeSum({kept: 2})
    assert nonrepeating_project(proj) == proj
    # linear
    other = TreeSum({kept: -2})
    assert nonrepeating_project(ts + other) == proj + nonrepeating_project(other)


def test_text():
    assert TreeSum().text() == "0"
    assert "+2*" in TreeSum({Y123: 2}).text()
