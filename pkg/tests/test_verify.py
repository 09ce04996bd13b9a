"""Independent verifier and hypothesis reporting."""

from conftest import c4_graph, cycle_leaf, k2_tree, weld_of
from weldpath import (
    BLACK,
    WHITE,
    AssembledGraph,
    Leaf,
    Node,
    assemble,
    check_theorem_hypotheses,
    complete_bipartite_leaf,
    transposition_graph,
    verify_pdpc,
)


def k2():
    return AssembledGraph.from_edges([BLACK, WHITE], [(0, 1)])


def test_accept_k2():
    v = verify_pdpc(k2(), [(0, 1)], [[0, 1]])
    assert v.accepted and v.violation is None
    assert v.to_json() == {"accepted": True, "violation": None}


def test_reject_uncovered():
    v = verify_pdpc(c4_graph(), [(0, 1)], [[0, 1]])
    assert not v.accepted
    assert v.violation["reason"] == "vertices uncovered"
    assert v.violation["first_missing"] == 2


def test_accept_c4_spanning_path():
    assert verify_pdpc(c4_graph(), [(0, 3)], [[0, 1, 2, 3]]).accepted


def test_reject_wrong_endpoints():
    v = verify_pdpc(c4_graph(), [(0, 3)], [[1, 0, 3, 2]])
    assert not v.accepted and v.violation["reason"] == "wrong start"
    v = verify_pdpc(c4_graph(), [(0, 1)], [[0, 3, 2, 1]])
    assert v.accepted  # 0-3-2-1 is a real spanning path
    v = verify_pdpc(c4_graph(), [(0, 3)], [[0, 1, 2, 3][::-1]])
    assert not v.accepted


def test_reject_non_edge():
    v = verify_pdpc(c4_graph(), [(0, 3)], [[0, 2, 1, 3]])
    assert not v.accepted
    assert v.violation["reason"] == "non-edge"
    assert v.violation["pair"] == 0


def test_reject_duplicate_vertex():
    v = verify_pdpc(c4_graph(), [(0, 1), (2, 3)], [[0, 1], [2, 3, 2]])
    assert not v.accepted
    assert v.violation["reason"] == "vertex covered twice"


def test_reject_path_count_mismatch():
    v = verify_pdpc(c4_graph(), [(0, 1), (2, 3)], [[0, 1, 2, 3]])
    assert not v.accepted and v.violation["reason"] == "path count mismatch"


def test_reject_out_of_range_and_malformed():
    assert not verify_pdpc(c4_graph(), [(0, 3)], [[0, 1, 2, 99]]).accepted
    assert not verify_pdpc(c4_graph(), [(0, 3)], [["a", 1]]).accepted
    assert not verify_pdpc(c4_graph(), [(0, 3)], [None]).accepted
    assert not verify_pdpc(c4_graph(), [(0, 3)], [[]]).accepted


def test_hypotheses_tg4_all_pass():
    report = check_theorem_hypotheses(transposition_graph(4))
    assert report["ok"]
    assert any(e["check"] == "equitable" and e["ok"] for e in report["checks"])


def test_hypotheses_odd_leaf_reported():
    bad = Leaf(colors=(BLACK, WHITE, BLACK), edges=((0, 1), (1, 2)))
    report = check_theorem_hypotheses(bad)
    assert not report["ok"]
    assert any(e["check"] == "leaf_parity" and not e["ok"]
               for e in report["checks"])


def test_hypotheses_too_few_children_reported():
    rank2 = weld_of([complete_bipartite_leaf(1)] * 2, 0)
    bad = Node(children=(rank2, rank2), matchings={(0, 1): (0, 1, 2, 3)})
    report = check_theorem_hypotheses(bad)
    assert not report["ok"]
    assert any(e["check"] == "children_count" and not e["ok"]
               for e in report["checks"])


def test_hypotheses_c6_leaf_fails_certification():
    report = check_theorem_hypotheses(cycle_leaf(6))
    assert not report["ok"]
    assert any(e["check"] == "leaf_certified" and not e["ok"]
               for e in report["checks"])


def test_verifier_accepts_k2_tree_cover():
    g = assemble(k2_tree())
    assert verify_pdpc(g, [(0, 1)], [[0, 1]]).accepted
