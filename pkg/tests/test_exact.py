"""Exact solvers: Hamiltonian path engine, exhaustive oracle, certification."""

import itertools

import pytest

from conftest import blacks_whites, c4_graph, cycle_leaf, weld_of
from weldpath import (
    BLACK,
    WHITE,
    AssembledGraph,
    InputError,
    OracleBoundError,
    assemble,
    brute_pdpc,
    certify_leaf,
    complete_bipartite_leaf,
    ham_path_between,
    is_balanced,
    transposition_graph,
    verify_pdpc,
)


def c6_graph():
    return assemble(cycle_leaf(6))


def test_ham_trivial_single_vertex():
    g = AssembledGraph.from_edges([BLACK], [])
    assert ham_path_between(g, 0, 0) == [0]


def test_ham_k2():
    g = AssembledGraph.from_edges([BLACK, WHITE], [(0, 1)])
    assert ham_path_between(g, 0, 1) == [0, 1]


def all_spanning_paths_from(g, s):
    """Plain DFS enumeration of all Hamiltonian paths starting at s."""
    n = g.num_vertices
    out = []

    def go(path, seen):
        if len(path) == n:
            out.append(list(path))
            return
        for w in g.neighbors(path[-1]):
            if w not in seen:
                path.append(w)
                seen.add(w)
                go(path, seen)
                seen.remove(w)
                path.pop()

    go([s], {s})
    return out

def test_ham_c6_antipodal_absent():
    # the only spanning paths of a cycle are its two arcs
    g = c6_graph()
    ends = {p[-1] for p in all_spanning_paths_from(g, 0)}
    assert 3 not in ends
    assert ham_path_between(g, 0, 3) is None
    assert ham_path_between(g, 0, 1) is not None


def test_ham_out_of_range():
    with pytest.raises(InputError):
        ham_path_between(c4_graph(), 0, 9)


def test_brute_c4_single_pair():
    assert brute_pdpc(c4_graph(), [(0, 3)]) == [[0, 1, 2, 3]]


def test_brute_c4_two_pairs():
    assert brute_pdpc(c4_graph(), [(0, 1), (2, 3)]) == [[0, 1], [2, 3]]


def test_brute_deterministic():
    g = assemble(transposition_graph(3))
    blacks, whites = blacks_whites(g)
    pairs = [(blacks[0], whites[0]), (blacks[1], whites[1])]
    assert brute_pdpc(g, pairs) == brute_pdpc(g, pairs)


def test_brute_agrees_with_verifier():
    g = assemble(weld_of([complete_bipartite_leaf(2)] * 2, 9))
    blacks, whites = blacks_whites(g)
    for s in blacks:
        for t in whites:
            cover = brute_pdpc(g, [(s, t)])
            assert cover is not None
            assert verify_pdpc(g, [(s, t)], cover).accepted


def test_brute_none_iff_unbalanced_on_small_instances():
    # balance is necessary; on these graphs it is also sufficient
    for tree in (transposition_graph(3),
                 weld_of([complete_bipartite_leaf(1)] * 3, 4)):
        g = assemble(tree)
        n = g.num_vertices
        for quad in itertools.permutations(range(n), 4):
            pairs = [(quad[0], quad[1]), (quad[2], quad[3])]
            found = brute_pdpc(g, pairs)
            if not is_balanced(g, pairs):
                assert found is None, pairs
            if found is not None:
                assert verify_pdpc(g, pairs, found).accepted


def test_ham_matches_single_pair_brute():
    g = c6_graph()
    for s in range(6):
        for t in range(6):
            if s == t:
                continue
            assert (ham_path_between(g, s, t) is None) == (
                brute_pdpc(g, [(s, t)]) is None)


def test_brute_refuses_oversized_graph():
    g = assemble(transposition_graph(4))
    blacks, whites = blacks_whites(g)
    with pytest.raises(OracleBoundError):
        brute_pdpc(g, [(blacks[0], whites[0])])
    # raising the bound makes the same call legal
    cover = brute_pdpc(g, [(blacks[0], whites[0])], bound=24)
    assert verify_pdpc(g, [(blacks[0], whites[0])], cover).accepted


def test_brute_env_bound(monkeypatch):
    g = assemble(transposition_graph(4))
    blacks, whites = blacks_whites(g)
    monkeypatch.setenv("WELDPATH_ORACLE_BOUND", "24")
    assert brute_pdpc(g, [(blacks[0], whites[0])]) is not None


def test_brute_rejects_bad_pairs():
    with pytest.raises(InputError):
        brute_pdpc(c4_graph(), [(0, 0)])
    with pytest.raises(InputError):
        brute_pdpc(c4_graph(), [])


def test_certify_k2_and_kmm():
    assert certify_leaf(complete_bipartite_leaf(1))
    assert certify_leaf(complete_bipartite_leaf(2))
    assert certify_leaf(complete_bipartite_leaf(3))


def test_certify_c6_not_laceable():
    assert not certify_leaf(cycle_leaf(6))


def test_certify_oversized():
    big = complete_bipartite_leaf(9)
    with pytest.raises(OracleBoundError):
        certify_leaf(big)
    assert certify_leaf(big, trust=True)


def test_certify_single_vertex_connected():
    from weldpath import Leaf
    assert certify_leaf(Leaf(colors=(BLACK,), edges=(), mode="connected"))
