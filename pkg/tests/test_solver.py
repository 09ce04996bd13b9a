"""Constructive solver: base cases, reduction, extension, traces, guards."""

import itertools
import random

import pytest

from conftest import blacks_whites, c4_graph, cycle_leaf, k2_tree, weld_of
from weldpath import (
    BLACK,
    WHITE,
    CountingViolationError,
    HypothesisError,
    PaddingError,
    Solver,
    brute_pdpc,
    complete_bipartite_leaf,
    extend_through_empty_layers,
    reduce_pair_count,
    select_connector,
    solve,
    transposition_graph,
    verify_pdpc,
)


def checked(solver, pairs):
    cover, trace = solver.solve(pairs)
    verdict = verify_pdpc(solver.graph, pairs, cover)
    assert verdict.accepted, (pairs, verdict.violation)
    return cover, trace


def test_solve_k2():
    cover, trace = solve(k2_tree(), [(0, 1)])
    assert cover == [[0, 1]]
    assert trace.route == "base_rank2"


def test_solve_rejects_bad_inputs():
    s = Solver(transposition_graph(3))
    blacks, whites = blacks_whites(s.graph)
    with pytest.raises(HypothesisError):
        s.solve([(blacks[0], whites[0])])  # wrong pair count
    with pytest.raises(HypothesisError):
        s.solve([(whites[0], blacks[0]), (blacks[1], whites[1])])
    with pytest.raises(HypothesisError):
        s.solve([(blacks[0], whites[0]), (blacks[0], whites[1])])
    with pytest.raises(HypothesisError):
        s.solve([(blacks[0], 99), (blacks[1], whites[1])])


def test_solve_requires_rank_at_least_two():
    with pytest.raises(HypothesisError):
        Solver(complete_bipartite_leaf(2)).solve([(0, 2)])


def test_uncertified_leaf_rejected_at_init():
    tree = weld_of([cycle_leaf(6), cycle_leaf(6)], 3)
    with pytest.raises(HypothesisError):
        Solver(tree)


def test_rank2_path_alternates_colors():
    tree = weld_of([complete_bipartite_leaf(3)] * 2, 1)
    s = Solver(tree)
    blacks, whites = blacks_whites(s.graph)
    for t in whites:
        cover, _ = checked(s, [(blacks[0], t)])
        colors = [s.graph.color[v] for v in cover[0]]
        assert all(a != b for a, b in zip(colors, colors[1:]))
        assert len(cover[0]) == s.graph.num_vertices


def test_rank2_cross_checked_against_oracle():
    tree = weld_of([complete_bipartite_leaf(3)] * 2, 1)
    s = Solver(tree)
    blacks, whites = blacks_whites(s.graph)
    for b in blacks:
        for t in whites:
            checked(s, [(b, t)])
            assert brute_pdpc(s.graph, [(b, t)]) is not None


def test_select_connector_lowest_admissible():
    colors = [BLACK, WHITE, BLACK, WHITE, WHITE]
    assert select_connector(colors, range(5), WHITE, {}) == 1
    assert select_connector(colors, range(5), WHITE, {"x": [1]}) == 3
    assert select_connector(colors, range(5), BLACK, {}) == 0


def test_select_connector_pigeonhole():
    # 2n-1 whites minus forbidden sets of total size 2n-3 leaves a choice
    n = 4
    colors = [WHITE] * (2 * n - 1)
    forbidden = {"a": list(range(n - 1)), "b": list(range(n - 1, 2 * n - 3))}
    v = select_connector(colors, range(2 * n - 1), WHITE, forbidden,
                         bound=2 * n - 3)
    assert v == 2 * n - 3


def test_select_connector_violations():
    colors = [WHITE, WHITE]
    with pytest.raises(CountingViolationError):
        select_connector(colors, range(2), WHITE, {"a": [0], "b": [1]})
    with pytest.raises(CountingViolationError):
        select_connector(colors, range(2), WHITE, {"a": [0, 1]}, bound=1)
    try:
        select_connector(colors, range(2), WHITE, {"a": [0], "b": [1]})
    except CountingViolationError as err:
        assert err.sizes == {"a": 1, "b": 1}


def test_extend_zero_unused_layers_is_identity():
    s = Solver(transposition_graph(2))
    assert extend_through_empty_layers(s, [[0, 1]], {0, 1}) == [[0, 1]]


def test_extend_weld_of_two_k2_layers():
    # a cover of layer 0 alone grows into a spanning path of the 4-cycle
    tree = weld_of([complete_bipartite_leaf(1)] * 2, 0)
    s = Solver(tree)
    pairs = [(0, 1)]
    out = extend_through_empty_layers(s, [[0, 1]], {0})
    assert len(out) == 1 and len(out[0]) == 4
    assert verify_pdpc(s.graph, pairs, out).accepted


def test_extend_rank3_partial_cover():
    s = Solver(transposition_graph(3))
    g = s.graph
    lo0, hi0 = g.layer_ranges[0]
    b0 = next(v for v in range(lo0, hi0) if g.color[v] == BLACK)
    w0 = next(v for v in range(lo0, hi0) if g.color[v] == WHITE)
    base = [[b0, w0]]
    out = extend_through_empty_layers(s, base, {0})
    assert verify_pdpc(g, [(b0, w0)], out).accepted


def test_reduce_identity_when_full():
    g = c4_graph()
    out = reduce_pair_count(lambda ps: brute_pdpc(g, ps), g,
                            [(0, 1), (2, 3)], 2)
    assert out == [[0, 1], [2, 3]]


def test_reduce_c4_hand_trace():
    # pad (0,3) with the free adjacent pair (2,1) and splice the two paths
    g = c4_graph()
    out = reduce_pair_count(lambda ps: brute_pdpc(g, ps), g, [(0, 3)], 2)
    assert out == [[0, 1, 2, 3]]


def test_reduce_tg4_to_single_pair():
    s = Solver(transposition_graph(4))
    blacks, whites = blacks_whites(s.graph)
    rng = random.Random(11)
    for _ in range(25):
        pairs = [(rng.choice(blacks), rng.choice(whites))]
        out = s.solve_reduced(pairs)
        assert verify_pdpc(s.graph, pairs, out).accepted
        assert len(out) == 1 and len(out[0]) == 24


def test_reduce_padding_failure_reported():
    # K2 has no free adjacent pair once its two vertices are endpoints
    tree = k2_tree()
    s = Solver(tree)
    with pytest.raises(PaddingError):
        reduce_pair_count(lambda ps: s.solve(ps)[0], s.graph, [(0, 1)], 2)


def test_trace_records_case_labels():
    s = Solver(transposition_graph(4))
    g = s.graph

    def pick(layer, color, used):
        lo, hi = g.layer_ranges[layer]
        v = next(x for x in range(lo, hi)
                 if g.color[x] == color and x not in used)
        used.add(v)
        return v

    def inst(s_layers, t_layers):
        used = set()
        return list(zip([pick(j, BLACK, used) for j in s_layers],
                        [pick(j, WHITE, used) for j in t_layers]))

    cover, trace = checked(s, inst([0, 1, 2], [1, 2, 3]))
    assert trace.case == "1" and trace.route == "base_rank4_small"
    _, trace = checked(s, inst([0, 0, 0], [0, 0, 0]))
    assert trace.case == "2"
    _, trace = checked(s, inst([0, 0, 0], [1, 1, 1]))
    assert trace.case == "3"
    _, trace = checked(s, inst([0, 0, 0], [0, 1, 2]))
    assert trace.case == "4"
    # {s1, s2, t3} in layer 0 with t1 back in layer 0: sub-case 5.1
    _, trace = checked(s, inst([0, 0, 1], [0, 1, 0]))
    assert trace.case == "5.1a" or trace.case == "5.1b"
    _, trace = checked(s, inst([0, 0, 1], [1, 2, 0]))
    assert trace.case.startswith("5.2")
    _, trace = checked(s, inst([0, 0, 1], [1, 1, 0]))
    assert trace.case == "6"


def test_trace_serializes_and_preserves_pair_order():
    s = Solver(transposition_graph(3))
    blacks, whites = blacks_whites(s.graph)
    pairs = [(blacks[1], whites[0]), (blacks[0], whites[2])]
    cover, trace = checked(s, pairs)
    for (a, b), path in zip(pairs, cover):
        assert path[0] == a and path[-1] == b
    doc = trace.to_json()
    assert isinstance(doc, dict) and "case" in doc
    assert all(isinstance(d, dict) for d in trace.nodes())


def test_solver_is_deterministic():
    a = Solver(transposition_graph(4))
    b = Solver(transposition_graph(4))
    blacks, whites = blacks_whites(a.graph)
    rng = random.Random(3)
    for _ in range(50):
        pairs = list(zip(rng.sample(blacks, 3), rng.sample(whites, 3)))
        assert a.solve(pairs)[0] == b.solve(pairs)[0]


def test_solver_agrees_with_oracle_existence():
    # wherever the constructive solver succeeds, exhaustive search must too
    tree = weld_of([k2_tree() for _ in range(3)], 2)
    s = Solver(tree)
    blacks, whites = blacks_whites(s.graph)
    for S in itertools.combinations(blacks, 2):
        for T in itertools.permutations(whites, 2):
            pairs = list(zip(S, T))
            checked(s, pairs)
            oracle = brute_pdpc(s.graph, pairs)
            assert oracle is not None
            assert verify_pdpc(s.graph, pairs, oracle).accepted


def test_paths_alternate_colors_everywhere():
    s = Solver(transposition_graph(4))
    blacks, whites = blacks_whites(s.graph)
    rng = random.Random(17)
    for _ in range(100):
        pairs = list(zip(rng.sample(blacks, 3), rng.sample(whites, 3)))
        cover, _ = checked(s, pairs)
        for path in cover:
            cols = [s.graph.color[v] for v in path]
            assert all(x != y for x, y in zip(cols, cols[1:]))


def test_mirrored_cases():
    # targets concentrated in one layer exercise the role-swapped branch
    s = Solver(transposition_graph(4))
    g = s.graph
    lo, hi = g.layer_ranges[0]
    whites0 = [v for v in range(lo, hi) if g.color[v] == WHITE]
    blacks = [next(v for v in range(*g.layer_ranges[j]) if g.color[v] == BLACK)
              for j in (1, 2, 3)]
    pairs = list(zip(blacks, whites0[:3]))
    cover, trace = checked(s, pairs)
    assert trace.case == "4" and trace.root.get("mirrored")
