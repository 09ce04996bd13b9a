"""Shared builders for the test suite."""

from weldpath import (
    BLACK,
    WHITE,
    AssembledGraph,
    Leaf,
    Node,
    complete_bipartite_leaf,
    random_matchings,
)


def weld_of(children, seed=0):
    """Weld the given trees with seeded random color-respecting matchings."""
    children = tuple(children)
    return Node(children=children, matchings=random_matchings(children, seed))


def k2_tree():
    """Rank-2 weld of two single-vertex leaves: the graph K2."""
    return Node(
        children=(Leaf(colors=(BLACK,), edges=(), mode="connected"),
                  Leaf(colors=(WHITE,), edges=(), mode="connected")),
        matchings={(0, 1): (0,)},
    )


def cycle_leaf(n):
    """The n-cycle as a rank-1 leaf (n even), colors alternating."""
    colors = tuple(BLACK if v % 2 == 0 else WHITE for v in range(n))
    edges = tuple((v, (v + 1) % n) for v in range(n))
    return Leaf(colors=colors, edges=edges, mode="laceable")


def c4_graph():
    """C4 as a bare graph: 0-1-2-3-0 with 0 and 2 black."""
    return AssembledGraph.from_edges(
        [BLACK, WHITE, BLACK, WHITE], [(0, 1), (1, 2), (2, 3), (3, 0)])


def path3_graph():
    """Path on three vertices, black endpoints."""
    return AssembledGraph.from_edges([BLACK, WHITE, BLACK], [(0, 1), (1, 2)])


def blacks_whites(g):
    blacks = [v for v in range(g.num_vertices) if g.color[v] == BLACK]
    whites = [v for v in range(g.num_vertices) if g.color[v] == WHITE]
    return blacks, whites
