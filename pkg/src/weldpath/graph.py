"""Flat bipartite graph representation with coloring, layers, and exports.

Vertices are dense integers ``0..n-1``.  Color 0 is black (the partite set
holding path sources), color 1 is white.  Top-level layers occupy contiguous
id ranges so the layer of a vertex is a single array lookup.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

from .errors import InputError

BLACK = 0
WHITE = 1

COLOR_NAMES = {BLACK: "black", WHITE: "white"}
COLOR_VALUES = {"black": BLACK, "white": WHITE}


@dataclass(frozen=True)
class Coloring:
    black_count: int
    white_count: int


@dataclass(frozen=True)
class AssembledGraph:
    """Immutable flattened graph: sorted adjacency, colors, layer index."""

    num_vertices: int
    adj: tuple  # tuple[tuple[int, ...], ...], each sorted ascending
    color: tuple  # tuple[int, ...]
    layer_of: tuple  # tuple[int, ...]
    layer_ranges: tuple  # tuple[tuple[int, int], ...], [start, end) per layer
    _adj_sets: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_edges(cls, colors, edges, layer_of=None):
        """Build a graph directly from color and edge lists (mostly for tests).

        No bipartiteness check is done here; use is_bipartite_properly_colored.
        """
        n = len(colors)
        lists = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad edge ({u}, {v})")
            lists[u].append(v)
            lists[v].append(u)
        adj = tuple(tuple(sorted(set(nb))) for nb in lists)
        if layer_of is None:
            layer_of = (0,) * n
            ranges = ((0, n),) if n else ()
        else:
            layer_of = tuple(layer_of)
            ranges = []
            start = 0
            for i in range(1, n + 1):
                if i == n or layer_of[i] != layer_of[start]:
                    ranges.append((start, i))
                    start = i
            ranges = tuple(ranges)
        return cls(n, adj, tuple(colors), layer_of, ranges)

    def neighbors(self, v):
        """Sorted neighbor ids of ``v``."""
        if not 0 <= v < self.num_vertices:
            raise InputError(f"vertex {v} out of range 0..{self.num_vertices - 1}")
        return self.adj[v]

    def has_edge(self, u, v):
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def adj_set(self, v):
        # lazily cached; shared by the verifier's O(V+E) pass
        s = self._adj_sets.get(v)
        if s is None:
            s = frozenset(self.adj[v])
            self._adj_sets[v] = s
        return s

    def edges(self):
        for u in range(self.num_vertices):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def num_edges(self):
        return sum(len(row) for row in self.adj) // 2

    def coloring(self):
        blacks = sum(1 for c in self.color if c == BLACK)
        return Coloring(blacks, self.num_vertices - blacks)

    def layer_range(self, j):
        return self.layer_ranges[j]

    @property
    def num_layers(self):
        return len(self.layer_ranges)


def is_bipartite_properly_colored(g):
    """True iff every edge of ``g`` joins a black vertex to a white one."""
    color = g.color
    for u in range(g.num_vertices):
        cu = color[u]
        for v in g.adj[u]:
            if color[v] == cu:
                return False
    return True


def is_equitable(g):
    """True iff the two color classes have equal size."""
    c = g.coloring()
    return c.black_count == c.white_count


def is_balanced(g, pairs):
    """Evaluate the endpoint-balance equation for the given (s, t) pairs.

    Checks |(S∪T)∩black| - |(S∪T)∩white| == 2*(|black| - |white|), the
    necessary condition for a paired cover to exist in a bipartite graph.
    """
    seen = set()
    for s, t in pairs:
        for v in (s, t):
            if not 0 <= v < g.num_vertices:
                raise InputError(f"endpoint {v} out of range")
            if v in seen:
                raise InputError(f"duplicate endpoint {v}")
            seen.add(v)
    blacks = sum(1 for v in seen if g.color[v] == BLACK)
    whites = len(seen) - blacks
    c = g.coloring()
    return blacks - whites == 2 * (c.black_count - c.white_count)


def to_dot(g):
    """Render the graph as a single undirected DOT ``graph`` block."""
    lines = ["graph weld {"]
    for v in range(g.num_vertices):
        lines.append(
            f'  {v} [color={COLOR_NAMES[g.color[v]]}, layer={g.layer_of[v]}];'
        )
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_doc(g):
    """Plain-dict form: {num_vertices, colors, edges, layer_of}."""
    return {
        "num_vertices": g.num_vertices,
        "colors": [COLOR_NAMES[c] for c in g.color],
        "edges": [[u, v] for u, v in g.edges()],
        "layer_of": list(g.layer_of),
    }
