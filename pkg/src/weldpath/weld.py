"""Weld-tree model, generators, assembly, and the weld-spec file format.

A weld tree describes a graph built recursively: leaves are explicit rank-1
graphs, and a rank-r node welds ``l >= r`` equal-size rank-(r-1) trees with a
perfect matching between every pair of children.  Assembly flattens the tree
into an AssembledGraph with contiguous vertex ranges per subtree, plus an
index (AssembledNode) that the solver uses for layer and matching lookups.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ConstructionError, InputError, WeldSpecError
from .graph import BLACK, WHITE, COLOR_NAMES, COLOR_VALUES, AssembledGraph

MODE_LACEABLE = "laceable"
MODE_CONNECTED = "connected"

TRANSPOSITION_RANK_GUARD = 7


@dataclass(frozen=True)
class Leaf:
    """Rank-1 graph: explicit colors and local edges.

    ``mode`` records the capability the leaf is supposed to have:
    "laceable" (Hamiltonian path between every black-white pair) or
    "connected" (between every pair; used for single-vertex leaves).
    """

    colors: tuple
    edges: tuple
    mode: str = MODE_LACEABLE


@dataclass(frozen=True)
class Node:
    """Weld of ``children`` with one matching per unordered child pair.

    ``matchings[(i, j)]`` (i < j) maps each local vertex id of child i to its
    matched local id in child j.
    """

    children: tuple
    matchings: dict


def tree_rank(tree):
    if isinstance(tree, Leaf):
        return 1
    return tree_rank(tree.children[0]) + 1


def tree_size(tree):
    if isinstance(tree, Leaf):
        return len(tree.colors)
    return len(tree.children) * tree_size(tree.children[0])


def tree_colors(tree):
    """Colors of the tree's vertices in canonical (flattened) order."""
    if isinstance(tree, Leaf):
        return tree.colors
    out = []
    for ch in tree.children:
        out.extend(tree_colors(ch))
    return tuple(out)


def validate_tree(tree, path="root"):
    """Check the weld-tree invariants; raise WeldSpecError naming the node."""
    if isinstance(tree, Leaf):
        m = len(tree.colors)
        if m == 0:
            raise WeldSpecError("leaf has no vertices", path)
        if any(c not in (BLACK, WHITE) for c in tree.colors):
            raise WeldSpecError("leaf colors must be black/white", path)
        if m != 1 and m % 2 != 0:
            raise WeldSpecError(
                f"leaf must be a single vertex or have even order, got {m}", path
            )
        if tree.mode not in (MODE_LACEABLE, MODE_CONNECTED):
            raise WeldSpecError(f"unknown leaf mode {tree.mode!r}", path)
        seen = set()
        for e in tree.edges:
            u, v = e
            if not (0 <= u < m and 0 <= v < m) or u == v:
                raise WeldSpecError(f"bad leaf edge {e}", path)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise WeldSpecError(f"duplicate leaf edge {e}", path)
            seen.add(key)
        return
    if not isinstance(tree, Node):
        raise WeldSpecError(f"not a weld tree node: {type(tree).__name__}", path)
    ell = len(tree.children)
    if ell < 2:
        raise WeldSpecError("node needs at least two children", path)
    ranks = [tree_rank(ch) for ch in tree.children]
    if len(set(ranks)) != 1:
        raise WeldSpecError(f"children have mixed ranks {sorted(set(ranks))}", path)
    rank = ranks[0] + 1
    if ell < rank:
        raise WeldSpecError(
            f"rank-{rank} node needs at least {rank} children, got {ell}", path
        )
    sizes = [tree_size(ch) for ch in tree.children]
    if len(set(sizes)) != 1:
        raise WeldSpecError(f"children have unequal sizes {sorted(set(sizes))}", path)
    m = sizes[0]
    want_keys = {(i, j) for i in range(ell) for j in range(i + 1, ell)}
    if set(tree.matchings.keys()) != want_keys:
        raise WeldSpecError("matchings must cover every child pair (i, j), i<j", path)
    for (i, j), arr in tree.matchings.items():
        if len(arr) != m:
            raise WeldSpecError(f"matching ({i},{j}) has length {len(arr)} != {m}", path)
        if sorted(arr) != list(range(m)):
            raise WeldSpecError(f"matching ({i},{j}) is not a bijection", path)
    for idx, ch in enumerate(tree.children):
        validate_tree(ch, f"{path}/children[{idx}]")


@dataclass
class AssembledNode:
    """Index node over an assembled tree: global ranges and matchings."""

    uid: int
    start: int
    end: int
    rank: int
    children: tuple = ()
    child_size: int = 0
    cross: dict = field(default_factory=dict)  # (i, j) -> tuple of global ids
    mode: str = ""
    local_adj: tuple = ()  # leaves only

    @property
    def size(self):
        return self.end - self.start

    @property
    def num_layers(self):
        return len(self.children)

    def layer_of(self, v):
        return (v - self.start) // self.child_size

    def child_range(self, j):
        ch = self.children[j]
        return range(ch.start, ch.end)

    def partner(self, v, j):
        """The unique cross-neighbor of ``v`` in child ``j``."""
        i = self.layer_of(v)
        return self.cross[(i, j)][v - self.children[i].start]

    def leaves(self):
        if not self.children:
            yield self
        else:
            for ch in self.children:
                for leaf in ch.leaves():
                    yield leaf


def assemble_indexed(tree):
    """Flatten a weld tree; returns (AssembledGraph, AssembledNode index)."""
    validate_tree(tree)
    n = tree_size(tree)
    colors = [0] * n
    lists = [[] for _ in range(n)]
    counter = [0]

    def build(t, start, path):
        uid = counter[0]
        counter[0] += 1
        if isinstance(t, Leaf):
            m = len(t.colors)
            for k in range(m):
                colors[start + k] = t.colors[k]
            for u, v in t.edges:
                if t.colors[u] == t.colors[v]:
                    raise ConstructionError(
                        f"{path}: leaf edge ({u},{v}) joins same-colored vertices"
                    )
                lists[start + u].append(start + v)
                lists[start + v].append(start + u)
            ladj = [[] for _ in range(m)]
            for u, v in t.edges:
                ladj[u].append(v)
                ladj[v].append(u)
            return AssembledNode(
                uid, start, start + m, 1, mode=t.mode,
                local_adj=tuple(tuple(sorted(r)) for r in ladj),
            )
        csize = tree_size(t.children[0])
        kids = []
        off = start
        for idx, ch in enumerate(t.children):
            kids.append(build(ch, off, f"{path}/children[{idx}]"))
            off += csize
        cross = {}
        for (i, j), arr in sorted(t.matchings.items()):
            fwd = [0] * csize
            bwd = [0] * csize
            for vi, vj in enumerate(arr):
                gu = kids[i].start + vi
                gv = kids[j].start + vj
                if colors[gu] == colors[gv]:
                    raise ConstructionError(
                        f"{path}: matching ({i},{j}) pairs same-colored vertices "
                        f"(local {vi} of layer {i} with local {vj} of layer {j})"
                    )
                fwd[vi] = gv
                bwd[vj] = gu
                lists[gu].append(gv)
                lists[gv].append(gu)
            cross[(i, j)] = tuple(fwd)
            cross[(j, i)] = tuple(bwd)
        rank = kids[0].rank + 1
        return AssembledNode(
            uid, start, off, rank,
            children=tuple(kids), child_size=csize, cross=cross,
        )

    root = build(tree, 0, "root")
    adj = tuple(tuple(sorted(row)) for row in lists)
    if root.children:
        layer_of = []
        ranges = []
        for j, ch in enumerate(root.children):
            layer_of.extend([j] * ch.size)
            ranges.append((ch.start, ch.end))
    else:
        layer_of = [0] * n
        ranges = [(0, n)]
    g = AssembledGraph(n, adj, tuple(colors), tuple(layer_of), tuple(ranges))
    return g, root


def assemble(tree):
    """Flatten a weld tree into an AssembledGraph."""
    return assemble_indexed(tree)[0]


# ---------------------------------------------------------------------------
# generators


def complete_bipartite_leaf(m):
    """K_{m,m} as a rank-1 leaf: ids 0..m-1 black, m..2m-1 white."""
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    colors = (BLACK,) * m + (WHITE,) * m
    edges = tuple((b, m + w) for b in range(m) for w in range(m))
    return Leaf(colors=colors, edges=edges, mode=MODE_LACEABLE)


def _perm_order(symbols):
    """Canonical vertex order: group by last entry ascending, recursively.

    This keeps every sub-layer on a contiguous id range at every depth.
    """
    if len(symbols) == 1:
        return [symbols]
    out = []
    for x in symbols:  # symbols kept sorted ascending
        rest = tuple(y for y in symbols if y != x)
        out.extend(p + (x,) for p in _perm_order(rest))
    return out


def _parity_color(word):
    inv = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j]:
                inv += 1
    return BLACK if inv % 2 == 0 else WHITE


def transposition_graph(n):
    """Weld tree of the Cayley graph of S_n under all transpositions.

    Layer i of a rank-r subtree holds the arrangements with the i-th smallest
    unused symbol in the last position; cross edges swap the last position
    with the position holding the other layer's symbol.  Colors follow
    permutation parity (even = black).  Guarded to n <= 7.
    """
    if not 1 <= n <= TRANSPOSITION_RANK_GUARD:
        raise InputError(f"n must be in 1..{TRANSPOSITION_RANK_GUARD}, got {n}")

    def build(symbols, suffix):
        if len(symbols) == 1:
            return Leaf(colors=(_parity_color(symbols + suffix),), edges=(),
                        mode=MODE_CONNECTED)
        children = []
        words = []
        for x in symbols:
            rest = tuple(y for y in symbols if y != x)
            children.append(build(rest, (x,) + suffix))
            words.append(_perm_order(rest))
        index = [{w: k for k, w in enumerate(ws)} for ws in words]
        matchings = {}
        ell = len(symbols)
        for i in range(ell):
            xi = symbols[i]
            for j in range(i + 1, ell):
                xj = symbols[j]
                arr = []
                for w in words[i]:
                    c = w.index(xj)
                    arr.append(index[j][w[:c] + (xi,) + w[c + 1:]])
                # the decomposition must yield a perfect matching; re-check it
                if sorted(arr) != list(range(len(arr))):
                    raise ConstructionError(
                        f"cross edges between layers {i} and {j} are not a matching"
                    )
                for vi, vj in enumerate(arr):
                    cu = _parity_color(words[i][vi] + (xi,) + suffix)
                    cv = _parity_color(words[j][vj] + (xj,) + suffix)
                    if cu == cv:
                        raise ConstructionError(
                            f"cross edge between layers {i} and {j} keeps parity"
                        )
                matchings[(i, j)] = tuple(arr)
        return Node(children=tuple(children), matchings=matchings)

    return build(tuple(range(1, n + 1)), ())


def random_matchings(children, seed):
    """Seeded color-respecting random matchings for every child pair.

    Blacks of child i are matched to uniformly shuffled whites of child j and
    vice versa; requires equitable children of equal size.
    """
    return _random_matchings(children, random.Random(seed))


def _random_matchings(children, rng):
    sizes = {tree_size(ch) for ch in children}
    if len(sizes) != 1:
        raise ConstructionError(f"children have unequal sizes {sorted(sizes)}")
    colorings = [tree_colors(ch) for ch in children]
    blacks = []
    whites = []
    for cols in colorings:
        b = [k for k, c in enumerate(cols) if c == BLACK]
        w = [k for k, c in enumerate(cols) if c == WHITE]
        if len(b) != len(w):
            raise ConstructionError(
                f"child is not equitable ({len(b)} black, {len(w)} white)"
            )
        blacks.append(b)
        whites.append(w)
    m = sizes.pop()
    out = {}
    for i in range(len(children)):
        for j in range(i + 1, len(children)):
            arr = [0] * m
            wj = list(whites[j])
            rng.shuffle(wj)
            for b, w in zip(blacks[i], wj):
                arr[b] = w
            bj = list(blacks[j])
            rng.shuffle(bj)
            for w, b in zip(whites[i], bj):
                arr[w] = b
            out[(i, j)] = tuple(arr)
    return out


def kmm_weld(rank, m, layers, seed):
    """Random weld tree of K_{m,m} leaves: ``layers`` children per node."""
    if rank < 1:
        raise InputError(f"rank must be >= 1, got {rank}")
    if rank > 1 and layers < max(2, rank):
        raise InputError(f"rank-{rank} weld needs at least {max(2, rank)} layers")
    rng = random.Random(seed)

    def build(r):
        if r == 1:
            return complete_bipartite_leaf(m)
        children = tuple(build(r - 1) for _ in range(layers))
        return Node(children=children,
                    matchings=_random_matchings(children, rng))

    return build(rank)


# ---------------------------------------------------------------------------
# weld-spec documents


def serialize_weld_spec(tree):
    """Weld tree -> plain JSON-ready dict."""
    if isinstance(tree, Leaf):
        return {
            "rank": 1,
            "colors": [COLOR_NAMES[c] for c in tree.colors],
            "edges": [[u, v] for u, v in tree.edges],
            "mode": tree.mode,
        }
    return {
        "rank": tree_rank(tree),
        "children": [serialize_weld_spec(ch) for ch in tree.children],
        "matchings": {
            f"{i}-{j}": list(arr) for (i, j), arr in sorted(tree.matchings.items())
        },
    }


def parse_weld_spec(doc):
    """Plain dict -> weld tree; raises WeldSpecError with a node path."""

    def parse(d, path):
        if not isinstance(d, dict):
            raise WeldSpecError("node must be an object", path)
        rank = d.get("rank")
        if rank == 1:
            try:
                colors = tuple(COLOR_VALUES[c] for c in d["colors"])
            except (KeyError, TypeError):
                raise WeldSpecError("leaf needs a colors list of black/white", path)
            edges = d.get("edges", [])
            try:
                edges = tuple((int(u), int(v)) for u, v in edges)
            except (TypeError, ValueError):
                raise WeldSpecError("leaf edges must be [u, v] pairs", path)
            return Leaf(colors=colors, edges=edges,
                        mode=d.get("mode", MODE_LACEABLE))
        if "children" not in d:
            raise WeldSpecError("node needs a children list", path)
        children = tuple(
            parse(ch, f"{path}/children[{k}]") for k, ch in enumerate(d["children"])
        )
        raw = d.get("matchings", {})
        matchings = {}
        for key, arr in raw.items():
            try:
                i, j = (int(x) for x in key.split("-"))
            except ValueError:
                raise WeldSpecError(f"bad matching key {key!r}", path)
            if not 0 <= i < j < len(children):
                raise WeldSpecError(f"matching key {key!r} out of range", path)
            matchings[(i, j)] = tuple(int(x) for x in arr)
        node = Node(children=children, matchings=matchings)
        declared = rank
        if declared is not None and declared != tree_rank(node):
            raise WeldSpecError(
                f"declared rank {declared} != derived rank {tree_rank(node)}", path
            )
        return node

    tree = parse(doc, "root")
    validate_tree(tree)
    return tree
