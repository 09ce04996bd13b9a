"""Constructive paired disjoint-path-cover engine for bipartite welds.

``Solver`` turns a weld tree of rank r into an (r-1)-pair cover for any
choice of black sources and white targets.  The construction recurses on the
weld structure: a handful of layers are covered by child solves with
carefully chosen connector vertices, cross-matching edges stitch the child
paths together, and untouched layers are absorbed by threading a Hamiltonian
path of each one through an edge of the first path.

Every choice point is deterministic (lowest admissible id, lowest layer,
lowest pair index), so identical inputs give identical covers.  All
symmetric reductions ("swap the roles of sources and targets") run through a
single mirror wrapper that flips the pairs and reverses the resulting paths,
and every connector selection asserts its counting bound at runtime and
fails loudly if no admissible vertex exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CountingViolationError,
    HypothesisError,
    InputError,
    PaddingError,
    SolveError,
)
from .exact import _ham_local, certify_leaf
from .graph import BLACK, WHITE
from .weld import Leaf, assemble_indexed

__all__ = [
    "LayerStats",
    "SelectionState",
    "SolveTrace",
    "Solver",
    "extend_through_empty_layers",
    "layer_stats",
    "reduce_pair_count",
    "select_connector",
    "solve",
]


class SelectionState:
    """Connector bookkeeping: chosen white-side vertices and their partners."""

    def __init__(self):
        self.pairs = {}  # pair index -> (v, u)
        self._v_by_layer = {}
        self._u_by_layer = {}

    def add(self, i, v, u, layer_v, layer_u):
        self.pairs[i] = (v, u)
        self._v_by_layer.setdefault(layer_v, []).append(v)
        self._u_by_layer.setdefault(layer_u, []).append(u)

    def v_in(self, j):
        return self._v_by_layer.get(j, ())

    def u_in(self, j):
        return self._u_by_layer.get(j, ())


@dataclass
class LayerStats:
    """Per-layer endpoint bookkeeping driving the case dispatch."""

    n: int
    ell: int
    tau_s: list
    tau_t: list
    S: list  # pair indices with the source in layer j
    T: list  # pair indices with the target in layer j
    Sp: list  # source in j, target elsewhere
    Spp: list  # source and target both in j
    Tp: list  # target in j, source elsewhere
    Tpp: list
    w: list  # number of pair indices touching layer j
    full: list  # layers with w == n


def layer_stats(node, pairs):
    n = len(pairs)
    ell = node.num_layers
    tau_s = [node.layer_of(s) for s, _ in pairs]
    tau_t = [node.layer_of(t) for _, t in pairs]
    S = [[] for _ in range(ell)]
    T = [[] for _ in range(ell)]
    Sp = [[] for _ in range(ell)]
    Spp = [[] for _ in range(ell)]
    Tp = [[] for _ in range(ell)]
    Tpp = [[] for _ in range(ell)]
    w = [0] * ell
    for i in range(n):
        a, b = tau_s[i], tau_t[i]
        S[a].append(i)
        T[b].append(i)
        (Spp if a == b else Sp)[a].append(i)
        (Tpp if a == b else Tp)[b].append(i)
        w[a] += 1
        if b != a:
            w[b] += 1
    for j in range(ell):
        if (len(Spp[j]) != len(Tpp[j])
                or len(S[j]) + len(Tp[j]) != w[j]
                or len(Sp[j]) + len(T[j]) != w[j]):
            raise SolveError(f"layer bookkeeping invariant failed at layer {j}")
    full = [j for j in range(ell) if w[j] == n]
    if len(full) > 2:
        raise SolveError("more than two layers touched by every pair")
    return LayerStats(n, ell, tau_s, tau_t, S, T, Sp, Spp, Tp, Tpp, w, full)


def select_connector(colors, vertices, want_color, forbidden_sets, bound=None,
                     context=""):
    """Lowest-id vertex of ``want_color`` avoiding all forbidden sets.

    ``bound`` is the case's counting bound on the forbidden union; violating
    it (or finding no admissible vertex) raises CountingViolationError with
    the set sizes, since that would falsify the construction's inequality.
    """
    union = set()
    sizes = {}
    for name, vs in forbidden_sets.items():
        s = set(vs)
        sizes[name] = len(s)
        union |= s
    if bound is not None and len(union) > bound:
        raise CountingViolationError(
            f"{context}: forbidden union {len(union)} exceeds bound {bound} "
            f"(sizes {sizes})", sizes)
    for v in vertices:
        if colors[v] == want_color and v not in union:
            return v
    raise CountingViolationError(
        f"{context}: no admissible vertex of color {want_color} "
        f"(forbidden sizes {sizes})", sizes)


def _find_free_adjacent(adj, colors, lo, hi, used, src_color):
    """Lowest adjacent (source-colored, target-colored) pair of free vertices
    inside the id range [lo, hi)."""
    dst = 1 - src_color
    for v in range(lo, hi):
        if colors[v] != src_color or v in used:
            continue
        for w in adj[v]:
            if lo <= w < hi and colors[w] == dst and w not in used:
                return v, w
    raise PaddingError(
        f"no adjacent free opposite-color pair in range [{lo}, {hi})")


def reduce_pair_count(solver, g, pairs, k, vertex_range=None):
    """Solve an instance with fewer pairs than the given k-pair solver takes.

    Pads with adjacent free opposite-color pairs, solves at k, then splices
    the two padded paths back into the last real pair's path.  ``solver`` is
    any callable taking a k-pair list and returning a cover.
    """
    pairs = [tuple(p) for p in pairs]
    if not 1 <= len(pairs) <= k:
        raise InputError(f"need between 1 and {k} pairs, got {len(pairs)}")
    lo, hi = vertex_range if vertex_range else (0, g.num_vertices)

    def rec(ps):
        if len(ps) == k:
            return [list(p) for p in solver(ps)]
        used = {v for p in ps for v in p}
        src = g.color[ps[0][0]]
        a, b = _find_free_adjacent(g.adj, g.color, lo, hi, used, src)
        s_last, t_last = ps[-1]
        cov = rec(ps[:-1] + [(s_last, b), (a, t_last)])
        return cov[:-2] + [cov[-2] + cov[-1]]

    return rec(pairs)


class SolveTrace:
    """Recursion record: case labels, role assignments, chosen connectors."""

    def __init__(self, root):
        self.root = root

    @property
    def route(self):
        return self.root.get("route")

    @property
    def case(self):
        return self.root.get("case")

    def nodes(self):
        stack = [self.root]
        while stack:
            d = stack.pop()
            yield d
            stack.extend(d.get("children", ()))

    def to_json(self):
        return self.root


class Solver:
    """Builds covers for one weld; child covers are memoized per subtree."""

    def __init__(self, tree, oracle_bound=None, trust_leaves=False):
        self.tree = tree
        self.graph, self.root = assemble_indexed(tree)
        self.trust_leaves = trust_leaves
        self.counting_checks = 0
        self._cache = {}
        self._certify(tree, "root", oracle_bound)

    def _certify(self, tree, path, bound):
        if isinstance(tree, Leaf):
            if not certify_leaf(tree, bound=bound, trust=self.trust_leaves):
                raise HypothesisError(
                    f"{path}: leaf is not {tree.mode} "
                    f"({len(tree.colors)} vertices)")
            return
        for idx, ch in enumerate(tree.children):
            self._certify(ch, f"{path}/children[{idx}]", bound)

    # ------------------------------------------------------------------
    # public surface

    def solve(self, pairs):
        """Cover with exactly rank-1 pairs: black sources, white targets."""
        rank = self.root.rank
        if rank < 2:
            raise HypothesisError("solve needs a weld of rank >= 2")
        pairs = tuple((int(s), int(t)) for s, t in pairs)
        if len(pairs) != rank - 1:
            raise HypothesisError(
                f"rank-{rank} weld takes exactly {rank - 1} pairs, "
                f"got {len(pairs)}")
        seen = set()
        for s, t in pairs:
            for v in (s, t):
                if not 0 <= v < self.graph.num_vertices:
                    raise HypothesisError(f"endpoint {v} out of range")
                if v in seen:
                    raise HypothesisError(f"duplicate endpoint {v}")
                seen.add(v)
            if self.graph.color[s] != BLACK:
                raise HypothesisError(f"source {s} is not black")
            if self.graph.color[t] != WHITE:
                raise HypothesisError(f"target {t} is not white")
        cover, trace = self._cover(self.root, pairs)
        return [list(p) for p in cover], SolveTrace(trace)

    def solve_reduced(self, pairs):
        """Cover with 1..rank-1 pairs via adjacent-pair padding."""
        return reduce_pair_count(
            lambda ps: self.solve(ps)[0], self.graph, pairs,
            self.root.rank - 1)

    # ------------------------------------------------------------------
    # recursion core

    def _cover(self, node, pairs):
        key = (node.uid, pairs)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if node.rank == 1:
            result = self._leaf_cover(node, pairs)
        elif len(pairs) < node.rank - 1:
            result = self._reduced(node, pairs)
        elif node.rank == 2:
            result = self._rank2(node, pairs)
        else:
            result = self._inductive(node, pairs)
        cover, trace = result
        result = (tuple(tuple(p) for p in cover), trace)
        self._cache[key] = result
        return result

    def _cpath(self, node, j, a, b, kids):
        sub, tr = self._cover(node.children[j], ((a, b),))
        kids.append(tr)
        return list(sub[0])

    def _select(self, node, j, want_color, forbidden, bound, context):
        self.counting_checks += 1
        return select_connector(self.graph.color, node.child_range(j),
                                want_color, forbidden, bound, context)

    def _extend(self, node, cover, used, kids):
        """Thread a Hamiltonian path of every unused layer through an edge of
        the first path (re-splitting at the freshly inserted edge)."""
        unused = [j for j in range(node.num_layers) if j not in used]
        if not unused:
            return cover
        p1 = cover[0]
        if len(p1) < 2:
            raise SolveError("cannot extend: lead path has no edge")
        pos = 0
        for L in unused:
            u, v = p1[pos], p1[pos + 1]
            q = self._cpath(node, L, node.partner(u, L), node.partner(v, L),
                            kids)
            if len(q) < 2:
                raise SolveError("cannot extend through a single-vertex layer")
            p1 = p1[:pos + 1] + q + p1[pos + 1:]
            pos += 1
        cover[0] = p1
        return cover

    def _reduced(self, node, pairs):
        used = {v for p in pairs for v in p}
        src = self.graph.color[pairs[0][0]]
        a, b = _find_free_adjacent(self.graph.adj, self.graph.color,
                                   node.start, node.end, used, src)
        s_last, t_last = pairs[-1]
        sub, tr = self._cover(node, pairs[:-1] + ((s_last, b), (a, t_last)))
        cover = [list(p) for p in sub[:-2]]
        cover.append(list(sub[-2]) + list(sub[-1]))
        trace = {"rank": node.rank, "route": "reduce", "pad": [a, b],
                 "children": [tr]}
        return cover, trace

    def _leaf_cover(self, node, pairs):
        if len(pairs) != 1:
            raise SolveError("a rank-1 leaf covers exactly one pair")
        s, t = pairs[0]
        trace = {"rank": 1, "route": "leaf", "children": []}
        if node.size == 1:
            if s != t:
                raise SolveError("distinct endpoints on a single-vertex leaf")
            return [[s]], trace
        if s == t:
            raise SolveError("equal endpoints on a multi-vertex leaf")
        local = _ham_local(node.local_adj, s - node.start, t - node.start)
        if local is None:
            raise SolveError(
                f"leaf certification violation: no Hamiltonian path "
                f"{s}..{t} in leaf at {node.start}")
        return [[x + node.start for x in local]], trace

    def _rank2(self, node, pairs):
        (s, t) = pairs[0]
        kids = []
        if node.child_size == 1:
            # single-vertex layers weld bipartitely only into K2
            if node.num_layers != 2:
                raise SolveError("single-vertex layers with more than 2 layers")
            cover = [[s, t]]
            return cover, {"rank": 2, "route": "base_rank2", "case": "k2",
                           "children": kids}
        a, b = node.layer_of(s), node.layer_of(t)
        if a == b:
            cover = [self._cpath(node, a, s, t, kids)]
            used = {a}
            case = "same-layer"
        else:
            dst = self.graph.color[t]
            v = next(x for x in node.child_range(a)
                     if self.graph.color[x] == dst)
            u = node.partner(v, b)
            cover = [self._cpath(node, a, s, v, kids)
                     + self._cpath(node, b, u, t, kids)]
            used = {a, b}
            case = "split-layers"
        cover = self._extend(node, cover, used, kids)
        return cover, {"rank": 2, "route": "base_rank2", "case": case,
                       "children": kids}

    # ------------------------------------------------------------------
    # inductive engine

    def _inductive(self, node, pairs):
        n = len(pairs)
        st = layer_stats(node, pairs)
        if node.rank == 3:
            route = "base_rank3"
        elif node.rank == 4 and node.child_size <= 8:
            route = "base_rank4_small"
        else:
            route = "induction_step"
            if node.child_size < 4 * n - 2:
                raise HypothesisError(
                    f"induction needs layers of size >= {4 * n - 2}, "
                    f"got {node.child_size}")
        if node.num_layers < n + 1:
            raise HypothesisError("weld is missing layers")

        full = st.full
        if not full:
            cover, tr = self._case1(node, pairs, st)
        elif len(full) == 1:
            j0 = full[0]
            s_all = all(x == j0 for x in st.tau_s)
            t_all = all(x == j0 for x in st.tau_t)
            if s_all and t_all:
                cover, tr = self._case2(node, pairs, st, j0)
            elif s_all:
                cover, tr = self._case4(node, pairs, st, j0)
            elif t_all:
                cover, tr = self._mirrored(self._case4, node, pairs, j0)
            elif n == 2:
                cover, tr = self._case5_rank3(node, pairs, st, j0)
            elif route == "base_rank4_small":
                if len(st.S[j0]) >= 2:
                    cover, tr = self._case5_small(node, pairs, st, j0)
                else:
                    cover, tr = self._mirrored(self._case5_small, node, pairs,
                                               j0)
            elif len(st.T[j0]) >= 2:
                cover, tr = self._case5(node, pairs, st, j0)
            else:
                cover, tr = self._mirrored(self._case5, node, pairs, j0)
        else:
            ja, jb = full
            if (all(x == ja for x in st.tau_s)
                    and all(x == jb for x in st.tau_t)):
                args = (ja, jb)
                mixed = False
            elif (all(x == jb for x in st.tau_s)
                    and all(x == ja for x in st.tau_t)):
                args = (jb, ja)
                mixed = False
            else:
                mixed = True
            if not mixed:
                if n == 2:
                    cover, tr = self._case3_rank3(node, pairs, st, *args)
                else:
                    cover, tr = self._case3(node, pairs, st, *args)
            elif n == 2:
                cover, tr = self._case6_rank3(node, pairs, st, ja, jb)
            elif route == "base_rank4_small":
                cover, tr = self._case6_small(node, pairs, st, ja, jb)
            else:
                cover, tr = self._case6(node, pairs, st, ja, jb)
        tr["route"] = route
        tr["rank"] = node.rank
        return cover, tr

    def _mirrored(self, fn, node, pairs, *args):
        """Run a case with source/target roles swapped, undoing it after."""
        mp = tuple((t, s) for s, t in pairs)
        st = layer_stats(node, mp)
        cover, tr = fn(node, mp, st, *args)
        tr["mirrored"] = True
        return [list(reversed(p)) for p in cover], tr

    def _connector_forbidden(self, node, pairs, st, sel, i):
        """Forbidden sets for choosing pair i's connector in its source layer:
        targets already in the layer, previously chosen connectors there, and
        vertices whose cross-partner would collide in the target layer."""
        j, jt = st.tau_s[i], st.tau_t[i]
        return {
            "targets": [pairs[x][1] for x in st.T[j]],
            "connectors": sel.v_in(j),
            "partner_collisions":
                [node.partner(pairs[x][0], j) for x in st.S[jt]]
                + [node.partner(u, j) for u in sel.u_in(jt)],
        }

    def _split_layer_calls(self, node, pairs, st, sel, skip_layers, kids,
                           seg_s, seg_u, seg_same, u_override=None,
                           skip_pairs=()):
        """Child covers for every touched layer outside ``skip_layers``.

        Fills seg_s[i] (path s_i..v_i), seg_u[i] (u_i..t_i), seg_same[i]
        (s_i..t_i) with the per-pair path segments.
        """
        uo = u_override or {}
        n = len(pairs)
        for j in range(st.ell):
            if st.w[j] == 0 or j in skip_layers:
                continue
            entries = []
            for i in range(n):
                if i in skip_pairs:
                    continue
                s, t = pairs[i]
                if st.tau_s[i] == j and st.tau_t[i] == j:
                    entries.append((i, "same", (s, t)))
                elif st.tau_s[i] == j:
                    entries.append((i, "sv", (s, sel.pairs[i][0])))
                elif st.tau_t[i] == j:
                    u = uo.get(i)
                    if u is None:
                        u = sel.pairs[i][1]
                    entries.append((i, "ut", (u, t)))
            if not entries:
                continue
            sub, tr = self._cover(node.children[j],
                                  tuple(p for _, _, p in entries))
            kids.append(tr)
            for (i, kind, _), p in zip(entries, sub):
                {"same": seg_same, "sv": seg_s, "ut": seg_u}[kind][i] = list(p)

    # --- case 1: no layer is touched by every pair ---------------------

    def _case1(self, node, pairs, st):
        n = len(pairs)
        dst = self.graph.color[pairs[0][1]]
        sel = SelectionState()
        conn = []
        kids = []
        bound = 2 * (n - 1) - 2
        for i in range(n):
            if st.tau_s[i] == st.tau_t[i]:
                continue
            v = self._select(node, st.tau_s[i], dst,
                             self._connector_forbidden(node, pairs, st, sel, i),
                             bound, f"case 1, pair {i}")
            u = node.partner(v, st.tau_t[i])
            sel.add(i, v, u, st.tau_s[i], st.tau_t[i])
            conn.append([i, v, u])
        seg_s, seg_u, seg_same = {}, {}, {}
        self._split_layer_calls(node, pairs, st, sel, set(), kids,
                                seg_s, seg_u, seg_same)
        cover = []
        for i in range(n):
            if st.tau_s[i] == st.tau_t[i]:
                cover.append(seg_same[i])
            else:
                cover.append(seg_s[i] + seg_u[i])
        used = {j for j in range(st.ell) if st.w[j] > 0}
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": "1", "connectors": conn, "children": kids}

    # --- case 2: one layer holds every endpoint ------------------------

    def _case2(self, node, pairs, st, j0):
        n = len(pairs)
        last = n - 1
        kids = []
        sub, tr0 = self._cover(node.children[j0], pairs[:last])
        kids.append(tr0)
        s_n, t_n = pairs[last]
        a = next(i for i, p in enumerate(sub) if s_n in p)
        b = next(i for i, p in enumerate(sub) if t_n in p)
        cover = [list(p) for p in sub]
        if a == b:
            p = cover[a]
            ps, qt = p.index(s_n), p.index(t_n)
            e = next(j for j in range(st.ell) if j != j0)
            if ps < qt:
                v1, u1 = p[ps - 1], p[qt + 1]
                q = self._cpath(node, e, node.partner(v1, e),
                                node.partner(u1, e), kids)
                pn = p[ps:qt + 1]
                cover[a] = p[:ps] + q + p[qt + 1:]
            else:
                u1, v1 = p[qt - 1], p[ps + 1]
                q = self._cpath(node, e, node.partner(u1, e),
                                node.partner(v1, e), kids)
                pn = p[qt:ps + 1][::-1]
                cover[a] = p[:qt] + q + p[ps + 1:]
            cover.append(pn)
            used = {j0, e}
            branch = "one-path"
        else:
            free = [j for j in range(st.ell) if j != j0]
            e1, e2 = free[0], free[1]
            pa, pb = cover[a], cover[b]
            ps, qt = pa.index(s_n), pb.index(t_n)
            u1, vn, v1 = pa[ps - 2], pa[ps - 1], pa[ps + 1]
            u2, un, v2 = pb[qt - 1], pb[qt + 1], pb[qt + 2]
            two, tr2 = self._cover(node.children[e1], (
                (node.partner(v1, e1), node.partner(u1, e1)),
                (node.partner(v2, e1), node.partner(u2, e1))))
            kids.append(tr2)
            qh = self._cpath(node, e2, node.partner(vn, e2),
                             node.partner(un, e2), kids)
            cover[a] = pa[:ps - 1] + list(two[0])[::-1] + pa[ps + 1:]
            cover[b] = pb[:qt] + list(two[1])[::-1] + pb[qt + 2:]
            cover.append([s_n, vn] + qh + [un, t_n])
            used = {j0, e1, e2}
            branch = "two-paths"
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": "2", "branch": branch,
                       "layers": {"j0": j0}, "children": kids}

    # --- case 3: sources fill one layer, targets another ---------------

    def _case3(self, node, pairs, st, ja, jb):
        n = len(pairs)
        last = n - 1
        col = self.graph.color
        dst = col[pairs[0][1]]
        kids = []
        vs = []
        for v in node.child_range(ja):
            if col[v] == dst:
                vs.append(v)
                if len(vs) == last:
                    break
        sub, tr1 = self._cover(node.children[ja], tuple(
            (pairs[i][0], vs[i]) for i in range(last)))
        kids.append(tr1)
        s_n, t_n = pairs[last]
        a = next(i for i, p in enumerate(sub) if s_n in p)
        pa = list(sub[a])
        ps = pa.index(s_n)
        v1, prefix_a, tail, vn = pa[ps - 1], pa[:ps], pa[ps:], pa[-1]
        vmap = {i: vs[i] for i in range(last)}
        vmap[a] = v1
        sub2, tr2 = self._cover(node.children[jb], tuple(
            (node.partner(vmap[i], jb), pairs[i][1]) for i in range(last)))
        kids.append(tr2)
        b = next(i for i, p in enumerate(sub2) if t_n in p)
        pb = list(sub2[b])
        qt = pb.index(t_n)
        u0, un, v0 = pb[qt - 1], pb[qt + 1], pb[qt + 2]
        free = [j for j in range(st.ell) if j not in (ja, jb)]
        e1, e2 = free[0], free[1]
        q3 = self._cpath(node, e1, node.partner(u0, e1),
                         node.partner(v0, e1), kids)
        q4 = self._cpath(node, e2, node.partner(vn, e2),
                         node.partner(un, e2), kids)
        detour = pb[:qt] + q3 + pb[qt + 2:]
        cover = []
        for i in range(last):
            head = prefix_a if i == a else list(sub[i])
            tail_i = detour if i == b else list(sub2[i])
            cover.append(head + tail_i)
        cover.append(tail + q4 + [un, t_n])
        used = {ja, jb, e1, e2}
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": "3", "layers": {"sources": ja, "targets": jb,
                                               "bridges": [e1, e2]},
                       "children": kids}

    # --- case 4: sources fill one layer, targets leak out --------------

    def _case4(self, node, pairs, st, j0):
        n = len(pairs)
        col = self.graph.color
        dst = col[pairs[0][1]]
        kids = []
        split = [i for i in range(n) if st.tau_t[i] != j0]
        inside = [i for i in range(n) if st.tau_t[i] == j0]
        pair_n = split[0]
        t_inside = {pairs[i][1] for i in inside}
        pool = [v for v in node.child_range(j0)
                if col[v] == dst and v not in t_inside]
        if len(pool) < len(split) - 1:
            raise CountingViolationError(
                "case 4: not enough free white vertices in the source layer",
                {"free": len(pool), "needed": len(split) - 1})
        vmap = {}
        for i in split:
            if i != pair_n:
                vmap[i] = pool[len(vmap)]
        order = [i for i in range(n) if i != pair_n]
        slot = {i: k for k, i in enumerate(order)}
        sub, tr0 = self._cover(node.children[j0], tuple(
            (pairs[i][0], pairs[i][1] if i in inside else vmap[i])
            for i in order))
        kids.append(tr0)
        s_n = pairs[pair_n][0]
        a = order[next(k for k, p in enumerate(sub) if s_n in p)]
        pa = list(sub[slot[a]])
        ps = pa.index(s_n)
        extra_used = set()
        if a in vmap:
            branch = "on-connector-path"
            v1 = pa[ps - 1]
            tail = pa[ps:]
            vmap[a] = v1
            vmap[pair_n] = pa[-1]
            reroute = None
        else:
            branch = "on-internal-path"
            u0, vn, v0 = pa[ps - 2], pa[ps - 1], pa[ps + 1]
            vmap[pair_n] = vn
            e = next(j for j in range(st.ell) if st.w[j] == 0)
            qe = self._cpath(node, e, node.partner(u0, e),
                             node.partner(v0, e), kids)
            reroute = pa[:ps - 1] + qe + pa[ps + 1:]
            tail = [s_n, vn]
            extra_used = {e}
        seg_t = {}
        for j in range(st.ell):
            if j == j0:
                continue
            idxs = [i for i in split if st.tau_t[i] == j]
            if not idxs:
                continue
            subj, trj = self._cover(node.children[j], tuple(
                (node.partner(vmap[i], j), pairs[i][1]) for i in idxs))
            kids.append(trj)
            for i, p in zip(idxs, subj):
                seg_t[i] = list(p)
        cover = []
        for i in range(n):
            if i == pair_n:
                cover.append(tail + seg_t[pair_n])
            elif i == a and branch == "on-connector-path":
                cover.append(pa[:ps] + seg_t[a])
            elif i == a:
                cover.append(reroute)
            elif i in inside:
                cover.append(list(sub[slot[i]]))
            else:
                cover.append(list(sub[slot[i]]) + seg_t[i])
        used = {j0} | {st.tau_t[i] for i in split} | extra_used
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": "4", "branch": branch, "pair_n": pair_n,
                       "layers": {"j0": j0}, "children": kids}

    # --- case 5: one saturated layer, neither side inside it ------------

    def _case5(self, node, pairs, st, j0):
        n = len(pairs)
        col = self.graph.color
        src = col[pairs[0][0]]
        dst = 1 - src
        kids = []
        conn = []
        pair_n = next(i for i in range(n)
                      if st.tau_s[i] == j0 and st.tau_t[i] != j0)
        sel = SelectionState()
        bound = 2 * n - 3
        for i in range(n):
            if i == pair_n or st.tau_s[i] == st.tau_t[i]:
                continue
            v = self._select(node, st.tau_s[i], dst,
                             self._connector_forbidden(node, pairs, st, sel, i),
                             bound, f"case 5, pair {i}")
            u = node.partner(v, st.tau_t[i])
            sel.add(i, v, u, st.tau_s[i], st.tau_t[i])
            conn.append([i, v, u])
        entries = []
        kinds = {}
        for i in range(n):
            if i == pair_n:
                continue
            s, t = pairs[i]
            if st.tau_s[i] == j0 and st.tau_t[i] == j0:
                entries.append((i, (s, t)))
                kinds[i] = "same"
            elif st.tau_s[i] == j0:
                entries.append((i, (s, sel.pairs[i][0])))
                kinds[i] = "sv"
            elif st.tau_t[i] == j0:
                entries.append((i, (sel.pairs[i][1], t)))
                kinds[i] = "ut"
        sub, tr0 = self._cover(node.children[j0],
                               tuple(p for _, p in entries))
        kids.append(tr0)
        slot = {i: k for k, (i, _) in enumerate(entries)}
        seg_s, seg_u, seg_same = {}, {}, {}
        for (i, _), p in zip(entries, sub):
            {"same": seg_same, "sv": seg_s, "ut": seg_u}[kinds[i]][i] = list(p)
        s_n, t_n = pairs[pair_n]
        a = next(i for i, _ in entries if s_n in sub[slot[i]])
        pa = list(sub[slot[a]])
        ps = pa.index(s_n)
        u0, vn, v0 = pa[ps - 2], pa[ps - 1], pa[ps + 1]
        jt = st.tau_t[pair_n]
        zeros = [j for j in range(st.ell) if st.w[j] == 0]
        if zeros:
            branch = "a"
            e = zeros[0]
            u0e = node.partner(u0, e)
            un = self._select(node, jt, src, {
                "sources": [pairs[x][0] for x in st.S[jt]],
                "partners": sel.u_in(jt),
                "bridge_partner": [node.partner(u0e, jt)],
            }, None, f"case 5a, pair {pair_n}")
            conn.append([pair_n, None, un])
            two, tre = self._cover(node.children[e], (
                (node.partner(v0, e), u0e),
                (node.partner(vn, e), node.partner(un, e))))
            kids.append(tre)
            self._split_layer_calls(node, pairs, st, sel, {j0, e}, kids,
                                    seg_s, seg_u, seg_same,
                                    u_override={pair_n: un})
            mid = pa[:ps - 1] + list(two[0])[::-1] + pa[ps + 1:]
            pn = [s_n, vn] + list(two[1]) + seg_u[pair_n]
            used = {j for j in range(st.ell) if st.w[j] > 0} | {e}
        else:
            branch = "b"
            cand = [j for j in range(st.ell)
                    if j != j0 and not st.T[j] and st.S[j]
                    and st.S[j][0] != a]
            if not cand:
                raise SolveError("case 5b: no spare source-only layer")
            e2 = cand[0]
            pr2 = st.S[e2][0]
            x0 = self._select(node, e2, src, {
                "source": [pairs[pr2][0]],
                "target_partner": [node.partner(t_n, e2)],
            }, None, "case 5b")
            conn.append([pr2, None, x0])
            g2, trg2 = self._cover(node.children[e2], (
                (pairs[pr2][0], sel.pairs[pr2][0]),
                (x0, node.partner(u0, e2))))
            kids.append(trg2)
            gt, trgt = self._cover(node.children[jt], (
                (node.partner(v0, jt), node.partner(x0, jt)),
                (node.partner(vn, jt), t_n)))
            kids.append(trgt)
            self._split_layer_calls(node, pairs, st, sel, {j0, e2, jt}, kids,
                                    seg_s, seg_u, seg_same,
                                    skip_pairs={pair_n, pr2})
            seg_s[pr2] = list(g2[0])
            mid = (pa[:ps - 1] + list(g2[1])[::-1] + list(gt[0])[::-1]
                   + pa[ps + 1:])
            pn = [s_n, vn] + list(gt[1])
            used = set(range(st.ell))
        cover = []
        for i in range(n):
            if i == pair_n:
                cover.append(pn)
            elif i == a:
                if kinds[a] == "sv":
                    cover.append(mid + seg_u[a])
                elif kinds[a] == "ut":
                    cover.append(seg_s[a] + mid)
                else:
                    cover.append(mid)
            elif kinds[i] == "same":
                cover.append(seg_same[i])
            else:
                cover.append(seg_s[i] + seg_u[i])
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": "5", "branch": branch, "pair_n": pair_n,
                       "connectors": conn, "layers": {"j0": j0},
                       "children": kids}

    # --- case 6: two saturated layers, mixed orientation ---------------

    def _case6(self, node, pairs, st, l1, l2):
        n = len(pairs)
        col = self.graph.color
        src = col[pairs[0][0]]
        dst = 1 - src
        kids = []
        conn = []
        pair_n = next(i for i in range(n) if st.tau_s[i] == l1)
        sel = SelectionState()
        bound = 2 * n - 2
        for i in range(n):
            if i == pair_n:
                continue
            v = self._select(node, st.tau_s[i], dst,
                             self._connector_forbidden(node, pairs, st, sel, i),
                             bound, f"case 6, pair {i}")
            u = node.partner(v, st.tau_t[i])
            sel.add(i, v, u, st.tau_s[i], st.tau_t[i])
            conn.append([i, v, u])
        free = [j for j in range(st.ell) if j not in (l1, l2)]
        e1, e2 = free[0], free[1]
        entries1 = []
        kinds1 = {}
        for i in range(n):
            if i == pair_n:
                continue
            if st.tau_s[i] == l1:
                entries1.append((i, (pairs[i][0], sel.pairs[i][0])))
                kinds1[i] = "sv"
            elif st.tau_t[i] == l1:
                entries1.append((i, (sel.pairs[i][1], pairs[i][1])))
                kinds1[i] = "ut"
        sub, tr1 = self._cover(node.children[l1],
                               tuple(p for _, p in entries1))
        kids.append(tr1)
        slot1 = {i: k for k, (i, _) in enumerate(entries1)}
        s_n, t_n = pairs[pair_n]
        a = next(i for i, _ in entries1 if s_n in sub[slot1[i]])
        pa = list(sub[slot1[a]])
        ps = pa.index(s_n)
        seg_s, seg_u = {}, {}
        for (i, _), p in zip(entries1, sub):
            (seg_s if kinds1[i] == "sv" else seg_u)[i] = list(p)
        if kinds1[a] == "sv":
            branch = "a"
            v1a = pa[ps - 1]
            tail = pa[ps:]
            uN = sel.pairs[a][1]  # partner of the path's old endpoint
            entries2 = []
            kinds2 = {}
            for i in range(n):
                if st.tau_s[i] == l2 and i != pair_n:
                    entries2.append((i, (pairs[i][0], sel.pairs[i][0])))
                    kinds2[i] = "sv"
                elif st.tau_t[i] == l2 and i != a:
                    u = uN if i == pair_n else sel.pairs[i][1]
                    entries2.append((i, (u, pairs[i][1])))
                    kinds2[i] = "ut"
            sub2, tr2 = self._cover(node.children[l2],
                                    tuple(p for _, p in entries2))
            kids.append(tr2)
            slot2 = {i: k for k, (i, _) in enumerate(entries2)}
            for (i, _), p in zip(entries2, sub2):
                (seg_s if kinds2[i] == "sv" else seg_u)[i] = list(p)
            seg_s[pair_n] = tail
            t_a = pairs[a][1]
            c = next(i for i, _ in entries2 if t_a in sub2[slot2[i]])
            pc = list(sub2[slot2[c]])
            qc = pc.index(t_a)
            x_c, u1n, y_c = pc[qc - 1], pc[qc + 1], pc[qc + 2]
            q3 = self._cpath(node, e1, node.partner(v1a, e1),
                             node.partner(u1n, e1), kids)
            q4 = self._cpath(node, e2, node.partner(y_c, e2),
                             node.partner(x_c, e2), kids)
            mid_c = pc[:qc] + q4[::-1] + pc[qc + 2:]
            cover = []
            for i in range(n):
                if i == a:
                    cover.append(pa[:ps] + q3 + [u1n, t_a])
                elif i == c:
                    if kinds2[c] == "sv":
                        cover.append(mid_c + seg_u[c])
                    else:
                        cover.append(seg_s[c] + mid_c)
                else:
                    cover.append(seg_s[i] + seg_u[i])
        else:
            branch = "b"
            x0, vN, y0 = pa[ps - 2], pa[ps - 1], pa[ps + 1]
            entries2 = []
            kinds2 = {}
            for i in range(n):
                if st.tau_s[i] == l2:
                    entries2.append((i, (pairs[i][0], sel.pairs[i][0])))
                    kinds2[i] = "sv"
                elif st.tau_t[i] == l2 and i != pair_n:
                    entries2.append((i, (sel.pairs[i][1], pairs[i][1])))
                    kinds2[i] = "ut"
            sub2, tr2 = self._cover(node.children[l2],
                                    tuple(p for _, p in entries2))
            kids.append(tr2)
            slot2 = {i: k for k, (i, _) in enumerate(entries2)}
            for (i, _), p in zip(entries2, sub2):
                (seg_s if kinds2[i] == "sv" else seg_u)[i] = list(p)
            ii = next(i for i, _ in entries2 if t_n in sub2[slot2[i]])
            pj = list(sub2[slot2[ii]])
            qj = pj.index(t_n)
            x_i, un2, y_i = pj[qj - 1], pj[qj + 1], pj[qj + 2]
            yi4 = node.partner(y_i, e2)
            yn = self._select(node, e1, dst, {
                "bridge_partner": [node.partner(x0, e1)],
                "cross_partner": [node.partner(yi4, e1)],
            }, None, "case 6b")
            conn.append([pair_n, yn, None])
            xn = node.partner(yn, e2)
            ge1, tr3 = self._cover(node.children[e1], (
                (node.partner(vN, e1), yn),
                (node.partner(y0, e1), node.partner(x0, e1))))
            kids.append(tr3)
            ge2, tr4 = self._cover(node.children[e2], (
                (xn, node.partner(un2, e2)),
                (yi4, node.partner(x_i, e2))))
            kids.append(tr4)
            mid_a = pa[:ps - 1] + list(ge1[1])[::-1] + pa[ps + 1:]
            mid_i = pj[:qj] + list(ge2[1])[::-1] + pj[qj + 2:]
            cover = []
            for i in range(n):
                if i == pair_n:
                    cover.append([s_n, vN] + list(ge1[0]) + list(ge2[0])
                                 + [un2, t_n])
                elif i == a and a == ii:
                    cover.append(mid_i + mid_a)
                elif i == a:
                    cover.append(seg_s[a] + mid_a)
                elif i == ii:
                    if kinds2[ii] == "sv":
                        cover.append(mid_i + seg_u[ii])
                    else:
                        cover.append(seg_s[ii] + mid_i)
                else:
                    cover.append(seg_s[i] + seg_u[i])
        used = {l1, l2, e1, e2}
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": "6", "branch": branch, "pair_n": pair_n,
                       "connectors": conn,
                       "layers": {"l1": l1, "l2": l2, "bridges": [e1, e2]},
                       "children": kids}

    # --- bespoke rank-3 cases (two pairs, possibly tiny layers) ---------

    def _case3_rank3(self, node, pairs, st, ja, jb):
        col = self.graph.color
        dst = col[pairs[0][1]]
        kids = []
        sA, tA = pairs[0]
        sB, tB = pairs[1]
        v_pick = next(v for v in node.child_range(ja) if col[v] == dst)
        p1 = self._cpath(node, ja, sA, v_pick, kids)
        ps = p1.index(sB)
        v1, prefix, tail = p1[ps - 1], p1[:ps], p1[ps:]
        v2s = node.partner(p1[-1], jb)
        q1 = self._cpath(node, jb, node.partner(v1, jb), tA, kids)
        i2, it = q1.index(v2s), q1.index(tB)
        e = next(j for j in range(st.ell) if j not in (ja, jb))
        if i2 < it:
            v0, u0 = q1[i2 - 1], q1[it + 1]
            qe = self._cpath(node, e, node.partner(v0, e),
                             node.partner(u0, e), kids)
            pa = prefix + q1[:i2] + qe + q1[it + 1:]
            pb = tail + q1[i2:it + 1]
        else:
            u0, v0 = q1[it - 1], q1[i2 + 1]
            qe = self._cpath(node, e, node.partner(u0, e),
                             node.partner(v0, e), kids)
            pa = prefix + q1[:it] + qe + q1[i2 + 1:]
            pb = tail + q1[it:i2 + 1][::-1]
        cover = self._extend(node, [pa, pb], {ja, jb, e}, kids)
        return cover, {"case": "3", "layers": {"sources": ja, "targets": jb,
                                               "bridge": e},
                       "children": kids}

    def _case5_rank3(self, node, pairs, st, j0):
        kids = []
        X = next(i for i in (0, 1) if st.tau_s[i] == j0)
        Y = 1 - X
        sX, tX = pairs[X]
        sY, tY = pairs[Y]
        jt = st.tau_t[X]
        js = st.tau_s[Y]
        if node.child_size == 2:
            branch = "two-vertex-layers"
            u = next(v for v in node.child_range(jt) if v != tX)
            w = next(v for v in node.child_range(js) if v != sY)
            pX = [sX, w, u, tX]
            pY = [sY, tY]
        else:
            branch = "even-layers"
            p1 = self._cpath(node, j0, sX, tY, kids)
            v, u = p1[1], p1[2]
            pX = p1[:2] + self._cpath(node, jt, node.partner(v, jt), tX, kids)
            pY = self._cpath(node, js, sY, node.partner(u, js), kids) + p1[2:]
        cover = [None, None]
        cover[X] = pX
        cover[Y] = pY
        cover = self._extend(node, cover, {j0, jt, js}, kids)
        return cover, {"case": "5", "branch": branch,
                       "layers": {"j0": j0}, "children": kids}

    def _case6_rank3(self, node, pairs, st, l1, l2):
        kids = []
        sX, tX = pairs[0]
        sY, tY = pairs[1]
        ja, jb = st.tau_s[0], st.tau_t[0]
        uX = node.partner(tX, ja)
        p1 = self._cpath(node, ja, sX, tY, kids)
        pos = p1.index(uX)
        v2 = p1[pos + 1]
        p2 = self._cpath(node, jb, sY, tX, kids)
        u2 = p2[-2]
        e = next(j for j in range(st.ell) if j not in (ja, jb))
        qe = self._cpath(node, e, node.partner(u2, e),
                         node.partner(v2, e), kids)
        pX = p1[:pos + 1] + [tX]
        pY = p2[:-1] + qe + p1[pos + 1:]
        cover = self._extend(node, [pX, pY], {ja, jb, e}, kids)
        return cover, {"case": "6", "layers": {"l1": l1, "l2": l2},
                       "children": kids}

    # --- bespoke rank-4 cases with small (6 or 8 vertex) layers ----------

    def _case5_small(self, node, pairs, st, j0):
        col = self.graph.color
        src = col[pairs[0][0]]
        dst = 1 - src
        kids = []
        srcs_in = [i for i in range(3) if st.tau_s[i] == j0]
        third = next(i for i in range(3) if st.tau_s[i] != j0)
        s3, t3 = pairs[third]
        inside_t = [i for i in srcs_in if st.tau_t[i] == j0]
        cover = [None, None, None]
        if inside_t:
            p1i = inside_t[0]
            p2i = next(i for i in srcs_in if i != p1i)
            s2, t2 = pairs[p2i]
            jb = st.tau_t[p2i]
            sub, tr = self._cover(node.children[j0], (
                (pairs[p1i][0], pairs[p1i][1]), (s2, t3)))
            kids.append(tr)
            p2 = list(sub[1])
            v3, rest3 = p2[1], p2[1:]
            if st.tau_s[third] == jb:
                branch = "5.1a"
                v3s = node.partner(v3, jb)
                q2 = self._cpath(node, jb, s3, t2, kids)
                pos = q2.index(v3s)
                v2 = q2[pos + 1]
                e = next(j for j in range(st.ell) if j not in (j0, jb))
                qe = self._cpath(node, e, node.partner(s2, e),
                                 node.partner(v2, e), kids)
                P2 = [s2] + qe + q2[pos + 1:]
                P3 = q2[:pos + 1] + rest3
                used = {j0, jb, e}
            else:
                branch = "5.1b"
                jc = st.tau_s[third]
                v2 = node.partner(s2, jb)
                q2 = self._cpath(node, jb, node.partner(v3, jb), t2, kids)
                pos = q2.index(v2)
                u3 = q2[pos - 1]
                q3 = self._cpath(node, jc, s3, node.partner(u3, jc), kids)
                P2 = [s2] + q2[pos:]
                P3 = q3 + q2[:pos][::-1] + rest3
                used = {j0, jb, jc}
            cover[p1i] = list(sub[0])
            cover[p2i] = P2
            cover[third] = P3
        else:
            p1i, p2i = srcs_in
            jb = st.tau_s[third]
            if st.tau_t[p2i] == jb:
                p1i, p2i = p2i, p1i
            s1, t1 = pairs[p1i]
            s2, t2 = pairs[p2i]
            if st.tau_t[p1i] == jb:
                branch = "5.2a"
                jc = st.tau_t[p2i]
                v1 = self._select(node, j0, dst, {
                    "target": [t3],
                    "s3_partner": [node.partner(s3, j0)],
                }, None, "case 5.2a")
                u1 = node.partner(v1, jb)
                sub, tr = self._cover(node.children[j0], ((s1, v1), (s2, t3)))
                kids.append(tr)
                p2 = list(sub[1])
                v3, rest3 = p2[1], p2[1:]
                v3s = node.partner(v3, jc)
                u3 = self._select(node, jc, src, {
                    "v3_partner": [v3s],
                    "t1_partner": [node.partner(t1, jc)],
                }, None, "case 5.2a")
                subb, trb = self._cover(node.children[jb], (
                    (u1, t1), (s3, node.partner(u3, jb))))
                kids.append(trb)
                qc = self._cpath(node, jc, v3s, t2, kids)
                pos = qc.index(u3)
                v2 = qc[pos + 1]
                e = next(j for j in range(st.ell) if j not in (j0, jb, jc))
                qe = self._cpath(node, e, node.partner(s2, e),
                                 node.partner(v2, e), kids)
                P1 = list(sub[0]) + list(subb[0])
                P2 = [s2] + qe + qc[pos + 1:]
                P3 = list(subb[1]) + qc[:pos + 1][::-1] + rest3
                used = {j0, jb, jc, e}
            elif st.tau_t[p1i] == st.tau_t[p2i]:
                branch = "5.2bi"
                jc = st.tau_t[p1i]
                v1 = self._select(node, j0, dst, {"target": [t3]}, None,
                                  "case 5.2bi")
                u1 = node.partner(v1, jc)
                sub, tr = self._cover(node.children[j0], ((s1, v1), (s2, t3)))
                kids.append(tr)
                p2 = list(sub[1])
                v3, rest3 = p2[1], p2[1:]
                subc, trc = self._cover(node.children[jc], (
                    (u1, t1), (node.partner(v3, jc), t2)))
                kids.append(trc)
                pc2 = list(subc[1])
                u3 = pc2[-2]
                qb = self._cpath(node, jb, s3, node.partner(u3, jb), kids)
                e = next(j for j in range(st.ell) if j not in (j0, jb, jc))
                qe = self._cpath(node, e, node.partner(s2, e),
                                 node.partner(t2, e), kids)
                P1 = list(sub[0]) + list(subc[0])
                P2 = [s2] + qe + [t2]
                P3 = qb + pc2[:-1][::-1] + rest3
                used = {j0, jb, jc, e}
            else:
                branch = "5.2bii"
                jc = st.tau_t[p1i]
                jd = st.tau_t[p2i]
                v1 = self._select(node, j0, dst, {"target": [t3]}, None,
                                  "case 5.2bii")
                u1 = node.partner(v1, jc)
                sub, tr = self._cover(node.children[j0], ((s1, v1), (s2, t3)))
                kids.append(tr)
                p2 = list(sub[1])
                v3, rest3 = p2[1], p2[1:]
                v2 = node.partner(s2, jd)
                qd = self._cpath(node, jd, node.partner(v3, jd), t2, kids)
                pos = qd.index(v2)
                u3 = qd[pos - 1]
                qb = self._cpath(node, jb, s3, node.partner(u3, jb), kids)
                qc = self._cpath(node, jc, u1, t1, kids)
                P1 = list(sub[0]) + qc
                P2 = [s2] + qd[pos:]
                P3 = qb + qd[:pos][::-1] + rest3
                used = {j0, jb, jc, jd}
            cover[p1i] = P1
            cover[p2i] = P2
            cover[third] = P3
        cover = self._extend(node, cover, used, kids)
        return cover, {"case": branch, "layers": {"j0": j0},
                       "children": kids}

    def _case6_small(self, node, pairs, st, l1, l2):
        col = self.graph.color
        dst = 1 - col[pairs[0][0]]
        kids = []
        j1, j2 = (l1, l2) if len(st.S[l1]) == 2 else (l2, l1)
        a1, a2 = st.S[j1]
        third = next(i for i in range(3) if i not in (a1, a2))
        s1, t1 = pairs[a1]
        s2, t2 = pairs[a2]
        s3, t3 = pairs[third]
        v1 = self._select(node, j1, dst, {
            "target": [t3],
            "s3_partner": [node.partner(s3, j1)],
        }, None, "case 6 small")
        u1 = node.partner(v1, j2)
        sub1, tr1 = self._cover(node.children[j1], ((s1, v1), (s2, t3)))
        kids.append(tr1)
        sub2, tr2 = self._cover(node.children[j2], ((u1, t1), (s3, t2)))
        kids.append(tr2)
        p2 = list(sub1[1])
        v3, rest3 = p2[1], p2[1:]
        q2 = list(sub2[1])
        u3, pre3 = q2[-2], q2[:-1]
        free = [j for j in range(st.ell) if j not in (j1, j2)]
        e1, e2 = free[0], free[1]
        qe1 = self._cpath(node, e1, node.partner(s2, e1),
                          node.partner(t2, e1), kids)
        qe2 = self._cpath(node, e2, node.partner(u3, e2),
                          node.partner(v3, e2), kids)
        cover = [None, None, None]
        cover[a1] = list(sub1[0]) + list(sub2[0])
        cover[a2] = [s2] + qe1 + [t2]
        cover[third] = pre3 + qe2 + rest3
        cover = self._extend(node, cover, {j1, j2, e1, e2}, kids)
        return cover, {"case": "6", "layers": {"l1": j1, "l2": j2,
                                               "bridges": [e1, e2]},
                       "children": kids}


def extend_through_empty_layers(solver, cover, used_layers):
    """Splice Hamiltonian paths of the unused top-level layers into the first
    path of ``cover``; layers in ``used_layers`` are left alone."""
    kids = []
    return solver._extend(solver.root, [list(p) for p in cover],
                          set(used_layers), kids)


def solve(tree, pairs, oracle_bound=None, trust_leaves=False):
    """One-shot convenience: build a Solver and cover the given pairs."""
    return Solver(tree, oracle_bound=oracle_bound,
                  trust_leaves=trust_leaves).solve(pairs)
