"""Exponential-time exact solvers: the rank-1 Hamiltonian-path engine and the
small-instance oracle used to cross-validate the constructive solver.

All searches explore neighbors in ascending id order, so identical inputs
give identical outputs.  Pruning is limited to connectivity facts that can
never change a found/absent answer.
"""

from __future__ import annotations

import os

from .errors import InputError, OracleBoundError
from .graph import BLACK, WHITE
from .weld import Leaf, MODE_CONNECTED, MODE_LACEABLE

DEFAULT_ORACLE_BOUND = 16
ORACLE_BOUND_ENV = "WELDPATH_ORACLE_BOUND"


def effective_oracle_bound(bound=None):
    if bound is not None:
        return bound
    env = os.environ.get(ORACLE_BOUND_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{ORACLE_BOUND_ENV} must be an integer, got {env!r}")
    return DEFAULT_ORACLE_BOUND


def _ham_local(adj, s, t):
    """Hamiltonian path s..t over local adjacency lists, or None.

    Deterministic lowest-id-first backtracking; ``t`` may only be entered as
    the final vertex.
    """
    n = len(adj)
    if n == 1:
        return [s] if s == t else None
    if s == t:
        return None
    path = [s]
    visited = [False] * n
    visited[s] = True

    def bt(cur):
        if len(path) == n:
            return cur == t
        for w in adj[cur]:
            if visited[w] or (w == t and len(path) != n - 1):
                continue
            visited[w] = True
            path.append(w)
            if bt(w):
                return True
            visited[w] = False
            path.pop()
        return False

    return path if bt(s) else None


def ham_path_between(g, s, t):
    """Hamiltonian path of ``g`` from s to t, or None if none exists.

    With a single-vertex graph, s == t returns the trivial one-vertex path.
    """
    n = g.num_vertices
    for v in (s, t):
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range")
    return _ham_local(g.adj, s, t)


def _check_pairs(g, pairs):
    if not pairs:
        raise InputError("at least one pair required")
    seen = set()
    for s, t in pairs:
        for v in (s, t):
            if not 0 <= v < g.num_vertices:
                raise InputError(f"endpoint {v} out of range")
            if v in seen:
                raise InputError(f"duplicate endpoint {v}")
            seen.add(v)


def brute_pdpc(g, pairs, bound=None):
    """Exhaustive search for a paired disjoint path cover; None is a proof.

    Path i must run pairs[i][0] -> pairs[i][1]; the k paths must partition
    the vertex set.  Refuses graphs larger than the oracle bound.
    """
    bound = effective_oracle_bound(bound)
    n = g.num_vertices
    if n > bound:
        raise OracleBoundError(
            f"graph has {n} vertices, oracle bound is {bound}"
        )
    _check_pairs(g, pairs)
    k = len(pairs)
    adj = g.adj
    nbr_mask = [0] * n
    for v in range(n):
        m = 0
        for w in adj[v]:
            m |= 1 << w
        nbr_mask[v] = m
    full = (1 << n) - 1
    # endpoints of pairs after i are untouchable while building path i
    later_eps = [0] * k
    for i in range(k - 1, -1, -1):
        m = later_eps[i + 1] if i + 1 < k else 0
        if i + 1 < k:
            s, t = pairs[i + 1]
            m |= (1 << s) | (1 << t)
        later_eps[i] = m

    def closure(seed, allowed):
        reach = seed & allowed
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= nbr_mask[b.bit_length() - 1]
                f ^= b
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        return reach

    def prune(i, cur, visited):
        free = full & ~visited
        eps = later_eps[i] | (1 << pairs[i][1])
        # every unvisited vertex must connect to the active frontier
        if free & ~closure((1 << cur) | eps, free | (1 << cur)):
            return True
        # the current target must be reachable without later endpoints
        allowed = (free & ~later_eps[i]) | (1 << cur)
        if not closure(1 << cur, allowed) & (1 << pairs[i][1]):
            return True
        # every untouched pair must still be joinable through free vertices
        for j in range(i + 1, k):
            sj, tj = pairs[j]
            allowed = (free & ~eps) | (1 << sj) | (1 << tj)
            if not closure(1 << sj, allowed) & (1 << tj):
                return True
        return False

    paths = [[pairs[0][0]]]

    def search(i, cur, visited):
        if cur == pairs[i][1]:
            if i == k - 1:
                return visited == full
            nxt = pairs[i + 1][0]
            paths.append([nxt])
            if search(i + 1, nxt, visited | (1 << nxt)):
                return True
            paths.pop()
            return False
        if prune(i, cur, visited):
            return False
        blocked = visited | later_eps[i]
        for w in adj[cur]:
            if blocked & (1 << w):
                continue
            paths[-1].append(w)
            if search(i, w, visited | (1 << w)):
                return True
            paths[-1].pop()
        return False

    s0 = pairs[0][0]
    if search(0, s0, 1 << s0):
        return [list(p) for p in paths]
    return None


def certify_leaf(leaf, mode=None, bound=None, trust=False):
    """Check a rank-1 leaf's declared Hamiltonian capability by brute force.

    mode "laceable": a Hamiltonian path must exist between every black-white
    pair; "connected": between every vertex pair.  Single-vertex leaves
    certify trivially.  Oversized leaves are refused unless ``trust`` is set,
    in which case they are accepted unchecked.
    """
    if not isinstance(leaf, Leaf):
        raise InputError("certify_leaf expects a Leaf")
    mode = mode or leaf.mode
    m = len(leaf.colors)
    if m == 1:
        return True
    if m > effective_oracle_bound(bound):
        if trust:
            return True
        raise OracleBoundError(
            f"leaf has {m} vertices, oracle bound is {effective_oracle_bound(bound)}"
        )
    adj = [[] for _ in range(m)]
    for u, v in leaf.edges:
        adj[u].append(v)
        adj[v].append(u)
    adj = [sorted(r) for r in adj]
    if mode == MODE_LACEABLE:
        blacks = [v for v in range(m) if leaf.colors[v] == BLACK]
        whites = [v for v in range(m) if leaf.colors[v] == WHITE]
        pairs = [(b, w) for b in blacks for w in whites]
    elif mode == MODE_CONNECTED:
        pairs = [(u, v) for u in range(m) for v in range(u + 1, m)]
    else:
        raise InputError(f"unknown mode {mode!r}")
    return all(_ham_local(adj, s, t) is not None for s, t in pairs)
