"""Independent validation of path covers and of the structural hypotheses.

This module deliberately shares no code with the constructive solver: it
checks covers against the assembled graph alone, in O(V + E), and reports
rather than raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OracleBoundError, WeldpathError
from .exact import certify_leaf
from .graph import is_bipartite_properly_colored, is_equitable
from .weld import Leaf, Node, assemble, tree_rank, tree_size


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    violation: dict = None

    def __bool__(self):
        return self.accepted

    def to_json(self):
        return {"accepted": self.accepted, "violation": self.violation}


def _reject(**violation):
    return Verdict(False, violation)


def verify_pdpc(g, pairs, cover):
    """Accept iff path i runs s_i..t_i along edges and the paths partition V.

    Malformed input is rejected gracefully with a reason, never raised.
    """
    try:
        if len(cover) != len(pairs):
            return _reject(reason="path count mismatch",
                           expected=len(pairs), got=len(cover))
        n = g.num_vertices
        seen = bytearray(n)
        count = 0
        for i, ((s, t), path) in enumerate(zip(pairs, cover)):
            if not path:
                return _reject(reason="empty path", pair=i)
            for pos, v in enumerate(path):
                if not isinstance(v, int) or not 0 <= v < n:
                    return _reject(reason="vertex out of range", pair=i,
                                   position=pos, vertex=v)
                if seen[v]:
                    return _reject(reason="vertex covered twice", pair=i,
                                   position=pos, vertex=v)
                seen[v] = 1
                count += 1
            if path[0] != s:
                return _reject(reason="wrong start", pair=i,
                               expected=s, got=path[0])
            if path[-1] != t:
                return _reject(reason="wrong end", pair=i,
                               expected=t, got=path[-1])
            for pos in range(len(path) - 1):
                if path[pos + 1] not in g.adj_set(path[pos]):
                    return _reject(reason="non-edge", pair=i, position=pos,
                                   edge=[path[pos], path[pos + 1]])
        if count != n:
            missing = next(v for v in range(n) if not seen[v])
            return _reject(reason="vertices uncovered", first_missing=missing,
                           covered=count, total=n)
        return Verdict(True)
    except (TypeError, IndexError, ValueError) as exc:
        return _reject(reason="malformed input", detail=str(exc))


def check_theorem_hypotheses(tree, bound=None, trust=False):
    """Report-style check of everything the solver's guarantee rests on.

    Per node: child count >= rank, equal child sizes; per leaf: single vertex
    or even order, plus a brute-force certification of its declared mode.
    Globally: the assembly is properly 2-colored and equitable.
    """
    entries = []

    def add(path, check, ok, detail=""):
        entries.append({"node": path, "check": check, "ok": ok, "detail": detail})

    def walk(t, path):
        if isinstance(t, Leaf):
            m = len(t.colors)
            add(path, "leaf_parity", m == 1 or m % 2 == 0,
                f"{m} vertices")
            try:
                ok = certify_leaf(t, bound=bound, trust=trust)
                add(path, "leaf_certified", ok, t.mode)
            except OracleBoundError as exc:
                add(path, "leaf_certified", trust, f"skipped: {exc}")
            return
        if not isinstance(t, Node):
            add(path, "node_type", False, type(t).__name__)
            return
        ell = len(t.children)
        ranks = {tree_rank(ch) for ch in t.children}
        rank = (max(ranks) + 1) if ranks else 0
        add(path, "children_count", ell >= rank, f"l={ell}, rank={rank}")
        sizes = {tree_size(ch) for ch in t.children}
        add(path, "equal_child_sizes", len(sizes) == 1, f"sizes={sorted(sizes)}")
        add(path, "uniform_child_ranks", len(ranks) == 1, f"ranks={sorted(ranks)}")
        for idx, ch in enumerate(t.children):
            walk(ch, f"{path}/children[{idx}]")

    walk(tree, "root")
    try:
        g = assemble(tree)
        add("root", "bipartite", is_bipartite_properly_colored(g), "")
        add("root", "equitable", is_equitable(g),
            f"{g.coloring().black_count}/{g.coloring().white_count}")
    except WeldpathError as exc:
        add("root", "assembly", False, str(exc))
    ok = all(e["ok"] for e in entries)
    return {"ok": ok, "checks": entries}
