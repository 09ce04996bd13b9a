"""weldpath: welded bipartite graphs and paired disjoint path covers.

The library builds transposition-like graphs (recursive welds of equal-size
layers joined by pairwise perfect matchings), constructs paired many-to-many
disjoint path covers for them, and cross-checks everything with an
independent verifier and an exhaustive small-instance oracle.
"""

from .errors import (
    ConstructionError,
    CountingViolationError,
    HypothesisError,
    InputError,
    OracleBoundError,
    PaddingError,
    SolveError,
    WeldSpecError,
    WeldpathError,
)
from .exact import (
    DEFAULT_ORACLE_BOUND,
    brute_pdpc,
    certify_leaf,
    ham_path_between,
)
from .graph import (
    BLACK,
    WHITE,
    AssembledGraph,
    Coloring,
    is_balanced,
    is_bipartite_properly_colored,
    is_equitable,
    to_dot,
    to_json_doc,
)
from .solver import (
    SolveTrace,
    Solver,
    extend_through_empty_layers,
    layer_stats,
    reduce_pair_count,
    select_connector,
    solve,
)
from .verify import Verdict, check_theorem_hypotheses, verify_pdpc
from .weld import (
    Leaf,
    Node,
    assemble,
    assemble_indexed,
    complete_bipartite_leaf,
    kmm_weld,
    parse_weld_spec,
    random_matchings,
    serialize_weld_spec,
    transposition_graph,
    tree_rank,
    tree_size,
    validate_tree,
)

__all__ = [
    "AssembledGraph", "BLACK", "Coloring", "ConstructionError",
    "CountingViolationError", "DEFAULT_ORACLE_BOUND", "HypothesisError",
    "InputError", "Leaf", "Node", "OracleBoundError", "PaddingError",
    "SolveError", "SolveTrace", "Solver", "Verdict", "WHITE",
    "WeldSpecError", "WeldpathError", "assemble", "assemble_indexed",
    "brute_pdpc", "certify_leaf", "check_theorem_hypotheses",
    "complete_bipartite_leaf", "extend_through_empty_layers",
    "ham_path_between", "is_balanced", "is_bipartite_properly_colored",
    "is_equitable", "kmm_weld", "layer_stats", "parse_weld_spec",
    "random_matchings", "reduce_pair_count", "select_connector",
    "serialize_weld_spec", "solve", "to_dot", "to_json_doc",
    "transposition_graph", "tree_rank", "tree_size", "validate_tree",
    "verify_pdpc",
]
