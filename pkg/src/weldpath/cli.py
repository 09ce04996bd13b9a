"""Command-line surface: generate welds, solve instances, verify covers, run
the exhaustive oracle, and fuzz the solver against the verifier.

Exit codes: 0 success, 1 verification reject, 2 usage/parse error,
3 hypothesis violation, 4 internal construction failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import (
    CountingViolationError,
    HypothesisError,
    InputError,
    OracleBoundError,
    PaddingError,
    SolveError,
    WeldSpecError,
)
from .exact import brute_pdpc, effective_oracle_bound
from .graph import BLACK, WHITE, is_equitable, to_dot, to_json_doc
from .solver import Solver
from .verify import check_theorem_hypotheses, verify_pdpc
from .weld import (
    assemble,
    kmm_weld,
    parse_weld_spec,
    serialize_weld_spec,
    transposition_graph,
)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_INTERNAL = 4


class _UsageError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read {path}: {exc}")


def _write_json(path, doc):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def _load_tree(path):
    try:
        return parse_weld_spec(_load_json(path))
    except WeldSpecError as exc:
        raise _UsageError(f"bad weld spec {path}: {exc}")


def _load_pairs(path):
    doc = _load_json(path)
    try:
        return [(int(s), int(t)) for s, t in doc["pairs"]]
    except (KeyError, TypeError, ValueError):
        raise _UsageError(f'{path} must look like {{"pairs": [[s, t], ...]}}')


def _build_family(args):
    if args.family == "transposition":
        if args.n is None:
            raise _UsageError("gen transposition needs n")
        return transposition_graph(args.n)
    if args.family == "kmm-weld":
        return kmm_weld(args.rank, args.m, args.layers, args.seed)
    if args.family == "custom":
        if not args.spec:
            raise _UsageError("gen custom needs --spec")
        return _load_tree(args.spec)
    raise _UsageError(f"unknown family {args.family}")


def _cmd_gen(args):
    try:
        tree = _build_family(args)
    except InputError as exc:
        raise _UsageError(str(exc))
    g = assemble(tree)
    if args.out:
        _write_json(args.out, serialize_weld_spec(tree))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g))
    c = g.coloring()
    print(f"vertices={g.num_vertices} edges={g.num_edges()} "
          f"black={c.black_count} white={c.white_count} "
          f"equitable={str(is_equitable(g)).lower()}")
    return EXIT_OK


def _cmd_solve(args):
    tree = _load_tree(args.graph)
    pairs = _load_pairs(args.pairs)
    try:
        solver = Solver(tree)
        cover, trace = solver.solve(pairs)
    except (HypothesisError, OracleBoundError) as exc:
        report = check_theorem_hypotheses(tree, trust=True)
        report["error"] = str(exc)
        print(json.dumps(report, indent=1))
        return EXIT_HYPOTHESIS
    except (CountingViolationError, PaddingError, SolveError) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        _write_json(args.out, {"paths": cover})
    else:
        print(json.dumps({"paths": cover}))
    if args.trace:
        _write_json(args.trace, trace.to_json())
    return EXIT_OK


def _cmd_verify(args):
    tree = _load_tree(args.graph)
    pairs = _load_pairs(args.pairs)
    doc = _load_json(args.cover)
    cover = doc.get("paths") if isinstance(doc, dict) else None
    if cover is None:
        raise _UsageError(f'{args.cover} must look like {{"paths": [[...]]}}')
    verdict = verify_pdpc(assemble(tree), pairs, cover)
    print(json.dumps(verdict.to_json()))
    return EXIT_OK if verdict.accepted else EXIT_REJECT


def _cmd_oracle(args):
    tree = _load_tree(args.graph)
    pairs = _load_pairs(args.pairs)
    g = assemble(tree)
    try:
        cover = brute_pdpc(g, pairs, bound=args.bound)
    except (OracleBoundError, InputError) as exc:
        raise _UsageError(str(exc))
    if cover is None:
        print("NONE")
    else:
        print(json.dumps({"paths": cover}))
    return EXIT_OK


def _random_instance(family, max_rank, rng):
    if family == "transposition":
        rank = rng.randint(2, max_rank)
        tree = transposition_graph(rank)
    else:
        rank = rng.randint(2, min(max_rank, 4))
        m = rng.randint(1, 2)
        layers = rank + rng.randint(0, 2) if rank > 1 else 1
        tree = kmm_weld(rank, m, max(layers, 2), rng.randrange(1 << 62))
    return rank, tree


def _fuzz_pairs(g, k, rng):
    blacks = [v for v in range(g.num_vertices) if g.color[v] == BLACK]
    whites = [v for v in range(g.num_vertices) if g.color[v] == WHITE]
    return list(zip(rng.sample(blacks, k), rng.sample(whites, k)))


def _fuzz_one(task):
    family, max_rank, seed, idx = task
    rng = random.Random((seed, idx))
    rank, tree = _random_instance(family, max_rank, rng)
    solver = Solver(tree)
    pairs = _fuzz_pairs(solver.graph, rank - 1, rng)
    try:
        cover, trace = solver.solve(pairs)
    except Exception as exc:  # any failure is a fuzz finding
        return idx, False, f"solve error: {exc}", None
    verdict = verify_pdpc(solver.graph, pairs, cover)
    if not verdict.accepted:
        return idx, False, f"verifier reject: {verdict.violation}", None
    return idx, True, "", trace.case


def _cmd_fuzz(args):
    tasks = [(args.family, args.max_rank, args.seed, i)
             for i in range(args.instances)]
    if args.workers > 1:
        import multiprocessing

        with multiprocessing.Pool(args.workers) as pool:
            results = pool.map(_fuzz_one, tasks)
    else:
        results = [_fuzz_one(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    histogram = {}
    failures = 0
    for idx, ok, msg, case in results:
        if ok:
            key = case or "rank2"
            histogram[key] = histogram.get(key, 0) + 1
        else:
            failures += 1
            print(f"FAIL instance {idx}: {msg}")
    print(f"instances={len(results)} pass={len(results) - failures} "
          f"fail={failures}")
    print("cases " + json.dumps(dict(sorted(histogram.items()))))
    return EXIT_OK if failures == 0 else EXIT_REJECT


def _parser():
    p = argparse.ArgumentParser(
        prog="weldpath",
        description="Build welded bipartite graphs and paired disjoint "
                    "path covers.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a weld-spec file")
    g.add_argument("family", choices=["transposition", "kmm-weld", "custom"])
    g.add_argument("n", nargs="?", type=int, default=None,
                   help="rank of the transposition graph")
    g.add_argument("--rank", type=int, default=2)
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--layers", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--spec", help="existing weld-spec file (family=custom)")
    g.add_argument("--out", help="write the weld-spec JSON here")
    g.add_argument("--dot", help="also write a DOT rendering")
    g.set_defaults(fn=_cmd_gen)

    s = sub.add_parser("solve", help="produce a paired disjoint path cover")
    s.add_argument("--graph", required=True)
    s.add_argument("--pairs", required=True)
    s.add_argument("--out")
    s.add_argument("--trace")
    s.set_defaults(fn=_cmd_solve)

    v = sub.add_parser("verify", help="check a cover against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--pairs", required=True)
    v.add_argument("--cover", required=True)
    v.set_defaults(fn=_cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive small-instance search")
    o.add_argument("--graph", required=True)
    o.add_argument("--pairs", required=True)
    o.add_argument("--bound", type=int, default=None,
                   help=f"override the size bound (default "
                        f"{effective_oracle_bound()}, env "
                        f"WELDPATH_ORACLE_BOUND)")
    o.set_defaults(fn=_cmd_oracle)

    f = sub.add_parser("fuzz", help="random instances through solve+verify")
    f.add_argument("--family", choices=["transposition", "kmm-weld"],
                   default="transposition")
    f.add_argument("--instances", type=int, default=100)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--max-rank", type=int, default=4)
    f.add_argument("--workers", type=int, default=1)
    f.set_defaults(fn=_cmd_fuzz)
    return p


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
