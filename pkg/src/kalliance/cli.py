"""Command-line front end: graph generation, solving, bound evaluation,
corpus certification, solver-vs-oracle comparison, and the known-values
suite.

Exit codes: 0 success, 1 violations or mismatches found, 2 usage error,
3 file or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from .alliances import VertexSet, certify
from .corpus import default_corpus_spec, load_corpus_spec, run_corpus
from .graphs import (
    Graph,
    ParseError,
    connected_components_of,
    from_edge_list,
    generate,
    induced_subgraph,
    is_tree,
    is_triangle_free,
    to_edge_list,
)
from .known_values import run_known_value_checks
from .solver import (
    K_PARAMETERS,
    PARAM_A_K,
    PARAM_GAMMA,
    PARAM_GAMMA_K_A,
    PARAM_GAMMA_K_CA,
    PARAM_GAMMA_T,
    ResourceLimitError,
    brute_force_oracle,
    solve,
)

_TARGET_ALIASES = {
    "ak": PARAM_A_K,
    "gka": PARAM_GAMMA_K_A,
    "gkca": PARAM_GAMMA_K_CA,
    "gamma": PARAM_GAMMA,
    "gammat": PARAM_GAMMA_T,
}

_REQUIRE_FOR_TARGET = {
    PARAM_A_K: "defensive",
    PARAM_GAMMA_K_A: "global",
    PARAM_GAMMA_K_CA: "global_connected",
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_graph(path: str) -> Graph:
    return from_edge_list(_read_text(path))


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj) + "\n")


def _warn_k_range(g: Graph, k: int):
    d = g.max_degree
    if not -d <= k <= d:
        print(
            f"warning: k={k} is outside the degree range [{-d}, {d}]",
            file=sys.stderr,
        )


def _cmd_gen(args) -> int:
    params = {}
    for name in ("n", "a", "b", "d", "seed"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.p is not None:
        params["p"] = args.p
    if args.family in ("random_tree", "random_graph", "random_cubic"):
        params.setdefault("seed", 0)
    g = generate(args.family, **params)
    _write_text(args.output, to_edge_list(g))
    return 0


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    target = _TARGET_ALIASES[args.target]
    k = args.k
    if target in K_PARAMETERS:
        if k is None:
            print("error: this target requires --k", file=sys.stderr)
            return 2
        _warn_k_range(g, k)
    elif k is not None:
        print("error: this target does not take --k", file=sys.stderr)
        return 2
    result = solve(
        g, target, k, use_pruning=not args.no_prune, workers=args.workers
    )
    _emit_json(result.to_json_dict())
    return 0


def _cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    if args.assume_planar:
        g = g.with_asserted_planar()
    target = _TARGET_ALIASES[args.target]
    if target not in K_PARAMETERS:
        print("error: bounds are catalogued for ak, gka, and gkca only", file=sys.stderr)
        return 2
    _warn_k_range(g, args.k)
    reports = bounds_mod.evaluate_all(g, args.k, target)
    if args.set is None:
        _emit_json([r.to_json_dict() for r in reports])
        return 0

    members = [int(tok) for tok in args.set.split(",") if tok.strip() != ""]
    subject = VertexSet.from_vertices(g, members)
    cert = certify(g, subject, args.k, _REQUIRE_FOR_TARGET[target])
    components = connected_components_of(g, members)
    if is_tree(g):
        reports.append(bounds_mod.tree_lower(g.n, components, args.k))
    if g.asserted_planar:
        induced = induced_subgraph(g, members)
        reports.append(
            bounds_mod.planar_subgraph_lower(g.n, args.k, is_triangle_free(induced))
        )
        if components == 1:
            f = bounds_mod.induced_face_count(g, members)
            reports.append(bounds_mod.faces_lower(g.n, f, args.k))
    _emit_json(
        {
            "certificate": cert.to_json_dict(),
            "components": components,
            "reports": [r.to_json_dict() for r in reports],
        }
    )
    return 0


def _cmd_certify(args) -> int:
    if args.corpus == "default":
        spec = default_corpus_spec()
    else:
        spec = load_corpus_spec(_read_text(args.corpus))
    result = run_corpus(spec, workers=args.workers)
    _write_text(args.output, result.to_csv())
    if args.json is not None:
        _write_text(args.json, json.dumps(result.to_json_dict(), indent=2) + "\n")
    total = result.total_violations()
    print(
        f"certified {len(spec.graphs)} graphs, {len(result.records)} records, "
        f"{total} violations",
        file=sys.stderr,
    )
    if total:
        for message in result.all_violations()[:20]:
            print(f"violation: {message}", file=sys.stderr)
    return 1 if total else 0


def _cmd_oracle_check(args) -> int:
    g = _load_graph(args.graph)
    d = g.max_degree
    kmin = args.kmin if args.kmin is not None else -d
    kmax = args.kmax if args.kmax is not None else d
    mismatches = []

    def compare(target, k):
        fast = solve(g, target, k)
        slow = brute_force_oracle(g, target, k)
        if (fast.status, fast.value, fast.witness_members()) != (
            slow.status,
            slow.value,
            slow.witness_members(),
        ):
            mismatches.append(
                f"{target} k={k}: solver {fast.status}/{fast.value}/"
                f"{fast.witness_members()} vs oracle {slow.status}/{slow.value}/"
                f"{slow.witness_members()}"
            )

    for k in range(kmin, kmax + 1):
        for target in K_PARAMETERS:
            compare(target, k)
    for target in (PARAM_GAMMA, PARAM_GAMMA_T):
        compare(target, None)
    for line in mismatches:
        print(f"mismatch: {line}", file=sys.stderr)
    print(
        f"oracle-check: {len(mismatches)} mismatches over k in [{kmin}, {kmax}]",
        file=sys.stderr,
    )
    return 1 if mismatches else 0


def _cmd_paper_suite(_args) -> int:
    checks = run_known_value_checks()
    failures = 0
    for check in checks:
        mark = "ok" if check.ok else "FAIL"
        print(f"{mark:4s} {check.name}: {check.detail}")
        if not check.ok:
            failures += 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kalliance",
        description="Exact defensive k-alliance computation and certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit an edge list for a named graph family")
    gen.add_argument("--family", required=True, choices=sorted(
        ("complete", "complete_bipartite", "star", "path", "cycle", "hypercube",
         "petersen", "random_tree", "random_graph", "random_cubic")
    ))
    gen.add_argument("--n", type=int)
    gen.add_argument("--a", type=int)
    gen.add_argument("--b", type=int)
    gen.add_argument("--d", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_gen)

    slv = sub.add_parser("solve", help="exact optimum for one parameter")
    slv.add_argument("--graph", required=True, help="edge-list file, or - for stdin")
    slv.add_argument("--target", required=True, choices=sorted(_TARGET_ALIASES))
    slv.add_argument("--k", type=int)
    slv.add_argument("--no-prune", action="store_true")
    slv.add_argument("--workers", type=int, default=1)
    slv.set_defaults(func=_cmd_solve)

    bnd = sub.add_parser("bounds", help="evaluate the bound catalog")
    bnd.add_argument("--graph", required=True)
    bnd.add_argument("--k", type=int, required=True)
    bnd.add_argument("--target", required=True, choices=sorted(_TARGET_ALIASES))
    bnd.add_argument("--assume-planar", action="store_true")
    bnd.add_argument("--set", help="comma-separated vertices to certify")
    bnd.set_defaults(func=_cmd_bounds)

    cert = sub.add_parser("certify", help="run corpus certification")
    cert.add_argument("--corpus", required=True, help="spec JSON file, - for stdin, or 'default'")
    cert.add_argument("-o", "--output", help="CSV destination (default stdout)")
    cert.add_argument("--json", help="also write the full JSON report here")
    cert.add_argument("--workers", type=int, default=1)
    cert.set_defaults(func=_cmd_certify)

    orc = sub.add_parser("oracle-check", help="compare the solver against the brute-force oracle")
    orc.add_argument("--graph", required=True)
    orc.add_argument("--kmin", type=int)
    orc.add_argument("--kmax", type=int)
    orc.set_defaults(func=_cmd_oracle_check)

    paper = sub.add_parser("paper-suite", help="run the curated known-value checks")
    paper.set_defaults(func=_cmd_paper_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
