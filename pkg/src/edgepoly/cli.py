"""Command-line interface.

Subcommands: info, gen, polytope, decompose, normal, quadratic, verify.
`--json` switches every report to a machine format carrying a top-level
"schema_version".  Exit codes: 0 completed, 2 usage error, 3 input error,
4 resource cap exceeded.  EDGEPOLY_MAX_VERTICES overrides the enumeration
and cycle caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .criteria import odd_cycle_condition, quadratic_condition
from .decompose import (
    enumerate_decompositions,
    is_decomposable,
)
from .errors import CapExceededError, ParseError
from .graph import SimpleGraph, bipartition, generate_graph, is_connected, parse_graph, render_edge_list
from .polytope import has_four_cycle, polytope_dimension, polytope_edges
from .verify import (
    SCHEMA_VERSION,
    CorpusSpec,
    corpus_result_to_dict,
    corpus_verify,
    theorem_report_to_dict,
    verify_theorems,
)


class UsageError(Exception):
    pass


def _env_cap() -> Optional[int]:
    raw = os.environ.get("EDGEPOLY_MAX_VERTICES")
    return int(raw) if raw else None


def _load_graph(path: str) -> SimpleGraph:
    text = Path(path).read_text(encoding="utf-8")
    fmt = "json" if path.endswith(".json") else "edge-list"
    return parse_graph(text, fmt=fmt)


def _emit_json(payload: dict) -> None:
    payload.setdefault("schema_version", SCHEMA_VERSION)
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_info(args) -> int:
    G = _load_graph(args.file)
    connected = is_connected(G)
    sides = bipartition(G) if connected else None
    payload = {
        "d": G.d,
        "edge_count": G.edge_count,
        "connected": connected,
        "bipartite": sides is not None if connected else None,
        "bipartition": [sorted(sides[0]), sorted(sides[1])] if sides else None,
        "has_four_cycle": has_four_cycle(G) is not None,
    }
    if args.json:
        _emit_json(payload)
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _cmd_gen(args) -> int:
    arity = {"complete": 1, "cycle": 1, "path": 1, "random": 2}
    kind = args.kind
    if kind in arity and len(args.params) != arity[kind]:
        raise UsageError(f"gen {kind} takes {arity[kind]} parameter(s)")
    if kind == "multipartite" and len(args.params) < 2:
        raise UsageError("gen multipartite takes at least 2 part sizes")
    G = generate_graph(kind, args.params, seed=args.seed)
    if args.json:
        text = json.dumps(
            {"d": G.d, "edges": [list(e) for e in G.edge_list()]}, sort_keys=True
        ) + "\n"
    else:
        text = render_edge_list(G)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_polytope(args) -> int:
    G = _load_graph(args.file)
    pairs = polytope_edges(G)
    dim = polytope_dimension(G) if G.edges else None
    payload: dict = {
        "vertex_count": G.edge_count,  # polytope vertices = graph edges
        "edge_pair_count": len(pairs),
        "dimension": dim,
    }
    if args.edges:
        payload["edge_pairs"] = [[list(e), list(f)] for e, f in pairs]
    if args.json:
        _emit_json(payload)
    else:
        print(f"polytope vertices: {G.edge_count}")
        print(f"polytope edges: {len(pairs)}")
        print(f"dimension: {dim}")
        if args.edges:
            for e, f in pairs:
                print(f"  {e} -- {f}")
    return 0


def _cmd_decompose(args) -> int:
    G = _load_graph(args.file)
    cap = args.max_enum_vertices or _env_cap()
    payload: dict = {}
    if args.count or args.enumerate:
        decomps = enumerate_decompositions(G, max_vertices=cap)
        payload["count"] = len(decomps)
        payload["decomposable"] = bool(decomps)
        if args.enumerate:
            payload["decompositions"] = [
                {
                    "e_plus": [list(e) for e in d.e_plus],
                    "e_minus": [list(e) for e in d.e_minus],
                }
                for d in decomps
            ]
    else:
        witness = is_decomposable(G, mode=args.mode)
        payload["decomposable"] = witness is not None
        payload["type"] = witness.type_tag if witness else None
        if args.witness and witness:
            payload["weights"] = list(witness.weights)
            payload["e_plus"] = [list(e) for e in witness.decomposition.e_plus]
            payload["e_minus"] = [list(e) for e in witness.decomposition.e_minus]
    if args.json:
        _emit_json(payload)
    else:
        if "count" in payload:
            print(f"decompositions: {payload['count']}")
            for d in payload.get("decompositions", []):
                print(f"  e_plus={d['e_plus']} e_minus={d['e_minus']}")
        else:
            if payload["decomposable"]:
                print(f"decomposable (type {payload['type']})")
            else:
                print("not decomposable")
            if "weights" in payload:
                print(f"weights: {payload['weights']}")
                print(f"e_plus: {payload['e_plus']}")
                print(f"e_minus: {payload['e_minus']}")
    return 0


def _cmd_normal(args) -> int:
    G = _load_graph(args.file)
    report = odd_cycle_condition(
        G, exhaustive=args.exhaustive, max_vertices=_env_cap()
    )
    payload: dict = {"normal": report.normal}
    if args.witness and report.violation:
        c1, c2 = report.violation
        payload["violation"] = {
            "cycle_a": list(c1.vertices),
            "cycle_b": list(c2.vertices),
        }
    if args.json:
        _emit_json(payload)
    else:
        print("normal" if report.normal else "not normal")
        if args.witness and report.violation:
            c1, c2 = report.violation
            print(f"violating odd cycle pair: {c1.vertices} / {c2.vertices}")
    return 0


def _cmd_quadratic(args) -> int:
    G = _load_graph(args.file)
    report = quadratic_condition(
        G, odd_chords_only=args.odd_chord_triples, max_vertices=_env_cap()
    )
    payload: dict = {"quadratic": report.quadratic}
    if args.witness and report.violation:
        v = report.violation
        payload["violation"] = {
            "kind": v.kind,
            "cycle_a": list(v.cycle_a.vertices),
            "cycle_b": list(v.cycle_b.vertices) if v.cycle_b else None,
            "shared_vertex": v.shared_vertex,
        }
    if args.json:
        _emit_json(payload)
    else:
        print("quadratic" if report.quadratic else "not quadratic")
        if args.witness and report.violation:
            print(f"violation: {payload['violation']}")
    return 0


def _cmd_verify(args) -> int:
    if args.corpus:
        spec = CorpusSpec(
            seed=args.corpus_seed,
            random_count=args.corpus_random,
            min_vertices=args.corpus_min_d,
            max_vertices=args.corpus_max_d,
            edge_probabilities=tuple(args.corpus_probs),
            multipartite_max_vertices=args.corpus_multipartite_d,
        )
        result = corpus_verify(spec)
        payload = corpus_result_to_dict(result)
        text = json.dumps(payload, indent=2, sort_keys=True)
        if args.output:
            Path(args.output).write_text(text + "\n", encoding="utf-8")
        if args.json:
            print(text)
        else:
            summary = payload["summary"]
            print(f"graphs: {summary['graphs']}")
            print(f"decomposable: {summary['decomposable']}")
            print(f"total decompositions: {summary['total_decompositions']}")
            print(f"violated claims: {summary['violation_count']}")
            for item in summary["violations"]:
                print(f"  {item['graph']}: {item['claim']}")
        return 0
    if not args.file:
        raise UsageError("verify needs a graph file or --corpus")
    G = _load_graph(args.file)
    cap = _env_cap()
    report = verify_theorems(
        G, name=args.file, max_enum_vertices=cap, max_cycle_vertices=cap
    )
    payload = theorem_report_to_dict(report, include_checks=True)
    payload["schema_version"] = SCHEMA_VERSION
    if args.json:
        _emit_json(payload)
    else:
        print(f"decomposable: {report.decomposable}")
        print(f"decompositions: {report.decomposition_count}")
        print(f"normal: {report.normal}, quadratic: {report.quadratic}")
        if report.formula_value is not None:
            print(
                f"formula: {report.formula_value} (delta {report.formula_delta})"
            )
        print(f"violated claims: {report.violated_claims or 'none'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgepoly",
        description="Decide, enumerate and count hyperplane decompositions of "
        "edge polytopes; check normality and quadratic generation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="basic facts about a graph file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("gen", help="generate a graph (edge-list to stdout)")
    p.add_argument("kind", choices=["complete", "cycle", "path", "multipartite", "random"])
    p.add_argument("params", nargs="+", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("polytope", help="edge pairs and exact dimension")
    p.add_argument("file")
    p.add_argument("--edges", action="store_true", help="list the edge pairs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("decompose", help="decide / enumerate / count decompositions")
    p.add_argument("file")
    p.add_argument("--mode", choices=["any", "type1", "type2"], default="any")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--witness", action="store_true")
    group.add_argument("--enumerate", action="store_true")
    group.add_argument("--count", action="store_true")
    p.add_argument("--max-enum-vertices", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("normal", help="odd cycle condition (normality)")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_normal)

    p = sub.add_parser("quadratic", help="quadratic toric-ideal criterion")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--odd-chord-triples", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_quadratic)

    p = sub.add_parser("verify", help="run the claim harness on a file or corpus")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.add_argument("--corpus-seed", type=int, default=7)
    p.add_argument("--corpus-random", type=int, default=60)
    p.add_argument("--corpus-min-d", type=int, default=4)
    p.add_argument("--corpus-max-d", type=int, default=8)
    p.add_argument("--corpus-probs", type=float, nargs="+", default=[0.3, 0.5, 0.7])
    p.add_argument("--corpus-multipartite-d", type=int, default=6)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 4
    except (ParseError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
