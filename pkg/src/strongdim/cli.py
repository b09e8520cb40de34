"""Command-line interface.

Subcommands: solve, srg, gadget, verify, stats, gen. Exit codes: 0 on
success, 1 when a requested verification fails, 2 on usage or input errors.
JSON output (``--output json``) is deterministic apart from timings;
``NO_COLOR`` disables ANSI colors in text output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cover import exact_min_cover, matching_lower_bound
from .gadgets import (
    GadgetCertificate,
    GadgetOutput,
    check_certificates,
    hardness_pipeline,
    plus_construction,
    subdivide_edges,
    tilde_construction,
)
from .graph import (
    DisconnectedGraphError,
    GenerationFailed,
    Graph,
    GraphParseError,
    apsp,
    diameter,
    find_twins,
    gen_random_connected,
    graph_properties,
    parse_graph,
    serialize_graph,
)
from .reports import approx_sdim, brute_sdim, exact_sdim, input_digest
from .resolving import (
    OracleLimitError,
    VerificationFailure,
    is_strong_resolving_set,
    strong_resolving_graph,
)

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _paint(text: str, code: str) -> str:
    if _color_enabled():
        return f"\x1b[{code}m{text}\x1b[0m"
    return text

def _ok(text: str) -> str:
    return _paint(text, "32")

def _bad(text: str) -> str:
    return _paint(text, "31")


def _load_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read(), fmt)
    with open(path, "r", encoding="ascii") as handle:
        return parse_graph(handle.read(), fmt)


def _parse_node_set(text: str) -> list[int]:
    cleaned = text.replace(" ", "")
    if not cleaned:
        return []
    try:
        return [int(part) for part in cleaned.split(",")]
    except ValueError:
        raise ValueError(f"--set expects comma-separated integers, got {text!r}") from None


def _add_input_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="graph file, or '-' for stdin")
    parser.add_argument(
        "--format", choices=["edgelist", "dimacs"], default="edgelist",
        help="input file format (default: edgelist)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongdim",
        description="Strong metric dimension solvers, resolving-graph tools, "
        "and hardness-gadget constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a strong resolving set")
    _add_input_args(solve)
    solve.add_argument("--method", choices=["approx", "exact", "brute"], default="approx")
    solve.add_argument("--output", choices=["json", "text"], default="text")
    solve.add_argument("--budget", type=int, default=None, metavar="MS",
                       help="time budget for the exact search, in milliseconds")
    solve.add_argument("--node-limit", type=int, default=20,
                       help="node cap for the brute-force method (default: 20)")
    solve.add_argument("--workers", type=int, default=1,
                       help="threads for the distance computation (default: 1)")

    srg = sub.add_parser("srg", help="emit the strong resolving graph")
    _add_input_args(srg)
    srg.add_argument("--output-format", choices=["edgelist", "dimacs"], default="edgelist")
    srg.add_argument("--workers", type=int, default=1)

    gadget = sub.add_parser("gadget", help="run a hardness construction")
    gadget.add_argument("kind", choices=["tilde", "plus", "subdivide", "pipeline"])
    _add_input_args(gadget)
    gadget.add_argument("--output", choices=["json", "text"], default="text")
    gadget.add_argument("--oracle-limit", type=int, default=20,
                        help="node cap for brute-force dimension checks (default: 20)")
    gadget.add_argument("--sidecar", default=None, metavar="PATH",
                        help="also write provenance and certificates as JSON to PATH")

    verify = sub.add_parser("verify", help="check a candidate strong resolving set")
    _add_input_args(verify)
    verify.add_argument("--set", required=True, dest="node_set",
                        help="comma-separated node ids, e.g. '0,2,5'")
    verify.add_argument("--output", choices=["json", "text"], default="text")

    stats = sub.add_parser("stats", help="basic structural facts about a graph")
    _add_input_args(stats)
    stats.add_argument("--output", choices=["json", "text"], default="text")

    gen = sub.add_parser("gen", help="sample a random connected graph")
    gen.add_argument("--model", choices=["gnp"], default="gnp")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", default=None, metavar="PATH", help="write here instead of stdout")
    gen.add_argument("--out-format", choices=["edgelist", "dimacs"], default="edgelist")
    return parser


def _cmd_solve(args) -> int:
    g = _load_graph(args.input, args.format)
    if args.method == "approx":
        report = approx_sdim(g, workers=args.workers)
    elif args.method == "exact":
        report = exact_sdim(g, budget_ms=args.budget, workers=args.workers)
    else:
        report = brute_sdim(g, node_limit=args.node_limit)
    if args.output == "json":
        print(report.to_json())
    else:
        solution = ",".join(map(str, report.solution))
        print(f"method: {report.method}")
        print(f"size: {report.size}")
        print(f"lower bound: {report.lower_bound}")
        print(f"ratio bound: {report.ratio_bound}")
        print(f"solution: {{{solution}}}")
        print(f"verified: {_ok('yes') if report.verified else _bad('no')}")
        for name in report.skipped_checks:
            print(f"skipped: {name}")
    return 0


def _cmd_srg(args) -> int:
    g = _load_graph(args.input, args.format)
    srg = strong_resolving_graph(g, apsp(g, workers=args.workers))
    sys.stdout.write(serialize_graph(srg.graph, args.output_format))
    return 0


def _certificate_lines(certificate: GadgetCertificate) -> list[str]:
    lines = []
    for check in certificate.checks:
        mark = {"passed": _ok("passed"), "failed": _bad("failed"), "skipped": "skipped"}[check.status]
        extra = f" [{check.detail}]" if check.detail else ""
        witness = f" witness={check.witness}" if check.witness is not None else ""
        lines.append(f"# check {check.name}: {mark}{extra}{witness}")
    return lines


def _gadget_record(out: GadgetOutput, certificate: GadgetCertificate) -> dict:
    return {
        "kind": out.kind,
        "params": {"kappa": out.params.kappa, "k": out.params.k},
        "n": out.graph.n,
        "m": out.graph.m,
        "edges": [list(edge) for edge in out.graph.edges],
        "provenance": [
            {"id": i, "tag": tag.kind, "args": list(tag.args)}
            for i, tag in enumerate(out.provenance)
        ],
        "certificates": [
            {
                "name": c.name,
                "status": c.status,
                "witness": list(c.witness) if c.witness is not None else None,
                "detail": c.detail,
            }
            for c in certificate.checks
        ],
    }


def _print_gadget_text(out: GadgetOutput, certificate: GadgetCertificate, header: str) -> None:
    print(f"# {header}")
    sys.stdout.write(serialize_graph(out.graph, "edgelist"))
    for i, tag in enumerate(out.provenance):
        print(f"# node {i}: {tag.label()}")
    for line in _certificate_lines(certificate):
        print(line)


def _cmd_gadget(args) -> int:
    g = _load_graph(args.input, args.format)
    if args.kind == "pipeline":
        result = hardness_pipeline(g, oracle_limit=args.oracle_limit)
        stages = [
            ("plus", result.plus),
            ("tilde_of_plus", result.tilde_of_plus),
            ("subdivided", result.subdivided),
        ]
        record = {
            "kind": "pipeline",
            "input_digest": input_digest(g),
            "stages": {
                name: _gadget_record(out, result.certificates[name])
                for name, out in stages
            },
        }
        if args.output == "json":
            print(json.dumps(record, indent=2))
        else:
            for name, out in stages:
                _print_gadget_text(out, result.certificates[name], f"stage {name}")
    else:
        constructor = {
            "tilde": tilde_construction,
            "plus": plus_construction,
            "subdivide": subdivide_edges,
        }[args.kind]
        out = constructor(g)
        certificate = check_certificates(out, g, oracle_limit=args.oracle_limit)
        record = {"input_digest": input_digest(g), **_gadget_record(out, certificate)}
        if args.output == "json":
            print(json.dumps(record, indent=2))
        else:
            _print_gadget_text(out, certificate, f"gadget {out.kind}")
    if args.sidecar:
        with open(args.sidecar, "w", encoding="ascii") as handle:
            json.dump(record, handle, indent=2)
            handle.write("\n")
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    nodes = _parse_node_set(args.node_set)
    certificate = is_strong_resolving_set(g, nodes)
    if args.output == "json":
        print(
            json.dumps(
                {
                    "input_digest": input_digest(g),
                    "set": sorted(set(nodes)),
                    "verified": certificate.valid,
                    "witness_failure": list(certificate.witness_failure)
                    if certificate.witness_failure
                    else None,
                },
                indent=2,
            )
        )
    elif certificate.valid:
        print(f"verified: {_ok('yes')}")
    else:
        u, v = certificate.witness_failure
        print(f"verified: {_bad('no')} (no member strongly resolves the pair {{{u},{v}}})")
    return 0 if certificate.valid else VERIFY_ERROR


def _cmd_stats(args) -> int:
    g = _load_graph(args.input, args.format)
    props = graph_properties(g)
    twins = find_twins(g)
    diam = diameter(apsp(g)) if props.connected else None
    record = {
        "input_digest": input_digest(g),
        "n": props.n,
        "m": props.m,
        "connected": props.connected,
        "bipartite": props.bipartite,
        "diameter": diam,
        "twin_nodes": list(twins.twin_nodes),
        "kappa": twins.kappa,
        "matching_lower_bound": matching_lower_bound(g),
    }
    if props.connected:
        record["min_cover_size"] = exact_min_cover(g).size
    if args.output == "json":
        print(json.dumps(record, indent=2))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")
    return 0


def _cmd_gen(args) -> int:
    g = gen_random_connected(args.n, args.p, args.seed)
    text = serialize_graph(g, args.out_format)
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "srg": _cmd_srg,
    "gadget": _cmd_gadget,
    "verify": _cmd_verify,
    "stats": _cmd_stats,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    except (
        GraphParseError,
        DisconnectedGraphError,
        GenerationFailed,
        OracleLimitError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
