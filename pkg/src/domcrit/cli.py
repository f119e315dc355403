"""Command-line surface: analyze, gen, verify, iso, convert.

Machine-readable JSON goes to stdout (or --out); human-oriented summaries go
to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or parse
error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .criticality import criticality_profile
from .domination import (
    GammaSetBudgetError,
    all_gamma_sets,
    domination_number,
    gamma,
)
from .families import (
    FkParams,
    Fstar2Variant,
    build_Fk,
    build_Fpp3,
    build_Fstar2,
    enumerate_Fk,
    enumerate_Fstar_k,
    recognize_Fk,
    recognize_Fstar_k,
)
from .graph import (
    Graph,
    components,
    delete_vertices,
    diameter,
    diametrical_vertices,
    is_connected,
)
from .graphio import FORMATS, GraphParseError, dumps, loads, to_graph6
from .iso import are_isomorphic
from .verify import (
    ALL_CHECKS,
    ScanBudgetError,
    ScanConfig,
    report_json,
    run_scan,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_input(path)
    if fmt == "graph6":
        # graph6 files carry one graph per line; take the first
        for line in text.splitlines():
            if line.strip():
                return loads(line, fmt)
        raise GraphParseError("no graph6 line found")
    return loads(text, fmt)


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    profile = criticality_profile(g)
    result = domination_number(g)
    try:
        count: int | str = len(all_gamma_sets(g, budget=args.budget))
    except GammaSetBudgetError:
        count = "unknown"
    connected = is_connected(g)
    doc = {
        "n": g.n,
        "edges": g.edge_count(),
        "connected": connected,
        "gamma": result.gamma,
        "gamma_set": list(result.witness),
        "gamma_set_count": count,
        "diameter": int(diameter(g)) if connected else None,
        "diametrical": list(diametrical_vertices(g)) if connected else None,
        "v0": list(profile.partition.zero),
        "vplus": list(profile.partition.plus),
        "vminus": list(profile.partition.minus),
        "critical": profile.is_critical,
        "bicritical": profile.is_bicritical,
        "bicritical_degenerate": profile.bicritical_degenerate,
        "weak_bicritical": profile.is_weak_bicritical,
        "fk": None,
        "fstar": None,
        "components": None,
    }
    if connected and g.n >= 1:
        cert = recognize_Fk(g)
        doc["fk"] = cert.to_json() if cert else None
        cert2 = recognize_Fstar_k(g)
        doc["fstar"] = cert2.to_json() if cert2 else None
    else:
        doc["components"] = [
            {
                "vertices": list(comp),
                "gamma": gamma(
                    delete_vertices(g, [v for v in range(g.n) if v not in comp]).graph
                ),
            }
            for comp in components(g)
        ]
    _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    print(
        f"n={g.n} gamma={result.gamma} critical={profile.is_critical} "
        f"weak_bicritical={profile.is_weak_bicritical}",
        file=sys.stderr,
    )
    return EXIT_OK


def _emit_instances(instances, args) -> int:
    payload = [
        {"graph6": to_graph6(inst.graph), **inst.sidecar()} for inst in instances
    ]
    if args.out:
        g6_path = Path(args.out)
        g6_path.write_text("".join(p["graph6"] + "\n" for p in payload))
        Path(str(g6_path) + ".json").write_text(
            json.dumps(payload, sort_keys=True, indent=2) + "\n"
        )
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    print(f"generated {len(payload)} graph(s)", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "fk":
        if args.m:
            m = tuple(int(x) for x in args.m.split(","))
            inst = build_Fk(FkParams(len(m) + 1, m))
            return _emit_instances([inst], args)
        if args.k is None or args.max_order is None:
            raise ValueError("fk needs --m, or --k with --max-order")
        return _emit_instances(enumerate_Fk(args.k, args.max_order), args)
    if args.family == "fstar2":
        variant = Fstar2Variant(args.variant)
        return _emit_instances([build_Fstar2(variant, args.m_value)], args)
    if args.family == "fpp3":
        return _emit_instances([build_Fpp3(args.m1, args.m2, args.variant_num)], args)
    if args.family == "fstar":
        if args.k is None or args.max_order is None:
            raise ValueError("fstar needs --k and --max-order")
        return _emit_instances(enumerate_Fstar_k(args.k, args.max_order), args)
    raise ValueError(f"unknown family {args.family!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    theorems = (
        tuple(t.strip() for t in args.theorems.split(",") if t.strip())
        if args.theorems
        else ALL_CHECKS
    )
    config = ScanConfig(
        n_max=args.n_max,
        connected_only=args.connected_only,
        theorems=theorems,
        seed=args.seed,
        pairs=args.pairs,
        family_order_cap=args.family_order_cap,
        jobs=args.jobs,
        graph_file=args.graphs,
    )
    checks = run_scan(config)
    text = report_json(checks, config)
    out = args.out or "verify_report.json"
    Path(out).write_text(text)
    failures = sum(c.fail_count for c in checks)
    for c in checks:
        print(
            f"{c.theorem_id:14s} {c.status:7s} hypothesis={c.hypothesis_count} "
            f"pass={c.pass_count} fail={c.fail_count} skipped={c.skipped_count}",
            file=sys.stderr,
        )
    print(f"report written to {out}", file=sys.stderr)
    return EXIT_VERIFY_FAIL if failures else EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    g = _load_graph(args.g_file, args.format)
    h = _load_graph(args.h_file, args.format)
    verdict = are_isomorphic(g, h)
    _emit(json.dumps({"isomorphic": verdict}) + "\n", args.out)
    print("isomorphic" if verdict else "not isomorphic", file=sys.stderr)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.from_format)
    _emit(dumps(g, args.to_format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcrit",
        description="domination numbers, criticality, and extremal families of small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full profile of one graph")
    p_analyze.add_argument("input", help="graph file, or - for stdin")
    p_analyze.add_argument("--format", choices=FORMATS, default="graph6")
    p_analyze.add_argument("--budget", type=int, default=None)
    p_analyze.add_argument("--out", default=None)
    p_analyze.set_defaults(func=cmd_analyze)

    p_gen = sub.add_parser("gen", help="construct or enumerate family members")
    p_gen.add_argument("family", choices=("fk", "fstar2", "fpp3", "fstar"))
    p_gen.add_argument("--k", type=int, default=None)
    p_gen.add_argument("--m", default=None, help="comma-separated block sizes (fk)")
    p_gen.add_argument(
        "--variant",
        default="matching",
        choices=[v.value for v in Fstar2Variant],
        help="fstar2 shape",
    )
    p_gen.add_argument("--m-value", type=int, default=1, help="fstar2 parameter")
    p_gen.add_argument("--m1", type=int, default=2)
    p_gen.add_argument("--m2", type=int, default=2)
    p_gen.add_argument(
        "--variant-num", type=int, default=1, choices=(1, 2), help="fpp3 twin variant"
    )
    p_gen.add_argument("--max-order", type=int, default=None)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="run the theorem checks")
    p_verify.add_argument("--theorems", default=None, help="comma-separated ids")
    p_verify.add_argument(
        "--graphs", default=None, help="graph6 file to scan instead of the atlas"
    )
    p_verify.add_argument("--n-max", type=int, default=7)
    p_verify.add_argument("--connected-only", action="store_true")
    p_verify.add_argument("--seed", type=int, default=1729)
    p_verify.add_argument("--pairs", type=int, default=1000)
    p_verify.add_argument("--family-order-cap", type=int, default=12)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_iso = sub.add_parser("iso", help="isomorphism test for two graphs")
    p_iso.add_argument("g_file")
    p_iso.add_argument("h_file")
    p_iso.add_argument("--format", choices=FORMATS, default="graph6")
    p_iso.add_argument("--out", default=None)
    p_iso.set_defaults(func=cmd_iso)

    p_conv = sub.add_parser("convert", help="convert between graph formats")
    p_conv.add_argument("input")
    p_conv.add_argument("--from", dest="from_format", choices=FORMATS, required=True)
    p_conv.add_argument("--to", dest="to_format", choices=FORMATS, required=True)
    p_conv.add_argument("--out", default=None)
    p_conv.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ScanBudgetError, GammaSetBudgetError) as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
