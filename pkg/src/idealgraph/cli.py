"""Command-line interface: analyze tables, generate families, enumerate
semigroups, and run the theorem-check battery over corpora."""

from __future__ import annotations

import argparse
import json
import sys

from .invariants import BUDGET_ENV_VAR
from .semigroup import FamilySpec, TableFormatError, generate, load_table, parse_family
from .theorems import CorpusSpec, check_theorems, list_checks, run_corpus


def _write(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    from .graph import build_gamma
    from .ideals import all_left_ideals
    from .invariants import compute_report

    table = load_table(args.file)
    family = all_left_ideals(table)
    g = build_gamma(family)
    if args.dot:
        _write(g.to_dot(name=table.name or "gamma"), args.output)
        return 0
    report = compute_report(g, family, budget_ms=args.budget_ms)
    if args.json:
        doc = {
            "schema": 1,
            "name": table.name,
            "order": table.order,
            "ideals": family.to_json_dict(),
            "graph": g.to_json_dict(),
            "invariants": report.to_json_dict(),
        }
        _write(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [f"semigroup {table.name or '<unnamed>'} (order {table.order})"]
    lines.append(f"nontrivial left ideals: {g.n}  minimal: {len(family.minimal)}  "
                 f"maximal: {len(family.maximal)}")
    lines.append(f"vertices: {', '.join(g.labels)}")
    d = report.to_json_dict()
    for key in ("edge_count", "connected", "component_count", "diameter", "girth",
                "is_complete", "is_null", "is_regular", "is_bipartite", "is_tree",
                "is_star", "is_eulerian", "clique_number", "chromatic_number",
                "independence_number", "domination_number", "metric_dimension",
                "strong_metric_dimension", "planar", "perfect", "automorphism_order"):
        lines.append(f"{key}: {d[key]}")
    if report.aborted:
        lines.append(f"aborted (budget): {', '.join(report.aborted)}")
    _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_gen(args) -> int:
    params = tuple(int(p) for p in args.params.split(",") if p.strip()) if args.params else ()
    spec = FamilySpec(kind=args.family, params=params)
    table = generate(spec)
    if args.json:
        _write(json.dumps(table.to_json_dict(), indent=2) + "\n", args.output)
    else:
        _write(table.to_text(), args.output)
    return 0


def cmd_enumerate(args) -> int:
    from .enumeration import count_semigroups, enumerate_semigroups

    if args.count_only:
        print(count_semigroups(args.order))
        return 0
    out = sys.stdout if not args.output else open(args.output, "w", encoding="utf-8")
    try:
        for table in enumerate_semigroups(args.order):
            out.write(json.dumps(table.to_json_dict()) + "\n")
    finally:
        if args.output:
            out.close()
    return 0


def cmd_check(args) -> int:
    table = load_table(args.file)
    report = check_theorems(table, budget_ms=args.budget_ms)
    if args.json:
        _write(json.dumps(report.to_json_dict(table), indent=2) + "\n", args.output)
    else:
        lines = [f"semigroup {table.name or '<unnamed>'} (order {table.order})"]
        for c in report.checks:
            line = f"{c.status:13s} {c.id}"
            if c.status == "fail":
                line += f"  witness={json.dumps(c.witness)}"
            lines.append(line)
        _write("\n".join(lines) + "\n", args.output)
    return 0 if not report.failures and not report.inconclusive else 1


def cmd_check_corpus(args) -> int:
    sources = [s for s in (args.order, args.families, args.glob) if s is not None]
    if len(sources) != 1:
        print("check-corpus needs exactly one of --order, --families, --glob",
              file=sys.stderr)
        return 2
    if args.order is not None:
        spec = CorpusSpec(source="enumerate", order=args.order)
    elif args.families is not None:
        specs = [parse_family(s) for s in args.families.split()]
        spec = CorpusSpec(source="families", families=specs)
    else:
        spec = CorpusSpec(source="glob", pattern=args.glob)

    last = [0]

    def progress(summary):
        if summary.processed - last[0] >= 10000:
            last[0] = summary.processed
            print(f"... {summary.processed} processed, "
                  f"{len(summary.counterexamples)} counterexamples", file=sys.stderr)

    summary = run_corpus(
        spec,
        jobs=args.jobs,
        budget_ms=args.budget_ms,
        fail_fast=args.fail_fast,
        out_path=args.output,
        progress=progress if not args.quiet else None,
    )
    doc = summary.to_json_dict()
    print(f"processed: {doc['processed']}  with zero: {doc['with_zero']}")
    for cid, slots in sorted(doc["per_check"].items()):
        tot = {k: slots["plain"][k] + slots["zero"][k]
               for k in ("pass", "fail", "inapplicable", "inconclusive")}
        print(f"  {cid}: pass={tot['pass']} fail={tot['fail']} "
              f"inapplicable={tot['inapplicable']} inconclusive={tot['inconclusive']}")
    for ce in summary.counterexamples[:20]:
        print(f"COUNTEREXAMPLE {ce['semigroup']} {ce['check']} "
              f"witness={json.dumps(ce['witness'])}")
    for item in summary.inconclusive[:20]:
        print(f"INCONCLUSIVE {item['semigroup']} {item['check']}")
    return 0 if summary.ok else 1


def cmd_list_checks(args) -> int:
    for cid, desc in list_checks():
        if args.json:
            print(json.dumps({"id": cid, "description": desc}))
        else:
            print(f"{cid}\n    {desc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="idealgraph",
        description="Intersection graphs of nontrivial left ideals of finite "
                    "semigroups: construction, invariants, and theorem checks. "
                    f"Default per-invariant time budget comes from ${BUDGET_ENV_VAR}.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full invariant report for one Cayley table")
    a.add_argument("file", help="table file (text or .json)")
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON report")
    fmt.add_argument("--dot", action="store_true", help="emit the graph in DOT format")
    a.add_argument("-o", "--output", help="write to file instead of stdout")
    a.add_argument("--budget-ms", type=float, default=None,
                   help="per-invariant time budget in milliseconds")
    a.set_defaults(fn=cmd_analyze)

    g = sub.add_parser("gen", help="generate a Cayley table from a named family")
    g.add_argument("--family", required=True,
                   help="family kind, e.g. right-zero, rectangular-band")
    g.add_argument("--params", default="", help="comma-separated sizes, e.g. 2,4")
    g.add_argument("--json", action="store_true", help="emit JSON instead of text")
    g.add_argument("-o", "--output", help="write to file instead of stdout")
    g.set_defaults(fn=cmd_gen)

    e = sub.add_parser("enumerate", help="enumerate all semigroups of one order")
    e.add_argument("--order", type=int, required=True, help="semigroup order (1..5)")
    e.add_argument("--count-only", action="store_true", help="print only the count")
    e.add_argument("-o", "--output", help="write JSON-lines to file")
    e.set_defaults(fn=cmd_enumerate)

    c = sub.add_parser("check", help="run every theorem check on one table")
    c.add_argument("file", help="table file (text or .json)")
    c.add_argument("--json", action="store_true", help="emit a JSON report")
    c.add_argument("-o", "--output", help="write to file instead of stdout")
    c.add_argument("--budget-ms", type=float, default=None,
                   help="per-check time budget in milliseconds")
    c.set_defaults(fn=cmd_check)

    cc = sub.add_parser("check-corpus", help="run the checks over a semigroup corpus")
    cc.add_argument("--order", type=int, help="enumerate all semigroups of this order")
    cc.add_argument("--families",
                    help="whitespace-separated family specs, e.g. "
                         "'right-zero:3 rectangular-band:2,4'")
    cc.add_argument("--glob", help="glob pattern of table files")
    cc.add_argument("--fail-fast", action="store_true",
                    help="stop at the first counterexample or inconclusive check")
    cc.add_argument("--jobs", type=int, default=1, help="worker processes")
    cc.add_argument("--budget-ms", type=float, default=None,
                    help="per-check time budget in milliseconds")
    cc.add_argument("-o", "--output", help="write per-semigroup JSON-lines here")
    cc.add_argument("--quiet", action="store_true", help="suppress progress lines")
    cc.set_defaults(fn=cmd_check_corpus)

    lc = sub.add_parser("list-checks", help="list every registered theorem check")
    lc.add_argument("--json", action="store_true", help="one JSON object per line")
    lc.set_defaults(fn=cmd_list_checks)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (TableFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
