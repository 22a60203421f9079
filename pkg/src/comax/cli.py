"""Command-line interface.

    comax ring info <spec>
    comax ring graph <spec> --variant core|full|units|nonunits --format dot|json [-o path]
    comax ring ideals <spec>
    comax ring structure <spec>
    comax verify --theorem T1a|T2|R4|T5|R6|T7|CEX|all [--catalog path] [--json path]
    comax catalog list

Exit codes: 0 all pass/inapplicable, 1 any fail, 2 usage or spec error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import chromatic_number, is_complete_multipartite, max_clique, universal_vertices
from .catalog import default_catalog, load_catalog
from .dsl import build_ring
from .errors import ComaxError, InvalidSpecError, RingAxiomError, SizeLimitError
from .graph import build_graph, export_graph, normalize_variant
from .ideals import is_two_sided, jacobson_radical, maximal_left_ideals
from .ring import (
    central_idempotents,
    characteristic,
    idempotents,
    is_commutative,
    size_cap,
    units,
)
from .structure import wedderburn_report
from .verify import THEOREMS, run_catalog, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


def _fmt_set(R, elems) -> str:
    return "{" + ", ".join(R.format(a) for a in sorted(elems)) + "}"


def cmd_info(args) -> int:
    R = build_ring(args.spec)
    G = build_graph(R, "core")
    lines = [
        f"ring:                 {R.label}",
        f"size:                 {R.size}",
        f"characteristic:       {characteristic(R)}",
        f"commutative:          {is_commutative(R)}",
        f"units:                {len(units(R))}",
        f"idempotents:          {len(idempotents(R))}",
        f"central idempotents:  {_fmt_set(R, central_idempotents(R))}",
        f"maximal left ideals:  {len(maximal_left_ideals(R))}",
        f"|J(R)|:               {len(jacobson_radical(R))}",
        f"core graph:           {len(G)} vertices, {G.edge_count} edges",
    ]
    part = is_complete_multipartite(G)
    if part is not None:
        lines.append(f"complete multipartite: {part.n} parts")
    chi = chromatic_number(G)
    lines.append(f"chromatic number:     {chi.n}{'' if chi.exact else ' (upper bound only)'}")
    clique = max_clique(G)
    lines.append(f"clique number:        {clique.size}{'' if clique.exact else ' (lower bound only)'}")
    lines.append(f"universal vertices:   {_fmt_set(R, universal_vertices(G).universal)}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_graph(args) -> int:
    R = build_ring(args.spec)
    G = build_graph(R, normalize_variant(args.variant))
    data = export_graph(G, args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def cmd_ideals(args) -> int:
    R = build_ring(args.spec)
    ms = maximal_left_ideals(R)
    print(f"{R.label}: {len(ms)} maximal left ideal(s)")
    for i, m in enumerate(ms, 1):
        sided = "two-sided" if is_two_sided(R, m) else "left only"
        print(f"  m{i} ({len(m)} elements, {sided}): {_fmt_set(R, m.elements)}")
    J = jacobson_radical(R)
    print(f"J(R) ({len(J)} elements): {_fmt_set(R, J.elements)}")
    return EXIT_OK


def cmd_structure(args) -> int:
    R = build_ring(args.spec)
    w = wedderburn_report(R)
    desc = " x ".join(f"M{c.n}(GF({c.q}))" if c.n > 1 else f"GF({c.q})" for c in w.components)
    print(f"{R.label} / J ≅ {desc or '0'}")
    for c in w.components:
        ev = c.evidence
        print(f"  n={c.n} q={c.q}: {ev['cardinality']} elements, {ev['max_left_ideal_count']} maximal left ideals")
    print(f"consistent: {w.consistent}  ({w.note})")
    return EXIT_OK


def cmd_verify(args) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    catalog = load_catalog(args.catalog) if args.catalog else default_catalog()
    reports = run_catalog(catalog, theorems, stop_on_fail=not args.keep_going)
    for r in reports:
        timing = f"  ({r.elapsed:.3f}s)" if args.timings else ""
        print(f"{r.verdict:<13}{r.theorem_id:<5}{r.ring_label}{timing}")
    counts = summarize(reports)
    print(f"{counts['pass']} pass, {counts['fail']} fail, {counts['inapplicable']} inapplicable")
    if args.json:
        doc = [r.to_dict(timings=args.timings) for r in reports]
        Path(args.json).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    failed = [r for r in reports if r.verdict == "fail"]
    for r in failed:
        print("FALSIFICATION WITNESS:", json.dumps(r.to_dict(), indent=2), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_catalog_list(args) -> int:
    for spec in default_catalog():
        print(spec)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comax", description="Comaximal graphs of finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="inspect a single ring")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    p = ring_sub.add_parser("info", help="summary of a ring and its core graph")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)
    p = ring_sub.add_parser("graph", help="export a comaximal graph")
    p.add_argument("spec")
    p.add_argument("--variant", choices=["core", "full", "units", "nonunits"], default="core")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)
    p = ring_sub.add_parser("ideals", help="maximal left ideals and the Jacobson radical")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ideals)
    p = ring_sub.add_parser("structure", help="Wedderburn-Artin components of R/J(R)")
    p.add_argument("spec")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("verify", help="run theorem checks over a catalog")
    p.add_argument("--theorem", choices=[*THEOREMS, "all"], default="all")
    p.add_argument("--catalog", help="catalog file (JSON array or one spec per line)")
    p.add_argument("--json", help="write the report array to this path")
    p.add_argument("--timings", action="store_true", help="record elapsed times (reports stop being byte-stable)")
    p.add_argument("--keep-going", action="store_true", help="do not halt at the first fail")
    p.set_defaults(func=cmd_verify)

    cat = sub.add_parser("catalog", help="catalog utilities")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    p = cat_sub.add_parser("list", help="print the default catalog")
    p.set_defaults(func=cmd_catalog_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        size_cap()
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (InvalidSpecError, RingAxiomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
