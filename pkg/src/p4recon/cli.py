"""Command-line entry point: ``p4recon {enumerate,classify,deck,verify,crosscheck}``.

Exit status is 0 on success, 1 when a verification finds a counterexample or
a failed check, and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import oracles, suites
from .canonical import from_graph6
from .deck import (
    DeckError,
    deck_of,
    degree_sequence_from_deck,
    edge_count_from_deck,
    format_deck,
    is_p_disconnected_deck,
    is_spider_deck,
    parse_deck,
    reconstruct_bruteforce,
)
from .enumeration import (
    FILTERS,
    MAX_CATALOGUE_N,
    all_graphs,
    classify_row,
    run_suites,
    save_catalogue,
    verify_reconstruction,
)
from .graph_core import GraphError
from .pstructure import is_p_connected

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows if len(rows) != 1 else rows[0], indent=2) + "\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    out.write("\t".join(keys) + "\n")
    for row in rows:
        out.write("\t".join(_cell(row[k]) for k in keys) + "\n")


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


def _read_graph6(tokens: Sequence[str], files: Sequence[str]) -> list[str]:
    lines: list[str] = []
    for tok in tokens:
        if tok == "-":
            lines += sys.stdin.read().split()
        else:
            lines.append(tok)
    for name in files:
        try:
            lines += Path(name).read_text().split()
        except OSError as exc:
            raise UsageError(f"cannot read {name!r}: {exc.strerror}") from None
    if not tokens and not files:
        lines += sys.stdin.read().split()
    return lines


def _parse(token: str):
    try:
        return from_graph6(token)
    except GraphError as exc:
        raise UsageError(f"bad graph6 token {token!r}: {exc}") from None


def _check_n(n: int, lo: int, hi: int = MAX_CATALOGUE_N) -> None:
    if not lo <= n <= hi:
        raise UsageError(f"n={n} outside supported range {lo}..{hi}")


def cmd_enumerate(args) -> int:
    _check_n(args.n, 1)
    cat = all_graphs(args.n)
    if args.out:
        save_catalogue(cat, args.out)
        _emit([{"n": args.n, "graphs": len(cat), "path": str(args.out)}], args.format, sys.stdout)
    else:
        sys.stdout.write("".join(c.decode("ascii") + "\n" for c in cat.codes))
    return EXIT_OK


def cmd_classify(args) -> int:
    rows = []
    for token in _read_graph6(args.graphs, args.file):
        g = _parse(token)
        if g.n < 1:
            raise UsageError(f"graph6 token {token!r} has no vertices")
        row = classify_row(suites.Facts(g))
        row = {"input": token, **row}
        rows.append(row)
    _emit(rows, args.format, sys.stdout)
    return EXIT_OK


def cmd_deck(args) -> int:
    if args.from_deck:
        try:
            d = parse_deck(Path(args.from_deck).read_text() if args.from_deck != "-" else sys.stdin.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.from_deck!r}: {exc.strerror}") from None
        except GraphError as exc:
            raise UsageError(f"bad deck card: {exc}") from None
        label = args.from_deck
    else:
        if not args.graph:
            raise UsageError("deck needs a graph6 argument or --from-deck")
        g = _parse(args.graph)
        if g.n < 1:
            raise UsageError(f"graph6 token {args.graph!r} has no vertices")
        d = deck_of(g)
        label = args.graph
    if args.emit_cards:
        sys.stdout.write(format_deck(d))
        return EXIT_OK
    row: dict = {"input": label, "n": d.n, "cards": [c.decode("ascii") for c in d.cards]}
    if d.n >= 3:
        row["edges"] = edge_count_from_deck(d)
        row["degree_sequence"] = degree_sequence_from_deck(d)
        row["spider_deck"] = is_spider_deck(d)
        row["p_disconnected_deck"] = is_p_disconnected_deck(d)
        row["p_connected_cards"] = sum(1 for g in d.card_graphs() if is_p_connected(g))
    if args.reconstruct:
        _check_n(d.n, 1)
        report = reconstruct_bruteforce(d, all_graphs(d.n).graphs, jobs=args.jobs)
        row["reconstructions"] = [c.decode("ascii") for c in report.matches]
        row["unique"] = report.unique
    _emit([row], args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_n(args.n, 3)
    if args.filter is not None and args.filter not in FILTERS:
        raise UsageError(f"unknown class filter {args.filter!r}; choose from {', '.join(sorted(FILTERS))}")
    report = verify_reconstruction(args.n, args.filter, jobs=args.jobs)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_tsv())
    scope = f" ({args.filter}: {report.filtered})" if args.filter else ""
    groups = "all singleton" if report.reconstruction_holds else f"largest has {report.max_group_size}"
    print(f"{report.graphs} graphs on {args.n} vertices{scope}; {report.deck_groups} deck groups, {groups}",
          file=sys.stderr)
    for group in report.counterexamples:
        print("counterexample: " + " ".join(group), file=sys.stderr)
    for name, s in report.suites.items():
        if not s.passed:
            print(f"check {name} failed on: " + " ".join(s.violations), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _crosscheck_catalogue(n: int) -> dict:
    augmented = set(all_graphs(n).codes)
    row = {"suite": "catalogue", "n": n, "augmented": len(augmented), "burnside": oracles.burnside_count(n)}
    passed = row["augmented"] == row["burnside"]
    if n <= 7:
        naive = oracles.naive_classes(n)
        row["naive"] = len(naive)
        passed = passed and naive == augmented
    row["passed"] = passed
    return row


def cmd_crosscheck(args) -> int:
    _check_n(args.n, 1)
    names = ["catalogue", suites.COMPOSITION_SUITE, *suites.CHECKS]
    if args.suite not in names:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(names)}")
    if args.suite == "catalogue":
        row = _crosscheck_catalogue(args.n)
    else:
        result = run_suites(args.n, [args.suite], jobs=args.jobs).get(args.suite)
        checked = result.checked if result else 0
        violations = result.violations if result else []
        row = {"suite": args.suite, "n": args.n, "checked": checked,
               "violations": violations, "passed": not violations}
    _emit([row], args.format, sys.stdout)
    if not row["passed"]:
        print(f"crosscheck {args.suite} failed at n={args.n}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="p4recon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list all graphs on n vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="classify graph6 graphs")
    p.add_argument("graphs", nargs="*", metavar="GRAPH6")
    p.add_argument("--file", action="append", default=[])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("deck", parents=[common], help="deck of a graph, or analysis of a deck file")
    p.add_argument("graph", nargs="?", metavar="GRAPH6")
    p.add_argument("--emit-cards", action="store_true", help="print the deck in deck text format")
    p.add_argument("--from-deck", metavar="PATH", help="read a deck in deck text format ('-' for stdin)")
    p.add_argument("--reconstruct", action="store_true", help="search the catalogue for graphs with this deck")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("verify", parents=[common], help="check reconstruction and all suites at order n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--filter", dest="filter", metavar="CLASS")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crosscheck", parents=[common], help="run one suite against its oracle")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--suite", required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def run(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"p4recon {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, DeckError) as exc:
        print(f"p4recon {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
