"""Command-line entry point: ``wecken analyze|pair|ehp|wecken|table|selftest``.

Exit codes: 0 determined, 10 some requested field undetermined, 2 bad
input or contradictory facts, 1 selftest failure.
"""

from __future__ import annotations

import argparse
import re
import sys

from .analyzer import GroupContext, MapFacts, analyze_pair, analyze_self, pair_provenance
from .classifier import wecken
from .ehp import MAX_Q, DimPair, e_injective, e_surjective, kernel_of_E
from .facts import FactFileError
from .knowledge import default_kb, load_table
from .report import (
    ReportDocument,
    analysis_document,
    flat_provenance,
    render_csv,
    render_json,
    render_markdown,
    table_rows,
    verdict_document,
)
from .verdict import DomainError, InconsistentFactsError, PreconditionError, Truth

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 10

# MapFacts field -> CLI flag
FACT_FLAGS = {
    "double_zero": "--double-zero",
    "kervaire_one": "--kervaire-one",
    "torsion_le_2": "--torsion-le-2",
    "hopf_half_even": "--hopf-div-4",
    "desusp_double_zero": "--desusp-double-zero",
    "h0_of_class_zero": "--h0-zero",
    "condition_vi": "--condition-vi",
    "boundary_zero": "--boundary-zero",
    "e_boundary_zero": "--e-boundary-zero",
}
_FIELD_RE = re.compile(r"\b(" + "|".join(sorted(FACT_FLAGS, key=len, reverse=True)) + r")\b")


def tristate(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def group_arg(text: str) -> GroupContext:
    try:
        return GroupContext.parse(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_dims(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="source sphere dimension")
    p.add_argument("--n", type=int, required=True, help="target sphere dimension")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wecken", description="Suspension, Wecken condition and selfcoincidence invariants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="selfcoincidence invariants of f: S^m -> S^n/G")
    _add_dims(p)
    p.add_argument("--group", type=group_arg, default=GroupContext("Z2"), help="trivial, z2, other or other:<order>")
    for field, flag in FACT_FLAGS.items():
        p.add_argument(flag, dest=field, type=tristate, default=None, metavar="true|false")
    _add_format(p)

    p = sub.add_parser("pair", help="reduction for a pair (f1, f2)")
    _add_dims(p)
    p.add_argument("--group", type=group_arg, default=GroupContext("Z2"))
    p.add_argument("--homotopic", type=tristate, required=True, metavar="true|false")
    _add_format(p)

    p = sub.add_parser("ehp", help="injectivity and surjectivity of E")
    _add_dims(p)
    _add_format(p)

    p = sub.add_parser("wecken", help="decide WeC(m, n)")
    _add_dims(p)
    p.add_argument("--no-low-rule", action="store_true", help="skip the m <= n+5 early-out")
    _add_format(p)

    p = sub.add_parser("table", help="suspension and Wecken table over a (q, n) range")
    p.add_argument("--q-min", type=int, default=1)
    p.add_argument("--q-max", type=int, default=MAX_Q)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")

    p = sub.add_parser("selftest", help="diff derived table against the transcription and run invariants")
    p.add_argument("--facts-dir", default=None, help="defaults to $WECKEN_FACTS_DIR or the bundled files")
    p.add_argument("--only", action="append", default=None, help="run only the named check (repeatable)")
    return parser


def _emit(doc: ReportDocument, fmt: str) -> None:
    sys.stdout.write(doc.to_json() + "\n" if fmt == "json" else doc.to_text())


def _flagify(text: str) -> str:
    return _FIELD_RE.sub(lambda mt: FACT_FLAGS[mt.group(1)], text)


def cmd_analyze(args) -> int:
    d = DimPair(args.m, args.n)
    given = {k: getattr(args, k) for k in FACT_FLAGS if getattr(args, k) is not None}
    try:
        facts = MapFacts(**given)
        report = analyze_self(d, args.group, facts)
    except InconsistentFactsError as e:
        raise InconsistentFactsError(_flagify(e.first), _flagify(e.second)) from None
    doc = analysis_document(d, str(args.group), {FACT_FLAGS[k][2:]: v for k, v in given.items()}, report)
    _emit(doc, args.format)
    return EXIT_UNKNOWN if report.undetermined() else EXIT_OK


def cmd_pair(args) -> int:
    d = DimPair(args.m, args.n)
    outcome = analyze_pair(d, args.group, args.homotopic)
    query = {"command": "pair", "m": d.m, "n": d.n, "q": d.q, "group": str(args.group), "homotopic": args.homotopic}
    doc = ReportDocument(query, {"outcome": outcome.value}, flat_provenance(pair_provenance(args.homotopic)))
    _emit(doc, args.format)
    return EXIT_OK


def cmd_ehp(args) -> int:
    d = DimPair(args.m, args.n)
    kb = default_kb()
    results = {"injective": e_injective(d, kb), "surjective": e_surjective(d, kb)}
    doc = verdict_document("ehp", d, results, {"kernel": str(kernel_of_E(d, kb))})
    _emit(doc, args.format)
    return EXIT_OK if all(v.determined for v in results.values()) else EXIT_UNKNOWN


def cmd_wecken(args) -> int:
    d = DimPair(args.m, args.n)
    v = wecken(d, use_low_rule=not args.no_low_rule)
    _emit(verdict_document("wecken", d, {"wecken": v}), args.format)
    return EXIT_OK if v.value in (Truth.YES, Truth.NO) else EXIT_UNKNOWN


def cmd_table(args) -> int:
    if args.q_min > args.q_max or args.n_min > args.n_max:
        raise DomainError("empty range")
    if args.q_max > MAX_Q:
        raise DomainError(f"q up to {MAX_Q} only, got q_max={args.q_max}")
    rows = table_rows(args.q_min, args.q_max, args.n_min, args.n_max)
    if not rows:
        raise DomainError("range contains no even n with m >= 1")
    if args.format == "csv":
        sys.stdout.write(render_csv(rows))
    elif args.format == "json":
        sys.stdout.write(render_json(rows))
    else:
        sys.stdout.write(render_markdown(rows, load_table()))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import CHECKS, run_selftest

    only = args.only
    if only:
        unknown = set(only) - {name for name, _ in CHECKS}
        if unknown:
            raise DomainError(f"unknown check(s): {', '.join(sorted(unknown))}")
    failures = run_selftest(args.facts_dir, only)
    if failures:
        print(failures[0])
        if len(failures) > 1:
            print(f"({len(failures) - 1} further failure(s))")
        return EXIT_FAIL
    print("selftest: all checks passed")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "pair": cmd_pair,
    "ehp": cmd_ehp,
    "wecken": cmd_wecken,
    "table": cmd_table,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (DomainError, PreconditionError, InconsistentFactsError, FactFileError, OSError) as e:
        print(f"wecken {args.command}: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
