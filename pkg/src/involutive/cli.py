"""Command-line interface: ``involutive {complete,check,bench,axioms,hilbert}``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .completion import CapExceeded, Limits, complete, first_unreduced_prolongation
from .division import DivisionKind, axiom_check
from .monomial import Ordering, format_monomial
from .textio import ParseError, read_monomial_set

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _division(name: str) -> DivisionKind:
    try:
        return DivisionKind.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ordering(name: str) -> Ordering:
    try:
        return Ordering.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _limits(args, U) -> Limits:
    base = Limits.default(list(U), U.n, args.division)
    return Limits(args.max_degree or base.max_degree, args.max_elements or base.max_elements)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_complete(args) -> int:
    U = read_monomial_set(args.input)
    try:
        res = complete(U, args.division, args.order, _limits(args, U))
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.format == "json":
            record = exc.partial.to_dict()
            record["error"] = str(exc)
            _emit(json.dumps(record, indent=2) + "\n", args.out)
        return EXIT_CAP
    if args.format == "json":
        _emit(json.dumps(res.to_dict(), indent=2) + "\n", args.out)
    else:
        _emit(res.to_text(), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    U = read_monomial_set(args.input)
    bad = first_unreduced_prolongation(U, args.division)
    if args.format == "json":
        record = {"division": args.division.value, "involutive": bad is None}
        if bad is not None:
            u, x, v = bad
            record["witness"] = {"element": list(u), "variable": x + 1, "prolongation": list(v)}
        print(json.dumps(record))
    elif bad is None:
        print("involutive: yes")
    else:
        u, x, v = bad
        print("involutive: no")
        print(f"witness: {format_monomial(u)} * x{x + 1} = {format_monomial(v)}"
              f" ({' '.join(map(str, v))}) has no involutive divisor")
    return EXIT_OK


def cmd_bench(args) -> int:
    from .bench import run_bench
    from .fixtures import FIXTURES

    names = args.fixtures.split(",") if args.fixtures else None
    for name in names or []:
        if name not in FIXTURES:
            print(f"error: unknown fixture {name!r}; known: {', '.join(FIXTURES)}", file=sys.stderr)
            return EXIT_USAGE
    limits = None
    if args.max_degree or args.max_elements:
        limits = Limits(args.max_degree, args.max_elements or 50_000)

    def progress(cell):
        if args.verbose:
            print(f"{cell.fixture:9s} {cell.division.label:6s} {cell.status:7s} "
                  f"{cell.length} ({cell.elapsed or 0:.2f}s)", file=sys.stderr)

    report = run_bench(names, args.division or None, args.all, limits, progress)
    render = {"markdown": report.to_markdown, "csv": report.to_csv, "json": report.to_json}
    text = render[args.format]()
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        ext = {"markdown": "md", "csv": "csv", "json": "json"}[args.format]
        (out / f"bench.{ext}").write_text(text)
        if not args.no_plot:
            from .plotting import bench_figure
            bench_figure(report, out / "bench_lengths.png")
        print(f"wrote {out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    if args.strict and report.mismatches():
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_axioms(args) -> int:
    from .sampling import random_instance

    kinds = args.division or list(DivisionKind)
    lines = []
    records = []
    for kind in kinds:
        rng = random.Random(args.seed)
        passed = 0
        first = None
        vacuous = kind.is_global
        for _ in range(args.trials):
            n, U = random_instance(rng, args.max_vars, args.max_size, args.max_deg)
            rep = axiom_check(kind, U, subset_samples=args.subsets, rng=rng)
            if rep.passed:
                passed += 1
            elif first is None:
                first = rep
        records.append({"division": kind.value, "trials": args.trials, "passed": passed,
                        "d": "vacuous" if vacuous else "checked",
                        "first_failure": first.to_dict() if first else None})
        line = f"{kind.value:14s} {passed}/{args.trials} pass"
        if vacuous:
            line += "  (d) vacuous"
        if first is not None:
            line += f"  first failure: ({first.failed_condition}) witness {first.witness}"
        lines.append(line)
    if args.format == "json":
        print(json.dumps({"seed": args.seed, "results": records}, indent=2))
    else:
        print(f"seed {args.seed}, n <= {args.max_vars}, |U| <= {args.max_size}, "
              f"deg <= {args.max_deg}")
        print("\n".join(lines))
    return EXIT_OK if all(r["passed"] == r["trials"] for r in records) else EXIT_MISMATCH


def cmd_hilbert(args) -> int:
    from .hilbert import format_poly, hilbert_data

    U = read_monomial_set(args.input)
    try:
        res = complete(U, args.division, args.order, _limits(args, U))
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    data = hilbert_data(res)
    bound = args.degree_bound
    if args.format == "json":
        record = data.to_dict(bound)
        record["division"] = args.division.value
        text = json.dumps(record, indent=2) + "\n"
    else:
        rows = ["s\tHF(s)"] + [f"{s}\t{data.hf(s)}" for s in range(bound + 1)]
        rows.append(f"# Hilbert polynomial: {format_poly(data.polynomial)}")
        rows.append("# coefficients (s^0 upward): " + " ".join(str(c) for c in data.polynomial))
        rows.append(f"# index of regularity: {data.regularity}")
        text = "\n".join(rows) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / ("hilbert.json" if args.format == "json" else "hilbert.tsv")).write_text(text)
        if not args.no_plot:
            from .plotting import hilbert_figure
            hilbert_figure(data, bound, out / "hilbert.png")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="involutive", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def limits_flags(sp):
        sp.add_argument("--max-degree", type=int, default=None)
        sp.add_argument("--max-elements", type=int, default=None)

    sp = sub.add_parser("complete", help="complete a monomial set to a minimal involutive basis")
    sp.add_argument("input")
    sp.add_argument("--division", type=_division, default=DivisionKind.JANET)
    sp.add_argument("--order", type=_ordering, default=None,
                    help="completion ordering (default depends on the division)")
    limits_flags(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_complete)

    sp = sub.add_parser("check", help="test whether a monomial set is involutive")
    sp.add_argument("input")
    sp.add_argument("--division", type=_division, default=DivisionKind.JANET)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("bench", help="reproduce the benchmark table")
    sp.add_argument("--fixtures", default=None, help="comma-separated fixture names")
    sp.add_argument("--division", type=_division, action="append", default=None)
    sp.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    sp.add_argument("--out", default=None, help="directory for the report and figure")
    sp.add_argument("--all", action="store_true", help="also run cells left empty in the table")
    sp.add_argument("--strict", action="store_true", help="exit 3 on any length mismatch")
    sp.add_argument("--no-plot", action="store_true")
    sp.add_argument("-v", "--verbose", action="store_true")
    limits_flags(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("axioms", help="randomized check of the division axioms")
    sp.add_argument("--division", type=_division, action="append", default=None)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-vars", type=int, default=5)
    sp.add_argument("--max-size", type=int, default=12)
    sp.add_argument("--max-deg", type=int, default=6)
    sp.add_argument("--subsets", type=int, default=8, help="random subsets per set for (d)")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_axioms)

    sp = sub.add_parser("hilbert", help="Hilbert function, polynomial and regularity")
    sp.add_argument("input")
    sp.add_argument("--division", type=_division, default=DivisionKind.JANET)
    sp.add_argument("--order", type=_ordering, default=None)
    sp.add_argument("--degree-bound", type=int, default=10)
    limits_flags(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--out", default=None, help="directory for the table and figure")
    sp.add_argument("--no-plot", action="store_true")
    sp.set_defaults(func=cmd_hilbert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
