"""Command-line driver.

Exit codes: 0 when every check passed, 1 when a check failed (nonzero
residual or numeric counterexample), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import curve as ec
from . import harness, prover
from .errors import GroupLawError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_curve_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True, help="prime modulus > 3")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grouplaw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prove", help="reduce the symbolic identities modulo the curve ideal")
    p.add_argument("--lemma", action="append", metavar="ID",
                   help="run only this check (repeatable); ids: "
                        + ", ".join(lemma.value for lemma in prover.LemmaId))
    p.add_argument("--audit", action="store_true",
                   help="include the transcription audit and print its per-component diff")
    p.add_argument("--json", type=Path, metavar="PATH", help="write the report as JSON")

    p = sub.add_parser("sweep", help="exhaustive check over all curves with 5 <= p <= max-p")
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--json", type=Path, metavar="PATH")

    p = sub.add_parser("random", help="randomized check at primes of a given bit size")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--bits", type=int, default=31)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", type=Path, metavar="PATH")

    p = sub.add_parser("axioms", help="check every property on one curve")
    _add_curve_flags(p)
    p.add_argument("--exhaustive", action="store_true", help="all tuples instead of random triples")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", type=Path, metavar="PATH")

    p = sub.add_parser("add", help="add two points")
    _add_curve_flags(p)
    p.add_argument("--point", action="append", required=True, metavar="O|x,y")

    p = sub.add_parser("mul", help="multiply a point by a nonnegative scalar")
    _add_curve_flags(p)
    p.add_argument("--point", required=True, metavar="O|x,y")
    p.add_argument("--scalar", type=int, required=True)

    p = sub.add_parser("points", help="list every point of a small curve")
    _add_curve_flags(p)
    return parser


def format_point(P: ec.Point) -> str:
    if isinstance(P, ec.Infinity):
        return "O"
    return f"{P.x.residue},{P.y.residue}"


def _write_json(path: Path | None, text: str) -> None:
    if path is not None:
        path.write_text(text + "\n")


def _cmd_prove(args, out) -> int:
    if args.lemma:
        ids = prover.lemma_ids(args.lemma)
        if args.audit and prover.LemmaId.TranscriptionAudit not in ids:
            ids.append(prover.LemmaId.TranscriptionAudit)
        report = prover.VerificationReport(tuple(prover.check_lemma(i) for i in ids))
    else:
        report = prover.run_all()
    for r in report.results:
        print(f"{r.id.value:22s} {r.status:8s} residual_terms={sum(len(c.residual) for c in r.decisive):<7d}"
              f" peak_terms={r.peak_term_count:<7d} {r.elapsed_millis} ms", file=out)
        if args.audit and r.id is prover.LemmaId.TranscriptionAudit:
            for c in r.components:
                print(f"    [{c.role}] {c.label}: {len(c.residual)} terms", file=out)
    s = report.summary
    print(f"pass={s['pass']} fail={s['fail']} flagged={s['flagged']}", file=out)
    _write_json(args.json, report.to_json(indent=1))
    return EXIT_OK if report.ok else EXIT_FAIL


def _emit_harness(report: harness.HarnessReport, args, out) -> int:
    print("\n".join(report.summary_lines()), file=out)
    _write_json(args.json, report.to_json(indent=1))
    return EXIT_OK if report.ok else EXIT_FAIL


def _curve(args) -> ec.CurveParams:
    return ec.CurveParams(args.p, args.a, args.b)


def run_cli(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "prove":
            return _cmd_prove(args, out)
        if args.command == "sweep":
            return _emit_harness(harness.exhaustive_check(args.max_p), args, out)
        if args.command == "random":
            cfg = harness.HarnessConfig(mode="randomized", trials=args.trials,
                                        prime_bits=args.bits, seed=args.seed)
            return _emit_harness(harness.randomized_check(cfg), args, out)
        if args.command == "axioms":
            if args.trials < 1:
                raise ValueError("--trials must be >= 1")
            report = harness.check_curve(_curve(args), exhaustive=args.exhaustive,
                                         trials=args.trials, seed=args.seed)
            return _emit_harness(report, args, out)
        if args.command == "add":
            params = _curve(args)
            if len(args.point) != 2:
                raise ValueError("add needs exactly two --point flags")
            P, Q = (ec.parse_point(t, params) for t in args.point)
            print(format_point(ec.add(P, Q)), file=out)
            return EXIT_OK
        if args.command == "mul":
            params = _curve(args)
            if args.scalar < 0:
                raise ValueError("--scalar must be nonnegative")
            print(format_point(ec.scalar_mul(args.scalar, ec.parse_point(args.point, params))), file=out)
            return EXIT_OK
        if args.command == "points":
            for P in ec.enumerate_points(_curve(args)):
                print(format_point(P), file=out)
            return EXIT_OK
    except (GroupLawError, ValueError, OSError) as exc:
        print(f"grouplaw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
