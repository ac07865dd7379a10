"""Command-line front end.

Usage:
    hamseq check 2,2,2,2,2 --format json
    hamseq generate --n 9 --k 3 --all
    hamseq verify 2,2,4,4,4,4,6 --jobs 4
    hamseq count --n 9
    hamseq witness --n 7 --k 2 --which cnk

Exit codes: 0 forcibly hamiltonian (or plain success), 1 bad input,
2 not graphical, 3 not forcibly hamiltonian, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from hamseq.degseq import DegreeSequence, normalize
from hamseq.errors import HamseqError
from hamseq.graphkit import build_cnk, build_exception_graph, to_edge_list
from hamseq.nwgen import (
    NwParams,
    PiPrime,
    count_lower_bound,
    count_total_lower_bound,
    enumerate_nw_sequences,
    nw_construct,
)
from hamseq.verify import VerificationReport, Verdict, classify, verify_forcibly_hamiltonian

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_GRAPHICAL = 2
EXIT_NOT_FORCIBLY = 3
EXIT_INCONCLUSIVE = 4

VERDICT_EXIT = {
    Verdict.FORCIBLY_HAMILTONIAN: EXIT_OK,
    Verdict.NOT_GRAPHICAL: EXIT_NOT_GRAPHICAL,
    Verdict.NOT_FORCIBLY_HAMILTONIAN: EXIT_NOT_FORCIBLY,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    pass


def parse_sequence_raw(text: str) -> list[int]:
    try:
        raw = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise UsageError(f"cannot parse {text!r}: expected comma-separated integers")
    if not raw:
        raise UsageError("empty sequence")
    return raw


def parse_sequence(text: str) -> DegreeSequence:
    return normalize(parse_sequence_raw(text))


def parse_budget(text: str) -> Union[int, None, str]:
    if text == "auto":
        return text
    if text.lower() in ("none", "unlimited", "inf"):
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be a positive integer or 'none'")
    return value


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _report_text(report: VerificationReport) -> str:
    d = report.to_dict()
    lines = [
        f"sequence: {report.sequence}",
        f"graphical: {d['graphical']}",
        f"chvatal: satisfied={d['chvatal']['satisfied']} failing_k={d['chvatal']['failing_k']}",
        f"nw_shape_k: {d['nw_shape_k']}",
        f"exception: {d['exception']}",
        f"verdict: {d['verdict']}",
    ]
    if report.realizations_checked is not None:
        lines.append(f"realizations_checked: {report.realizations_checked}")
        lines.append(f"closure_accepts: {report.closure_accepts}")
    if report.counterexample is not None:
        lines.append("counterexample:")
        lines.append(to_edge_list(report.counterexample).rstrip("\n"))
    return "\n".join(lines) + "\n"


def _report_csv(report: VerificationReport) -> str:
    d = report.to_dict()
    flat = {
        "sequence": str(report.sequence),
        "graphical": d["graphical"],
        "chvatal.satisfied": d["chvatal"]["satisfied"],
        "chvatal.failing_k": d["chvatal"]["failing_k"],
        "nw_shape_k": d["nw_shape_k"],
        "exception": d["exception"],
        "verdict": d["verdict"],
        "realizations_checked": d["realizations_checked"],
        "closure_accepts": d["closure_accepts"],
        "counterexample": ""
        if report.counterexample is None
        else ";".join(f"{u} {v}" for u, v in report.counterexample.edges()),
    }
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in flat.items():
        writer.writerow([key, "" if value is None else value])
    return buf.getvalue()


def _render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return _report_csv(report)
    return _report_text(report)


def cmd_check(args: argparse.Namespace) -> tuple[str, int]:
    report = classify(parse_sequence(args.sequence))
    return _render_report(report, args.format), VERDICT_EXIT[report.verdict]


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = verify_forcibly_hamiltonian(parse_sequence(args.sequence), budget=args.budget, jobs=args.jobs)
    return _render_report(report, args.format), VERDICT_EXIT[report.verdict]


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _render_sequences(seqs: list[DegreeSequence], fmt: str, n: int, k: int) -> str:
    if fmt == "json":
        return json.dumps({"n": n, "k": k, "sequences": [list(s.degrees) for s in seqs]}, indent=2) + "\n"
    return "".join(f"{s}\n" for s in seqs) if fmt == "text" else _csv_rows([list(s.degrees) for s in seqs])


def _csv_rows(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_generate(args: argparse.Namespace) -> tuple[str, int]:
    _require(args, "n", "k")
    p = NwParams(args.n, args.k)
    if args.all == (args.pi_prime is not None):
        raise UsageError("generate needs exactly one of --all or --pi-prime")
    if args.all:
        seqs = sorted(enumerate_nw_sequences(p))
    else:
        entries = parse_sequence_raw(args.pi_prime)
        if len(entries) != p.k - 1:
            raise UsageError(f"--pi-prime needs k-1 = {p.k - 1} entries, got {len(entries)}")
        seqs = [nw_construct(p, PiPrime(tuple(entries)))]
    return _render_sequences(seqs, args.format, p.n, p.k), EXIT_OK


def cmd_count(args: argparse.Namespace) -> tuple[str, int]:
    _require(args, "n")
    n = args.n
    total_bound = count_total_lower_bound(n)
    ks = [args.k] if args.k is not None else list(range(2, (n - 1) // 2 + 1))
    rows = []
    for k in ks:
        count = len(enumerate_nw_sequences(NwParams(n, k)))
        rows.append({"k": k, "count": count, "bound": count_lower_bound(k)})
    total = sum(r["count"] for r in rows)
    if args.format == "json":
        payload = {
            "n": n,
            "per_k": [{"k": r["k"], "count": r["count"], "bound": _fmt_fraction(r["bound"])} for r in rows],
        }
        if args.k is None:
            payload["total"] = total
            payload["total_bound"] = _fmt_fraction(total_bound)
        return json.dumps(payload, indent=2) + "\n", EXIT_OK
    if args.format == "csv":
        table = [["n", "k", "count", "bound"]] + [[n, r["k"], r["count"], _fmt_fraction(r["bound"])] for r in rows]
        if args.k is None:
            table.append([n, "total", total, _fmt_fraction(total_bound)])
        return _csv_rows(table), EXIT_OK
    lines = [f"n={n} k={r['k']}: count {r['count']}, bound {_fmt_fraction(r['bound'])}" for r in rows]
    if args.k is None:
        lines.append(f"n={n} total: count {total}, bound {_fmt_fraction(total_bound)}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_witness(args: argparse.Namespace) -> tuple[str, int]:
    _require(args, "n", "k")
    if args.which == "cnk":
        g = build_cnk(args.n, args.k)
    else:
        g = build_exception_graph(args.n, args.k, 1)
    if args.format == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n", EXIT_OK
    if args.format == "csv":
        return _csv_rows([["u", "v"]] + [list(e) for e in g.edges()]), EXIT_OK
    return to_edge_list(g), EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "count": cmd_count,
    "witness": cmd_witness,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2, which is reserved for "not graphical"
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", type=Path, default=None, help="write output here instead of stdout")

    ap = _Parser(prog="hamseq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="theory-only classification")
    p.add_argument("sequence")

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification over realizations")
    p.add_argument("sequence")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=parse_budget, default="auto")

    p = sub.add_parser("generate", parents=[common], help="Nash-Williams (n,k)-sequences")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--pi-prime", dest="pi_prime")

    p = sub.add_parser("count", parents=[common], help="count Nash-Williams sequences against the lower bound")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("witness", parents=[common], help="emit a nonhamiltonian witness graph")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--which", choices=("cnk", "exception"), default="cnk")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, HamseqError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
