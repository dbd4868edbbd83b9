"""Command-line front end.

Subcommands:

* ``bounds``  -- table of (n, f'(n), g(n), f(n), p(n)) in markdown, csv, or
  tsv; the default range is the even weights 2..40.
* ``check``   -- full diagnostic for one partition: Frobenius symbol, ranks,
  Erdos-Gallai slack, and the three verdicts.
* ``count``   -- print a single counter value, for scripting.
* ``witness`` -- realize a partition as an explicit simple graph.

Exit codes: 0 success (check/witness: graphical), 1 not graphical,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence

from .frobenius import successive_ranks, to_frobenius
from .genfunc import count_A, count_B, count_f_gf, count_fprime_gf
from .graphical import count_g, erdos_gallai_report, havel_hakimi_witness
from .partitions import Partition, count_p, from_raw

MAX_TABLE_N = 100

FORMATS = ("markdown", "csv", "tsv")

_STAR_NOTE = (
    "* g(n) is counted by exhaustively testing every partition of n against "
    "the Erdos-Gallai criterion; no closed generating function for it is known."
)


@dataclass(frozen=True)
class CountTableRow:
    """One table row: weight n and the four exact counts."""

    n: int
    fprime: int
    g: int
    f: int
    p: int

    def __post_init__(self) -> None:
        if self.n >= 0 and self.n % 2 == 0:
            if not self.fprime <= self.g <= self.f <= self.p:
                raise ValueError(
                    f"even-weight row violates fprime <= g <= f <= p: {self}"
                )


def bounds_rows(max_n: int, step: int) -> list[CountTableRow]:
    """Rows for n = step, 2*step, ... <= max_n."""
    rows = []
    for n in range(step, max_n + 1, step):
        rows.append(
            CountTableRow(
                n=n,
                fprime=count_fprime_gf(n),
                g=count_g(n),
                f=count_f_gf(n),
                p=count_p(n),
            )
        )
    return rows


def render_rows(rows: Sequence[CountTableRow], fmt: str) -> str:
    """Render a table in the requested format, trailing newline included.

    Machine formats carry bare integers under the header ``n,fprime,g,f,p``;
    markdown pads for alignment and keeps the footnote on the g column.
    """
    if fmt == "csv":
        return _render_delimited(rows, ",")
    if fmt == "tsv":
        return _render_delimited(rows, "\t")
    if fmt == "markdown":
        return _render_markdown(rows)
    raise ValueError(f"unknown format {fmt!r}")


def _render_delimited(rows: Sequence[CountTableRow], sep: str) -> str:
    lines = [sep.join(("n", "fprime", "g", "f", "p"))]
    for r in rows:
        lines.append(sep.join(str(x) for x in (r.n, r.fprime, r.g, r.f, r.p)))
    return "\n".join(lines) + "\n"


def _render_markdown(rows: Sequence[CountTableRow]) -> str:
    headers = ("n", "f'(n)", "g(n)*", "f(n)", "p(n)")
    cells = [tuple(str(x) for x in (r.n, r.fprime, r.g, r.f, r.p)) for r in rows]
    widths = [
        max(len(headers[i]), max((len(row[i]) for row in cells), default=0))
        for i in range(len(headers))
    ]
    lines = ["| " + " | ".join(h.rjust(w) for h, w in zip(headers, widths)) + " |"]
    lines.append("|" + "|".join("-" * (w + 1) + ":" for w in widths) + "|")
    for row in cells:
        lines.append("| " + " | ".join(c.rjust(w) for c, w in zip(row, widths)) + " |")
    lines.append("")
    lines.append(_STAR_NOTE)
    return "\n".join(lines) + "\n"


def _fmt_seq(values: Sequence[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _parse_partition(text: str) -> Partition:
    tokens = [t.strip() for t in text.split(",")]
    if any(not t for t in tokens):
        raise ValueError(f"malformed part list {text!r}")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"malformed part list {text!r}") from None
    return from_raw(values)


def _run_bounds(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if not 1 <= args.max_n <= MAX_TABLE_N:
        parser.error(f"--max-n must lie in [1, {MAX_TABLE_N}]")
    if args.step < 1:
        parser.error("--step must be at least 1")
    sys.stdout.write(render_rows(bounds_rows(args.max_n, args.step), args.format))
    return 0


def _run_check(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        p = _parse_partition(args.parts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    symbol = to_frobenius(p)
    ranks = successive_ranks(symbol)
    report = erdos_gallai_report(p)
    f_condition = symbol.columns + sum(symbol.top) <= sum(symbol.bottom)
    out = [
        f"partition: {_fmt_seq(p.parts)}",
        f"weight: {p.weight}",
        f"frobenius top: {_fmt_seq(symbol.top)}",
        f"frobenius bottom: {_fmt_seq(symbol.bottom)}",
        f"successive ranks: {_fmt_seq(ranks)}",
        "dyson rank: " + (str(p.parts[0] - len(p.parts)) if p.parts else "n/a (empty partition)"),
        f"parity ok: {_yes_no(report.parity_ok)}",
        f"eg slack: {_fmt_seq(report.slack)}",
        f"graphical: {_yes_no(report.graphical)}",
        f"f-condition (columns + sum(top) <= sum(bottom)): {_yes_no(f_condition)}",
        f"all ranks <= -1: {_yes_no(all(r <= -1 for r in ranks))}",
    ]
    sys.stdout.write("\n".join(out) + "\n")
    return 0 if report.graphical else 1


def _run_count(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.n < 0:
        parser.error("n must be nonnegative")
    needs_extra = args.which in ("A", "B")
    has_extra = args.modulus is not None or args.residue is not None
    if needs_extra and (args.modulus is None or args.residue is None):
        parser.error(f"count {args.which} requires both --modulus and --residue")
    if not needs_extra and has_extra:
        parser.error(f"count {args.which} takes no --modulus/--residue")
    try:
        if args.which == "p":
            value = count_p(args.n)
        elif args.which == "g":
            value = count_g(args.n)
        elif args.which == "f":
            value = count_f_gf(args.n)
        elif args.which == "fprime":
            value = count_fprime_gf(args.n)
        elif args.which == "A":
            value = count_A(args.modulus, args.residue, args.n)
        else:
            value = count_B(args.modulus, args.residue, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    print(value)
    return 0


def _run_witness(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        p = _parse_partition(args.parts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    witness = havel_hakimi_witness(p)
    if witness is None:
        print("NOT GRAPHICAL")
        return 1
    for u, v in sorted(witness.edges):
        print(f"{u} {v}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-bounds",
        description="Exact partition counters and graphicality certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser(
        "bounds", help="tabulate (n, f'(n), g(n), f(n), p(n)) over a range of n"
    )
    bounds.add_argument("--max-n", type=int, default=40, dest="max_n")
    bounds.add_argument("--step", type=int, default=2)
    bounds.add_argument("--format", choices=FORMATS, default="markdown")
    bounds.set_defaults(func=_run_bounds)

    check = sub.add_parser("check", help="diagnose one partition in full")
    check.add_argument("parts", help="comma-separated nonnegative integers, any order")
    check.set_defaults(func=_run_check)

    count = sub.add_parser("count", help="print a single counter value")
    count.add_argument("which", choices=("p", "g", "f", "fprime", "A", "B"))
    count.add_argument("n", type=int)
    count.add_argument("--modulus", type=int, default=None)
    count.add_argument("--residue", type=int, default=None)
    count.set_defaults(func=_run_count)

    witness = sub.add_parser(
        "witness", help="print a realizing edge list, or NOT GRAPHICAL"
    )
    witness.add_argument("parts", help="comma-separated nonnegative integers, any order")
    witness.set_defaults(func=_run_witness)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
