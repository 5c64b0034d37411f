"""Command-line front end.

    linkcomplexity bounds "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
    linkcomplexity bounds "strands=3 : 1 -2 1 -2"
    linkcomplexity bounds "th(2)"
    linkcomplexity sweep fib 4..12 --format csv
    linkcomplexity roots "Prime(trefoil,3) #2 D"
    linkcomplexity selftest --quick

Exit codes: 0 success, 2 input error, 3 contradiction between certified bounds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .bounds import BoundContradiction
from .corpus import run_selftest
from .diagram import braid_closure, parse_braid, parse_pd
from .families import FAMILIES, parse_family
from .report import Options, Report, diagram_report, family_report
from .roots import complexity, format_expression, normalize, parse_expression

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CONTRADICTION = 0, 1, 2, 3

_FAMILY_RE = re.compile(r"\s*[a-z]+\s*\(")


class InputError(ValueError):
    pass


# -- input handling --------------------------------------------------------

def _read_source(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    p = Path(text)
    if text and p.suffix in (".pd", ".txt", ".braid") and p.is_file():
        body = [ln for ln in p.read_text().splitlines() if not ln.lstrip().startswith("#")]
        return " ".join(body)
    return text


def build_report(text: str, opts: Options) -> Report:
    """Dispatch on input shape: family spec, braid word or PD code."""
    text = _read_source(text).strip()
    if _FAMILY_RE.match(text) and not text.startswith("X["):
        return family_report(parse_family(text), opts)
    if text.startswith("strands="):
        d = braid_closure(parse_braid(text), name=text)
        return diagram_report(d, text, opts)
    return diagram_report(parse_pd(text), text or "unknot", opts)


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise InputError(f"range must look like a..b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return range(lo, hi + 1)


def sweep_specs(pattern: str, span: range) -> list[str]:
    """``fib`` becomes ``fib(n)``; a pattern must contain the placeholder ``n``."""
    if pattern in FAMILIES:
        if pattern == "torus":
            raise InputError("torus sweeps need a pattern such as 'torus(n,2)'")
        pattern = f"{pattern}(n)"
    if not re.search(r"\bn\b", pattern):
        raise InputError(f"sweep pattern {pattern!r} has no 'n' placeholder")
    return [re.sub(r"\bn\b", str(k), pattern) for k in span]


# -- output ----------------------------------------------------------------

ROW_FIELDS = ("input", "crn", "crn_status", "determinant", "components", "lower", "upper", "note")


def report_row(rep: Report) -> dict:
    row = {
        "input": rep.input,
        "crn": rep.crn.value if rep.crn else "",
        "crn_status": rep.crn.status.value if rep.crn else "",
        "determinant": "" if rep.determinant is None else rep.determinant,
        "components": "" if rep.components is None else rep.components,
        "lower": "" if rep.skipped else rep.interval.lower,
        "upper": "" if rep.skipped or rep.interval.upper is None else rep.interval.upper,
        "note": f"skipped: {rep.skipped}" if rep.skipped else "; ".join(rep.warnings),
    }
    for k, v in rep.extra.items():
        if isinstance(v, (int, str, bool)):
            row[k] = v
    return row


def _table(rows: list[dict]) -> str:
    cols = list(dict.fromkeys(k for r in rows for k in r if k != "note")) + ["note"]
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _csv(rows: list[dict]) -> str:
    cols = list(dict.fromkeys(k for r in rows for k in r))
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def format_report(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json(indent=2)
    if fmt == "csv":
        return _csv([report_row(rep)])
    lines = [f"input       {rep.input}"]
    if rep.crn:
        lines.append(f"crn         {rep.crn.value} ({rep.crn.status.value})")
    if rep.determinant is not None:
        lines.append(f"determinant {rep.determinant}")
    if rep.components is not None:
        lines.append(f"components  {rep.components}")
    lines.append("bounds")
    for b in rep.bounds:
        mark = "" if b.status == "certified" else f" [{b.status}]"
        sym = ">=" if b.kind == "lower" else "<="
        lines.append(f"  c {sym} {b.value:<5} {b.tag}{mark}  {b.expression}")
    lines.append(f"interval    {rep.interval}")
    for k, v in rep.extra.items():
        lines.append(f"{k:<11} {v}")
    lines += [f"warning     {w}" for w in rep.warnings]
    return "\n".join(lines)


def format_sweep(reports: list[Report], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2)
    rows = [report_row(r) for r in reports]
    return _csv(rows) if fmt == "csv" else _table(rows)


# -- commands --------------------------------------------------------------

def _options(args: argparse.Namespace) -> Options:
    return Options(assume_prime=args.assume_prime, include_asymptotic=args.include_asymptotic,
                   volume=args.volume, volume_source=args.volume_source or "")


def cmd_bounds(args: argparse.Namespace) -> int:
    print(format_report(build_report(args.input, _options(args)), args.format))
    return EXIT_OK


def _sweep_one(job: tuple[str, Options]) -> Report:
    return family_report(parse_family(job[0]), job[1])


def cmd_sweep(args: argparse.Namespace) -> int:
    specs = sweep_specs(args.family, parse_range(args.range))
    for s in specs:
        parse_family(s)
    opts = _options(args)
    jobs = [(s, opts) for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_sweep_one, jobs))  # map keeps input order
    else:
        reports = [_sweep_one(j) for j in jobs]
    print(format_sweep(reports, args.format))
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    e = parse_expression(args.expression)
    n = normalize(e)
    c = complexity(n)
    if args.format == "json":
        print(json.dumps({"input": args.expression, "normal_form": format_expression(n),
                          "complexity": c.to_dict(), "log": list(n.log)}, indent=2))
    elif args.format == "csv":
        print(_csv([{"input": args.expression, "normal_form": format_expression(n),
                     "lower": c.lower, "upper": "" if c.upper is None else c.upper}]))
    else:
        print(f"normal form {format_expression(n)}")
        print(f"complexity  {c}")
        for step in n.log:
            print(f"  {step}")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    return EXIT_OK if run_selftest(args.corpus, quick=args.quick) else EXIT_FAIL


# -- parser ----------------------------------------------------------------

def _add_globals(p: argparse.ArgumentParser, top: bool) -> None:
    # subcommand copies use SUPPRESS so they do not clobber values given before the command
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=("table", "json", "csv"), default=d("table"))
    p.add_argument("--assume-prime", action="store_true", default=d(False),
                   help="admit bounds that need the link to be prime and non-split")
    p.add_argument("--include-asymptotic", action="store_true", default=d(False),
                   help="admit bounds proven only for sufficiently large family members")
    p.add_argument("--volume", type=float, default=d(None), help="hyperbolic volume of the exterior")
    p.add_argument("--volume-source", default=d(None), help="where the volume came from (required with --volume)")
    p.add_argument("--quick", action="store_true", default=d(False), help="selftest: <= 8 crossings only")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linkcomplexity", description="Certified bounds on the complexity of link-pairs.")
    _add_globals(ap, top=True)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="bound report for a PD code, braid word or family spec")
    p.add_argument("input", help='PD text, "strands=n : w...", family spec like th(3), a .pd file or -')
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="one report row per member of a family")
    p.add_argument("family", help="family name (fib, th, twist, xn) or a pattern such as 'torus(n,2)'")
    p.add_argument("range", help="inclusive range a..b")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("roots", help="normalise a connected-sum expression of pairs")
    p.add_argument("expression")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("selftest", help="oracle and invariant checks over the bundled corpus")
    p.add_argument("--corpus", type=Path, default=None, help="directory of .pd files")
    p.set_defaults(func=cmd_selftest)

    for sp in sub.choices.values():
        _add_globals(sp, top=False)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if (args.volume is None) != (args.volume_source is None):
        ap.error("--volume and --volume-source must be given together")
    try:
        return args.func(args)
    except BoundContradiction as exc:
        print(f"contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except ArithmeticError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (ValueError, KeyError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
