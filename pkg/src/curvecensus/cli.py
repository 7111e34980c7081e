"""Command-line entry point: ``curvecensus {bounds,enumerate,census,oracle}``.

Exit codes: 0 success, 2 usage error, 3 oracle mismatch, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import CurveTriple, bounds_record, castelnuovo_pi
from .enumeration import SOLVER_KINDS, InvariantViolation, enumerate_kind, oracle_check
from .report import RENDERERS, census, census_document, validate

EXIT_OK, EXIT_USAGE, EXIT_ORACLE, EXIT_INVARIANT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def parse_genus(text: str) -> range:
    """``"n"`` or an inclusive range ``"a:b"``."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"genus must be n or a:b, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty genus range {text!r}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvecensus", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, genus_required: bool = True) -> None:
        sp.add_argument("--d", type=int, required=True, help="degree")
        sp.add_argument("--g", type=parse_genus, required=genus_required, help="genus n or inclusive range a:b")
        sp.add_argument("--r", type=int, required=True, help="ambient dimension")
        sp.add_argument("--format", choices=sorted(RENDERERS), default="json")
        sp.add_argument("--out", help="write to this path instead of stdout")

    common(sub.add_parser("bounds", help="genus bounds and expected dimensions"))
    en = sub.add_parser("enumerate", help="divisor classes of the given degree and genus")
    common(en)
    en.add_argument("--kind", choices=(*SOLVER_KINDS, "all"), default="all")
    en.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    ce = sub.add_parser("census", help="per-genus census report")
    common(ce, genus_required=False)
    ce.add_argument("--workers", type=int, default=1)
    orc = sub.add_parser("oracle", help="cross-check every solver against brute force")
    common(orc)
    orc.add_argument("--kind", choices=(*SOLVER_KINDS, "all"), default="all")
    return p


def _triples(args) -> list[CurveTriple]:
    try:
        return [CurveTriple(args.d, g, args.r) for g in args.g]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _table(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        return buf.getvalue()
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    for r in rows:
        lines.append("| " + " | ".join(str(r.get(c, "")) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def cmd_bounds(args) -> tuple[str, int]:
    rows = []
    for t in _triples(args):
        rows.append({"d": t.d, "g": t.g, "r": t.r, **bounds_record(t).to_dict()})
    cols = ["d", "g", "r", "rho", "lambda", "chi", "pi", "pi1", "pi1_regime", "genus_regime", "low_degree_surface"]
    return _table(rows, cols, args.format), EXIT_OK


def cmd_enumerate(args) -> tuple[str, int]:
    kinds = SOLVER_KINDS if args.kind == "all" else (args.kind,)
    rows, problems = [], []
    for t in _triples(args):
        for kind in kinds:
            for sol in enumerate_kind(kind, t.d, t.g, t.r):
                rows.append({"kind": kind, "g": t.g, **sol.to_dict()})
            if args.oracle:
                problems += oracle_check(kind, t.d, t.g, t.r)
    cols = ["kind", "g", "surface", "class", "degree", "genus", "linear_system_dim", "flags"]
    out = _table(rows, cols, args.format)
    if problems:
        for p in problems:
            print(f"oracle mismatch: {p}", file=sys.stderr)
        return out, EXIT_ORACLE
    return out, EXIT_OK


def cmd_census(args) -> tuple[str, int]:
    top = castelnuovo_pi(args.d, args.r) + 1 if args.d >= 1 and args.r >= 2 else 0
    genera = args.g if args.g is not None else range(0, top + 1)
    try:
        reports = census(args.d, args.r, genera, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        validate(census_document(reports))
    return RENDERERS[args.format](reports), EXIT_OK


def cmd_oracle(args) -> tuple[str, int]:
    kinds = SOLVER_KINDS if args.kind == "all" else (args.kind,)
    rows, bad = [], False
    for t in _triples(args):
        for kind in kinds:
            problems = oracle_check(kind, t.d, t.g, t.r)
            bad = bad or bool(problems)
            rows.append({"kind": kind, "g": t.g, "ok": not problems, "problems": problems})
    return _table(rows, ["kind", "g", "ok", "problems"], args.format), EXIT_ORACLE if bad else EXIT_OK


COMMANDS = {"bounds": cmd_bounds, "enumerate": cmd_enumerate, "census": cmd_census, "oracle": cmd_oracle}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
