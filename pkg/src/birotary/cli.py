"""Command-line front end: construct, invariants, classify, census, verify, identity-check."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import (BirotaryError, CapExceeded, DegreeMismatch, InvalidAction, NotAPermutation, NotGenerating,
                     NotInvolution, NotPrimePower, ParseError, PreconditionFailed, SideConditionViolated, UnknownSuite)
from .perm import default_cap

EXIT_OK, EXIT_ERROR, EXIT_PRECONDITION, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3, 4
FORMATS = ("table", "json", "csv")
_PRECONDITION = (ParseError, PreconditionFailed, NotInvolution, NotGenerating, DegreeMismatch, NotAPermutation,
                 NotPrimePower, SideConditionViolated, UnknownSuite, InvalidAction)


def _flatten(d, prefix: str = "") -> list[tuple[str, object]]:
    out = []
    if isinstance(d, dict):
        for k, v in d.items():
            out.extend(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(d, list) and any(isinstance(v, (dict, list)) for v in d):
        for i, v in enumerate(d):
            out.extend(_flatten(v, f"{prefix}[{i}]"))
    else:
        out.append((prefix, d))
    return out


def render(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    rows = _flatten(report)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        return buf.getvalue()
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pair(built, xs: str, ys: str):
    from .groupio import parse_element
    G = built.group
    return parse_element(xs, built.generators, G.degree), parse_element(ys, built.generators, G.degree)


def cmd_construct(args) -> int:
    from .groupio import group_to_json, parse_construction
    built = parse_construction(args.spec, cap=args.cap)
    data = group_to_json(built)
    fmt = "json" if args.format == "table" and args.out else args.format
    _emit(render(data, fmt), args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    from .groupio import load_group
    from .maps import make_map
    built = load_group(args.group, cap=args.cap)
    x, y = _pair(built, args.x, args.y)
    _emit(render(make_map(built.group, x, y).report(), args.format), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    from .classify import classify
    from .groupio import load_group
    built = load_group(args.group, cap=args.cap)
    x, y = _pair(built, args.x, args.y)
    _emit(render(classify(built.group, x, y, args.p).to_dict(), args.format), args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    from .census import census_scan, records_to_csv, records_to_json
    from .groupio import load_catalog
    records = census_scan(load_catalog(args.catalog), args.filter, cap=args.cap, jobs=args.jobs,
                          classify_records=args.classify, merge=args.merge)
    if args.format == "json":
        text = records_to_json(records) + "\n"
    elif args.format == "csv":
        text = records_to_csv(records)
    else:
        text = _census_table(records)
    _emit(text, args.out)
    return EXIT_OK


def _census_table(records) -> str:
    cols = ["group", "order", "k", "m", "chi", "orientable", "p", "n", "orbit_size", "status"]
    rows = [[("" if r.row()[c] is None else str(r.row()[c])) for c in cols] for r in records]
    widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    from .verify import run_suite
    results = run_suite(args.suite)
    if args.format == "table":
        text = "".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail} ({r.seconds:.2f}s)\n"
                       for r in results)
    else:
        text = render({"suite": args.suite, "results": [r.to_dict() for r in results]}, args.format)
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def cmd_identity_check(args) -> int:
    from .families import identity_check
    try:
        rep = identity_check(args.family, args.f)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _emit(render(rep.to_dict(), args.format), args.out)
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _common(defaults: bool) -> argparse.ArgumentParser:
    # subcommands repeat the global flags; SUPPRESS keeps them from resetting values given earlier
    def d(v):
        return v if defaults else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_positive, default=d(None),
                        help="materialization cap (default: BIROTARY_CAP or 20000)")
    common.add_argument("--format", choices=FORMATS, default=d("table"))
    common.add_argument("--out", default=d(None), help="write output to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    ap = argparse.ArgumentParser(prog="birotary", parents=[_common(True)],
                                 description="Bi-rotary maps: invariants, classification and census.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a group and write its group file")
    p.add_argument("spec")
    p.set_defaults(func=cmd_construct)

    for name, func, help_ in (("invariants", cmd_invariants, "map invariants of a pair"),
                              ("classify", cmd_classify, "classify X/O_p(X) for a pair")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("group", help="group file or construction string")
        p.add_argument("x", help="word, cycle notation or image list")
        p.add_argument("y")
        if name == "classify":
            p.add_argument("p", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("census", parents=[common], help="scan a catalog for maps")
    p.add_argument("--catalog", default=None, help="comma-separated constructions, @file, or 'default'")
    p.add_argument("--filter", default="all", help="all | negative | prime-power[:p] | chi=<n> | chi<n")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--classify", action="store_true", help="attach a classification summary")
    p.add_argument("--merge", action="store_true", help="note isomorphic maps across groups")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p.add_argument("suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity-check", parents=[common], help="recompute a family's stated identities")
    p.add_argument("family")
    p.add_argument("f", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_identity_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.cap is None:
        args.cap = default_cap()
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except _PRECONDITION as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BirotaryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
