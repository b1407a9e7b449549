"""Command line: ``dfgamma gamma | verify | enumerate | cf``.

Exit codes: 0 success, 1 verification failure, 2 usage or feasibility error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cfrac, escaliers, tableaux
from .recurrences import gamma
from .verify import ROUTES, SUITES, VerifyConfig, run_suite

ENUM_ROUTES = ("tableaux", "escaliers")
ENUM_NMAX = 8
SYMBOLIC_NMAX = 40
ALL_ROUTES = ("rec",) + tuple(ROUTES)

# enumeration guards for the ``enumerate`` command
MAX_SHAPE_CELLS = 36
MAX_ESCALIER_N = 7
MAX_EXTENDED_N = 6


class FeasibilityError(Exception):
    pass


def _parse_point(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--eval wants six integers, got {text!r}")
    if len(vals) != 6:
        raise argparse.ArgumentTypeError(f"--eval wants six integers, got {len(vals)}")
    return vals


def compute_gamma(n: int, route: str, force: bool = False):
    if n < 1:
        raise FeasibilityError("n must be >= 1")
    limit = ENUM_NMAX if route in ENUM_ROUTES else SYMBOLIC_NMAX
    if n > limit and not force:
        raise FeasibilityError(
            f"route {route!r} is limited to n <= {limit} (n={n} requested); pass --force to override"
        )
    return gamma(n) if route == "rec" else ROUTES[route](n)


def cmd_gamma(args, out) -> int:
    poly = compute_gamma(args.n, args.route, args.force)
    if args.eval is not None:
        value = poly.evaluate(args.eval)
        if args.format == "json":
            print(json.dumps({"n": args.n, "route": args.route, "point": args.eval, "value": str(value)}), file=out)
        else:
            print(value, file=out)
    elif args.format == "json":
        print(json.dumps({"n": args.n, "route": args.route, "poly": poly.to_json_obj()}), file=out)
    else:
        print(poly.to_text(), file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.nmax < 1:
        raise FeasibilityError("--nmax must be >= 1")
    cfg = VerifyConfig(nmax=args.nmax, jobs=args.jobs)
    report = run_suite(args.suite, cfg)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    bad = report.failures()
    print(f"{len(report.checks) - len(bad)}/{len(report.checks)} checks passed", file=sys.stderr)
    for c in bad:
        print(f"FAIL {c.name}", file=sys.stderr)
    return 0 if not bad else 1


def _fmt_stats(sv) -> str:
    return " ".join(f"{k}={v}" for k, v in sv._asdict().items())


def _tableau_text(t: tableaux.AltTableau) -> str:
    return "/".join("".join(row) or "-" for row in t.rows)


def cmd_enumerate(args, out) -> int:
    kind = args.kind
    fmt = args.format
    if kind == "tableaux":
        if args.shape is not None:
            shape = tableaux.ShapeWord.parse(args.shape)
        elif args.n is not None:
            shape = tableaux.ShapeWord.staircase(args.n)
        else:
            raise FeasibilityError("enumerate tableaux needs --shape or --n")
        if shape.n_cells() > MAX_SHAPE_CELLS and not args.force:
            raise FeasibilityError(f"shape has {shape.n_cells()} cells (> {MAX_SHAPE_CELLS}); pass --force")
        for t in tableaux.enumerate_tableaux(shape):
            s = tableaux.stats(t) if args.stats else None
            if fmt == "json":
                obj = t.to_json_obj()
                if s is not None:
                    obj["stats"] = s._asdict()
                print(json.dumps(obj, separators=(",", ":")), file=out)
            else:
                line = _tableau_text(t)
                print(line if s is None else f"{line:<24} {_fmt_stats(s)}", file=out)
    elif kind == "extended":
        n = _need_n(args)
        if n > MAX_EXTENDED_N and not args.force:
            raise FeasibilityError(f"extended tableaux limited to n <= {MAX_EXTENDED_N}; pass --force")
        for u in tableaux.enumerate_extended(n):
            if fmt == "json":
                obj = u.to_json_obj()
                if args.stats:
                    obj["stats"] = tableaux.stats(u.base)._asdict()
                    obj["profile"] = list(tableaux.ext_profile(u))
                    obj["weight"] = tableaux.ext_weight(u).to_text()
                print(json.dumps(obj, separators=(",", ":")), file=out)
            else:
                line = f"{_tableau_text(u.base):<24} rows={sorted(u.dashed_rows)} cols={sorted(u.dashed_cols)}"
                if args.stats:
                    prof = "".join(map(str, tableaux.ext_profile(u)))
                    line += f" profile={prof or '-'} w={tableaux.ext_weight(u).to_text()}"
                print(line, file=out)
    elif kind == "escaliers":
        n = _need_n(args)
        if n > MAX_ESCALIER_N and not args.force:
            raise FeasibilityError(f"escaliers limited to n <= {MAX_ESCALIER_N}; pass --force")
        for t in escaliers.enumerate_pretableaux(n):
            if fmt == "json":
                obj = t.to_json_obj()
                if args.stats:
                    obj["stats"] = escaliers.esc_stats(t)._asdict()
                    obj["profile"] = list(escaliers.esc_profile(t))
                print(json.dumps(obj, separators=(",", ":")), file=out)
            else:
                line = "/".join(str(t).splitlines())
                if args.stats:
                    prof = "".join(map(str, escaliers.esc_profile(t)))
                    line = f"{line:<24} {_fmt_stats(escaliers.esc_stats(t))} profile={prof or '-'}"
                print(line, file=out)
    return 0


def _need_n(args) -> int:
    if args.n is None:
        raise FeasibilityError(f"enumerate {args.kind} needs --n")
    if args.n < 0:
        raise FeasibilityError("--n must be >= 0")
    return args.n


def cmd_cf(args, out) -> int:
    if args.nmax < 0:
        raise FeasibilityError("--nmax must be >= 0")
    ones = [1] * 6
    rows = []
    for i in range(args.nmax + 1):
        rows.append((f"b_{i}", cfrac.b_coeff(i)))
    for i in range(1, args.nmax + 1):
        rows.append((f"lambda_{i}", cfrac.lambda_coeff(i)))
    if args.format == "json":
        obj = {
            name: [{"index": int(label.split("_")[1]), "poly": p.to_json_obj(), "ones": str(p.evaluate(ones))}
                   for label, p in rows if label.startswith(name)]
            for name in ("b", "lambda")
        }
        print(json.dumps(obj), file=out)
    else:
        for label, p in rows:
            print(f"{label:<10} {p.evaluate(ones):>14}  {p.to_text()}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dfgamma", description="Generalized Dumont-Foata polynomials")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="compute Gamma_n by one route")
    g.add_argument("n", type=int)
    g.add_argument("--route", choices=ALL_ROUTES, default="rec")
    g.add_argument("--eval", type=_parse_point, metavar="a,b,c,d,e,f")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("--force", action="store_true", help="override the feasibility guard")
    g.set_defaults(func=cmd_gamma)

    v = sub.add_parser("verify", help="run cross-route verification suites")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--nmax", type=int, default=5)
    v.add_argument("--out", metavar="PATH")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="stream tableaux, extended tableaux or escaliers")
    e.add_argument("kind", choices=("tableaux", "extended", "escaliers"))
    e.add_argument("--shape")
    e.add_argument("--n", type=int)
    e.add_argument("--stats", action="store_true")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--force", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("cf", help="print the J-fraction coefficients")
    c.add_argument("--nmax", type=int, default=3)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_cf)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (FeasibilityError, ValueError) as exc:
        print(f"dfgamma: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
