"""Command-line front end: bounds, construct, verify, design-check, search.

JSON on stdout is the machine interface; progress goes to stderr.
Exit codes: 0 success or verified, 1 verified false, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import os
import sys

from . import blocking
from .constructions import CONSTRUCTIONS
from .designs import design_from_geometry, mixing_scan_exhaustive, mixing_scan_random
from .errors import GeometryError, NotPrimePower, OutOfRange
from .galois import field_of_order
from .geometry import pg_create
from .io import dump_point_set, load_design, load_point_set
from .search import exhaustive_max_minimal, heuristic_max_minimal

MAX_Q = 128


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'3', '1..4' or '1,2,5' (pieces may be combined: '1..3,7')."""
    out = []
    try:
        for piece in text.split(","):
            if ".." in piece:
                lo, hi = piece.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(piece))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    return out


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def _table(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        _emit(rows)
        return
    cols = list(dict.fromkeys(k for r in rows for k in r))
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in r.items()})
        sys.stdout.write(buf.getvalue())
        return
    cells = [[("" if r.get(c) is None else str(r.get(c))) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for row in cells:
        print("  ".join(x.ljust(w) for x, w in zip(row, widths)))


def _field(q: int, force: bool):
    if q > MAX_Q and not force:
        raise UsageError(f"q = {q} is above {MAX_Q}; pass --force to proceed")
    return field_of_order(q)


# -- bounds ----------------------------------------------------------------------


def _plane_rows(ns, ts):
    rows = []
    for n in ns:
        for t in ts:
            if not 1 <= t <= n:
                continue
            rep = blocking.main_bound(n, t)
            try:
                case = blocking.classify_equality(n, t)
            except NotPrimePower:
                case = None
            rows.append({
                "n": n, "t": t, "bound": rep.bound_float, "floor": _floor(rep),
                "quadratic": list(rep.quadratic),
                "equality_case": case.value if case else None,
            })
    return rows


def _floor(rep) -> int:
    x = int(rep.bound_float) + 1
    while x > 0 and not rep.admits(x):
        x -= 1
    return x


def cmd_bounds(args) -> int:
    if args.plane:
        if args.n is None or args.t is None:
            raise UsageError("--plane needs --n and --t")
        rows = _plane_rows(args.n, args.t)
    elif args.hyperplane:
        if args.dim is None or args.q is None or args.t is None:
            raise UsageError("--hyperplane needs --dim, --q and --t")
        rows = []
        for q in args.q:
            for t in args.t:
                rep = blocking.hyperplane_tfold_bound(args.dim, q, t)
                rows.append({"dim": args.dim, "q": q, "t": t, "bound": rep.bound_float,
                             "floor": _floor(rep), "quadratic": list(rep.quadratic)})
    elif args.semiarc:
        if args.n is None or args.s is None:
            raise UsageError("--semiarc needs --n and --s")
        rows = [{"n": n, "s": s, "bound": blocking.semiarc_bound(n, s)}
                for n in args.n for s in args.s]
    elif args.symmetric_design:
        if None in (args.v, args.k, args.lam):
            raise UsageError("--symmetric-design needs --v, --k and --lambda")
        rows = [{"v": args.v, "k": args.k, "lambda": args.lam,
                 "bound": blocking.symmetric_design_bound(args.v, args.k, args.lam)}]
    elif args.design:
        if None in (args.v, args.k, args.lam):
            raise UsageError("--design needs --v, --k and --lambda")
        db = blocking.general_design_bound(args.v, args.k, args.lam)
        rows = [{"v": args.v, "k": args.k, "lambda": args.lam, "bound": db.value,
                 "trivial": db.trivial}]
    else:
        raise UsageError("choose one of --plane, --hyperplane, --semiarc, --symmetric-design, --design")
    _table(rows, args.format)
    return 0


# -- construct / verify --------------------------------------------------------------


def _report(S, t: int) -> tuple[dict, bool]:
    rep = blocking.verify_point_set(S, t)
    out = {"size": S.size, **rep.to_json(), "provenance": S.provenance or {}}
    return out, bool(rep.minimal and rep.within_bound)


def cmd_construct(args) -> int:
    if args.name not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.name!r}; choose from {sorted(CONSTRUCTIONS)}")
    func, default_t = CONSTRUCTIONS[args.name]
    _field(args.q, args.force)
    kwargs = {}
    if default_t is None:
        if args.t is None:
            raise UsageError(f"{args.name} needs --t")
        t = args.t
        kwargs["t"] = t
        if args.lines is not None:
            kwargs["line_choice"] = args.lines
    else:
        t = default_t(args.q) if args.t is None else args.t
    try:
        S = func(args.q, **kwargs)
    except RuntimeError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    if args.out:
        dump_point_set(S, args.out)
    out, ok = _report(S, t)
    _emit(out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    S = load_point_set(args.inp)
    out, ok = _report(S, args.t)
    _emit(out)
    return 0 if ok else 1


# -- design-check / search ----------------------------------------------------------


def _geometry_design(args):
    if args.inp:
        return load_design(args.inp)
    n, q, k = args.pg
    return design_from_geometry(pg_create(n, _field(q, args.force)), k)


def cmd_design_check(args) -> int:
    if bool(args.inp) == bool(args.pg):
        raise UsageError("give exactly one of --in and --pg")
    design = _geometry_design(args)
    mode = args.mode[0]
    if mode == "exhaustive" and len(args.mode) == 1:
        scan = mixing_scan_exhaustive(design)
    elif mode == "random" and len(args.mode) == 2:
        scan = mixing_scan_random(design, int(args.mode[1]), seed=args.seed)
    else:
        raise UsageError("--mode is 'exhaustive' or 'random N'")
    v, b, r, k, lam = design.params
    _emit({"design": {"v": v, "b": b, "r": r, "k": k, "lambda": lam}, "mode": args.mode,
           **scan.to_json()})
    return 0 if not scan.violations and not scan.regularity_failures else 1


def cmd_search(args) -> int:
    if bool(args.inp) == bool(args.pg):
        raise UsageError("give exactly one of --in and --pg")
    if args.pg:
        n, q = args.pg
        geom = pg_create(n, _field(q, args.force))
    else:
        geom = load_design(args.inp)
    threads = args.threads or os.cpu_count() or 1

    def progress(msg):
        print(msg, file=sys.stderr, flush=True)

    if args.mode == "exhaustive":
        res = exhaustive_max_minimal(geom, args.t, workers=threads, progress=progress,
                                     max_points=args.max_points)
    else:
        initial = load_point_set(args.initial) if args.initial else None
        res = heuristic_max_minimal(geom, args.t, budget=args.budget, seed=args.seed,
                                    initial=initial, workers=threads)
        progress(f"heuristic: {res.extra['restarts']} restarts, best {res.best_size}")
    _emit(res.to_json())
    return 0


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blockingsets",
                                description="Minimal t-fold blocking sets in finite geometries.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="tables of upper bounds")
    kind = b.add_mutually_exclusive_group()
    kind.add_argument("--plane", action="store_true")
    kind.add_argument("--hyperplane", action="store_true")
    kind.add_argument("--semiarc", action="store_true")
    kind.add_argument("--symmetric-design", action="store_true")
    kind.add_argument("--design", action="store_true")
    b.add_argument("--n", type=parse_range)
    b.add_argument("--t", type=parse_range)
    b.add_argument("--s", type=parse_range)
    b.add_argument("--q", type=parse_range)
    b.add_argument("--dim", type=int)
    b.add_argument("--v", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--lambda", dest="lam", type=int)
    b.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("construct", help="build a named point set and verify it")
    c.add_argument("name", help=", ".join(CONSTRUCTIONS))
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--t", type=int)
    c.add_argument("--lines", type=parse_range, help="line positions for the t-fold constructions")
    c.add_argument("--out")
    c.add_argument("--force", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a PointSet JSON file")
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--t", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("design-check", help="check the incidence bound on subset pairs")
    d.add_argument("--in", dest="inp")
    d.add_argument("--pg", type=int, nargs=3, metavar=("N", "Q", "K"))
    d.add_argument("--mode", nargs="+", default=["exhaustive"])
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--force", action="store_true")
    d.set_defaults(func=cmd_design_check)

    s = sub.add_parser("search", help="largest minimal t-fold blocking set")
    s.add_argument("--pg", type=int, nargs=2, metavar=("N", "Q"))
    s.add_argument("--in", dest="inp")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--mode", choices=["exhaustive", "heuristic"], default="heuristic")
    s.add_argument("--budget", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--initial", help="PointSet JSON to start the heuristic from")
    s.add_argument("--max-points", type=int, default=25)
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GeometryError, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
