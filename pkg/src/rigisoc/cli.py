"""Command-line front end.

Every command prints JSON (or CSV for tables with ``--csv``) on stdout.  Exit
codes: 0 success, 1 a verification check failed, 2 usage or validation error
(with ``{"error": code, "detail": ...}`` on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from functools import reduce
from math import lcm
from typing import Sequence

from . import bridges, characters as ch, cohomology as co, objects as ob, symbolic as sy
from .errors import BoundTooLarge, RigIsocError
from .levels import Level, band_transition_description, make_level
from .reports import CheckReport
from .workspace import (
    Workspace,
    isocrystal_from_json,
    label_to_json,
    load_workspace,
    object_to_json,
)

ENUMERATION_LIMIT = 2_000_000


class UsageError(RigIsocError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=2)


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj) + "\n")


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _read_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _level_arg(ws: Workspace, name: str | None) -> Level | None:
    return ws.level(name) if name else None


# -- commands ------------------------------------------------------------------------

def cmd_level(ws: Workspace, args) -> int:
    names = [args.name] if args.name else list(ws.levels)
    out = []
    for name in names:
        L = ws.level(name)
        maps = []
        for m in ws.maps_from(L):
            band = band_transition_description(m)
            maps.append({
                "coarse": m.coarse.name,
                "proj": list(m.proj.images),
                "kernel_order": m.kernel.order,
                "power": band.power,
                "norm_fibers": [list(f) for f in band.norm_fibers],
            })
        out.append({"name": L.name, "order": L.gal.order, "denom": L.denom, "maps": maps})
    _emit(out[0] if args.name else out)
    return 0


def _object_from_args(ws: Workspace, args) -> ob.SkeletonObject:
    if getattr(args, "file", None):
        return ws.object_from_json(_read_json(args.file))
    if not args.token:
        raise UsageError("give an object name, an inline character, or --file")
    return ws.resolve_object(args.token, _level_arg(ws, args.level))


def _summary(X: ob.SkeletonObject) -> dict:
    return {
        "object": object_to_json(X),
        "fiber_dimension": ob.fiber_dimension(X),
        "is_basic": ob.is_basic(X),
        "is_simple": ob.is_simple(X),
        "end_dim": ob.end_dim(X),
    }


def cmd_object(ws: Workspace, args) -> int:
    if not args.token and not args.file:
        _emit(sorted(ws.objects))
        return 0
    _emit(_summary(_object_from_args(ws, args)))
    return 0


def cmd_tensor(ws: Workspace, args) -> int:
    level = _level_arg(ws, args.level)
    X = ws.resolve_object(args.left, level)
    Y = ws.resolve_object(args.right, level)
    _emit(object_to_json(ob.tensor(X, Y)))
    return 0


def _decomposition_json(X: ob.SkeletonObject) -> dict:
    return {
        "level": X.level.name,
        "summands": [
            {**label_to_json(lbl), "multiplicity": k} for lbl, k in ob.decompose(X)
        ],
    }


def cmd_decompose(ws: Workspace, args) -> int:
    _emit(_decomposition_json(_object_from_args(ws, args)))
    return 0


def cmd_newton(ws: Workspace, args) -> int:
    X = _object_from_args(ws, args)
    levi = ob.twisted_levi_of(X)
    _emit({
        "newton": object_to_json(ob.newton(X)),
        "is_basic": ob.is_basic(X),
        "levi": [
            {"index": f.index, "s": f.s, "multiplicity": f.multiplicity} for f in levi.factors
        ],
        "elliptic": ob.is_elliptic_levi(levi),
    })
    return 0


def enumeration_level(level: Level, max_denominator: int) -> Level:
    """The level's group with denominator widened so every value of denominator
    at most ``max_denominator`` is available."""
    denom = reduce(lcm, range(1, max_denominator + 1), level.denom)
    if denom == level.denom:
        return level
    return make_level(level.name, level.gal, denom)


def cmd_enumerate(ws: Workspace, args) -> int:
    base = ws.level(args.level)
    N = args.max_denominator
    if N < 1:
        raise UsageError("--max-denominator must be positive")
    level = enumeration_level(base, N)
    size = len(ch.value_numerators(level, N)) ** level.gal.order
    if size > ENUMERATION_LIMIT:
        raise BoundTooLarge(f"{size} characters exceeds the limit {ENUMERATION_LIMIT}")
    labels = ob.simple_labels(level, N)
    if args.dim_bound is not None:
        labels = [lbl for lbl in labels if lbl.dim <= args.dim_bound]
    report = co.count_classes_vs_simples(level, N)
    rows = [
        {
            "rep": lbl.rep.to_strings(),
            "index": lbl.index,
            "s": lbl.s,
            "sigma": ch.format_q(lbl.sigma),
            "dim": lbl.dim,
        }
        for lbl in labels
    ]
    if args.csv:
        _emit_csv(
            ["rep", "index", "s", "sigma", "dim"],
            [[" ".join(r["rep"]), r["index"], r["s"], r["sigma"], r["dim"]] for r in rows],
        )
    else:
        _emit({
            "level": base.name,
            "denom": level.denom,
            "max_denominator": N,
            "rows": rows,
            "burnside": report.to_json(),
        })
    return 0


def cmd_cohom(ws: Workspace, args) -> int:
    G = co.BasicCohGroup(args.m, args.s)
    if args.action == "member":
        _emit({"member": co.contains(G, [ch.parse_fraction(v) for v in args.values])})
    elif args.action == "torsion":
        factors = co.torsion_structure(G, args.n)
        brute = len(co.torsion_members(G, args.n))
        order = reduce(lambda a, b: a * b, factors, 1)
        _emit({"invariant_factors": factors, "order": order, "brute_force_order": brute})
        return 0 if order == brute else 1
    elif args.action == "map":
        a = [int(x) % G.s for x in args.a]
        b = [ch.parse_fraction(x) for x in args.b]
        c = co.presentation_map(co.PresentationElement(tuple(a), tuple(b)), G)
        _emit({"class": c.to_strings(), "member": co.contains(G, c.values)})
    return 0


def cmd_isoc(ws: Workspace, args) -> int:
    level = ws.level(args.level)
    if args.file:
        d = isocrystal_from_json(_read_json(args.file))
    else:
        pairs = []
        for item in args.slopes:
            slope, _, dim = item.partition(":")
            if not dim:
                raise UsageError(f"slope argument {item!r} must look like t/s:dim")
            pairs.append((slope, int(dim)))
        d = bridges.isocrystal(pairs)
    X = bridges.isoc_to_rigisoc(d, level)
    _emit({"object": object_to_json(X), "decomposition": _decomposition_json(X)["summands"]})
    return 0


# -- verification suites ---------------------------------------------------------------

def _suite_descent(ws: Workspace, datum: str | None) -> list:
    names = [datum] if datum else sorted(ws.data)
    reports = []
    for name in names:
        d = ws.datum(name)
        reports += sy.descent_suite(d)
    if not datum:
        for t in ws.towers.values():
            reports.append(sy.check_transition_scalar(t))
    return reports


def _suite_cohomology(ws: Workspace, datum=None) -> list:
    reports = []
    for m in (1, 2, 3):
        for s in (1, 2, 3):
            G = co.BasicCohGroup(m, s)
            for N in range(1, 5):
                r = co.image_vs_membership(G, N)
                reports.append(CheckReport(f"image_vs_membership(m={m},s={s},N={N})", r.agree, r.witness))
    reports.append(co.presentation_kernel_check(co.BasicCohGroup(2, 2), 4))
    factors = co.torsion_structure(co.BasicCohGroup(2, 2), 2)
    reports.append(CheckReport("torsion(m=2,s=2,N=2)", factors == [2, 2], None if factors == [2, 2] else factors))
    return reports


def _suite_classification(ws: Workspace, datum=None) -> list:
    reports = []
    for name in sorted(ws.levels):
        L = ws.levels[name]
        if len(ch.value_numerators(L)) ** L.gal.order > 50_000:
            continue
        r = co.count_classes_vs_simples(L, L.denom)
        reports.append(CheckReport(f"burnside({name})", r.agree, None if r.agree else r.to_json()))
        bad = [lbl.rep.to_strings() for lbl in ob.simple_labels(L)
               if ob.fiber_dimension(ob.simple_skeleton(lbl)) != lbl.s * lbl.index]
        reports.append(CheckReport(f"dimension_formula({name})", not bad, bad[0] if bad else None))
    return reports


def _suite_bridges(ws: Workspace, datum=None) -> list:
    reports = []
    for name in sorted(ws.levels):
        L = ws.levels[name]
        if len(ch.value_numerators(L)) ** L.gal.order > 400:
            continue
        simples = [ob.simple_skeleton(lbl) for lbl in ob.simple_labels(L)]
        failed = None
        for X in simples:
            for Y in simples:
                r = bridges.functor_tensor_compat_check(X, Y)
                if not r.passed:
                    failed = r.counterexample
                    break
            if failed:
                break
        reports.append(CheckReport(f"tensor_compat({name})", failed is None, failed))
    return reports


SUITES = {
    "descent": _suite_descent,
    "cohomology": _suite_cohomology,
    "classification": _suite_classification,
    "bridges": _suite_bridges,
}


def cmd_verify(ws: Workspace, args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        reports += SUITES[name](ws, args.datum if name == "descent" else None)
    ok = all(r.passed for r in reports)
    _emit({"suite": args.suite, "pass": ok, "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigisoc", description=__doc__.splitlines()[0])
    p.add_argument("--workspace", help="workspace JSON (default: $RIGISOC_WORKSPACE or built-in)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("level", help="show levels and their maps")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_level)

    for name, func, helptext in (
        ("object", cmd_object, "show an object"),
        ("decompose", cmd_decompose, "decompose an object into simples"),
        ("newton", cmd_newton, "Newton datum, basicness and Levi type"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("token", nargs="?", help="object name or inline character v1,v2,...")
        s.add_argument("--level")
        s.add_argument("--file", help="object JSON file")
        s.set_defaults(func=func)

    s = sub.add_parser("tensor", help="tensor product of two objects")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--level")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("enumerate", help="table of simple labels")
    s.add_argument("--level", required=True)
    s.add_argument("--max-denominator", type=int, required=True)
    s.add_argument("--dim-bound", type=int)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("cohom", help="basic cohomology classes")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    cs = s.add_subparsers(dest="action", required=True)
    c = cs.add_parser("member")
    c.add_argument("values", nargs="+")
    c = cs.add_parser("torsion")
    c.add_argument("--n", type=int, required=True)
    c = cs.add_parser("map")
    c.add_argument("--a", nargs="+", required=True)
    c.add_argument("--b", nargs="+", required=True)
    s.set_defaults(func=cmd_cohom)

    s = sub.add_parser("isoc", help="image of an isocrystal (slope data)")
    s.add_argument("--level", required=True)
    s.add_argument("slopes", nargs="*", help="t/s:dim")
    s.add_argument("--file")
    s.set_defaults(func=cmd_isoc)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=[*SUITES, "all"])
    s.add_argument("--datum")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ws = load_workspace(args.workspace)
        return args.func(ws, args)
    except RigIsocError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "detail": exc.detail}, sort_keys=True) + "\n")
        return 2
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "detail": str(exc)}, sort_keys=True) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
