"""Command-line entry point: ``grs <subcommand> ...``.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction

from . import smith
from .algebraic import (
    NAMED,
    Order,
    RootEnclosure,
    compare_points,
    named,
    parse_bound,
    sqrt_int,
)
from .census import (
    MAX_BUILTIN_N,
    build_report,
    builtin_enumeration,
    dump_report,
    find_inconclusive,
    run_census,
    write_csv,
)
from .classify import (
    NOT_APPLICABLE,
    ExactlyAlpha1,
    InconsistentClassification,
    NotApplicable,
    best_bounds,
    classify,
    classify_all,
)
from .graph import generate, is_connected, join_at_new_vertex
from .graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_lines
from .intpoly import sign_at_rational
from .spectral import charpoly, eigenvalues_approx, spectral_position

EXIT_INPUT = 1
EXIT_INTERNAL = 2


class InputError(Exception):
    pass


def _graph(text):
    try:
        return graph6_decode(text)
    except Graph6Error as exc:
        raise InputError(f"malformed graph6 {text!r}: {exc}") from None


def _bound(text):
    try:
        a = parse_bound(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return a


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


TAG_SURDS = tuple(d for d in range(2, 13) if math.isqrt(d) ** 2 != d)


def symbolic_tag(enc: RootEnclosure):
    """Integer, catalog constant or small square root equal to the enclosed root, if any."""
    z = enc.hi.__floor__()
    if enc.lo < z and sign_at_rational(enc.poly, z) == 0:
        return str(z)
    for name in NAMED:
        c = named(name)
        if c.vanishes(enc.poly) and compare_points(c, enc) is Order.EQUAL:
            return c.label()
    for d in TAG_SURDS:
        c = sqrt_int(d)
        if c.vanishes(enc.poly) and compare_points(c, enc) is Order.EQUAL:
            return f"sqrt{d}"
    return None


def _enclosure_json(enc: RootEnclosure, width: Fraction):
    enc = enc.refine(width)
    return {
        "poly": enc.poly.text(),
        "lower": str(enc.lo),
        "upper": str(enc.hi),
        "approx": enc.approx,
        "exact": symbolic_tag(enc),
    }


# --- subcommands -------------------------------------------------------------------


def cmd_charpoly(args):
    g = _graph(args.graph6)
    p = charpoly(g)
    if args.json:
        _emit({"graph6": args.graph6, "charpoly": p.text(), "pretty": str(p)})
    else:
        print(p.text())
    return 0


def cmd_spectrum(args):
    g = _graph(args.graph6)
    exact = {}
    for name in NAMED:
        a = named(name)
        pos = spectral_position(g, a)
        exact[a.label()] = {"above": pos.m, "multiplicity": pos.k}
    _emit(
        {
            "graph6": args.graph6,
            "n": g.n,
            "charpoly": charpoly(g).text(),
            "spectrum": eigenvalues_approx(g, args.tol) if g.n else [],
            "catalog": exact,
        }
    )
    return 0


def cmd_classify(args):
    g = _graph(args.graph6)
    a = _bound(args.bound)
    out = {"schema": 1, "graph6": args.graph6, "bound": args.bound}
    try:
        if not is_connected(g):
            raise NotApplicable("graph is disconnected")
        per = classify_all(g, a)
        overall = classify(g, a)
        out["cut_vertices"] = [
            {"vertex": u, "profile": p.to_dict(), "classification": c.value} for u, p, c in per
        ]
        out["classification"] = overall.value
    except NotApplicable:
        overall = None
        out["cut_vertices"] = []
        out["classification"] = NOT_APPLICABLE
    if args.oracle and g.n >= 2:
        pos = spectral_position(g, a)
        rel = pos.compare(2)
        out["oracle"] = {"relation": rel.value, "m": pos.m, "k": pos.k}
        order = overall.as_order() if overall else None
        out["agree"] = order is None or order is rel
        _emit(out)
        return 0 if out["agree"] else EXIT_INTERNAL
    _emit(out)
    return 0


def cmd_bounds(args):
    g = _graph(args.graph6)
    width = Fraction(args.width)
    try:
        b = best_bounds(g)
    except NotApplicable as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if isinstance(b, ExactlyAlpha1):
        out = {"kind": "exact", "value": _enclosure_json(b.value, width), "cut_vertex": b.cut_vertex}
    else:
        out = {
            "kind": "open",
            "lower": _enclosure_json(b.lower, width),
            "upper": _enclosure_json(b.upper, width),
            "lower_cut_vertex": b.lower_vertex,
            "upper_cut_vertex": b.upper_vertex,
        }
    out.update({"schema": 1, "graph6": args.graph6})
    _emit(out)
    return 0


def cmd_census(args):
    _bound(args.bound)
    t0 = time.perf_counter()
    if args.file:
        try:
            with open(args.file) as fh:
                graphs = [s for s, _ in read_graph6_lines(fh)]
        except OSError as exc:
            raise InputError(str(exc)) from None
        except Graph6Error as exc:
            raise InputError(f"bad corpus line: {exc}") from None
        source = {"file": args.file}
    else:
        if args.max_n > MAX_BUILTIN_N:
            raise InputError(f"--max-n is limited to {MAX_BUILTIN_N}")
        graphs, stats = builtin_enumeration(args.max_n)
        source = {"max_n": args.max_n, "enumeration": stats}
    records = run_census(graphs, args.bound, workers=args.workers, timing=args.timing)
    wall = time.perf_counter() - t0 if args.timing else None
    report = build_report(records, args.bound, source, emit_records=args.emit_records, wall_time=wall)
    text = dump_report(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        write_csv(records, args.csv)
    return EXIT_INTERNAL if report["contradiction_count"] else 0


def cmd_find_inconclusive(args):
    a = _bound(args.bound)
    res = find_inconclusive(
        a, args.max_n, limit=args.limit or None, min_equal_multiplicity=args.min_multiplicity
    )
    res["bound"] = args.bound
    _emit(res)
    return 0


def cmd_smith(args):
    if args.action == "list":
        rows = []
        for f in smith.smith_forms(args.max_vertices):
            g = smith.build(f)
            rows.append({"form": smith.form_name(f), "n": g.n, "graph6": graph6_encode(g)})
        _emit({"smith": rows})
        return 0
    if not args.graph6:
        raise InputError("smith check needs a graph6 argument")
    g = _graph(args.graph6)
    if not is_connected(g):
        raise InputError("smith check needs a connected graph")
    form = smith.recognize_smith(g)
    _emit(
        {
            "graph6": args.graph6,
            "form": smith.form_name(form) if form else None,
            "index_vs_2": smith.index_vs_2(g).value,
        }
    )
    return 0


def _parse_join_part(text):
    g6, _, att = text.rpartition(":")
    if not g6:
        raise InputError(f"join part {text!r} must look like GRAPH6:v1,v2")
    return _graph(g6), [int(x) for x in att.split(",") if x]


def cmd_generate(args):
    fam, params = args.family, args.params
    try:
        if fam == "smith":
            g = smith.build(smith.parse_form(" ".join(params)))
        elif fam == "dynkin":
            g = smith.build(smith.parse_dynkin(" ".join(params)))
        elif fam == "join":
            g = join_at_new_vertex([_parse_join_part(p) for p in params])
        else:
            g = generate(fam, *(int(p) for p in params))
    except (ValueError, TypeError) as exc:
        raise InputError(f"cannot generate {fam} {' '.join(params)}: {exc}") from None
    print(graph6_encode(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grs", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomial, ascending coefficients")
    p.add_argument("graph6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", help="eigenvalues and exact catalog positions")
    p.add_argument("graph6")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="decide λ₂ against a bound at every cut-vertex")
    p.add_argument("graph6")
    p.add_argument("--bound", default="2")
    p.add_argument("--oracle", action="store_true", help="also report the exact relation")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="enclose λ₂ by component indices")
    p.add_argument("graph6")
    p.add_argument("--width", default="1/1000000000")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="classify a corpus against the exact oracle")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--max-n", type=int)
    src.add_argument("--file")
    p.add_argument("--bound", default="2")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit-records", action="store_true")
    p.add_argument("--csv", help="also write per-graph CSV here")
    p.add_argument("--output", "-o", help="write the JSON report here")
    p.add_argument("--timing", action="store_true", help="include wall time and per-graph micros")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("find-inconclusive", help="witnesses of each outcome in the open case")
    p.add_argument("--bound", default="sqrt3")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--limit", type=int, default=200_000, help="candidate cap (0 = none)")
    p.add_argument("--min-multiplicity", type=int, default=1,
                   help="required multiplicity of the bound for the Equal witness")
    p.set_defaults(func=cmd_find_inconclusive)

    p = sub.add_parser("smith", help="Smith graph catalog")
    p.add_argument("action", choices=["list", "check"])
    p.add_argument("graph6", nargs="?")
    p.add_argument("--max-vertices", type=int, default=12)
    p.set_defaults(func=cmd_smith)

    p = sub.add_parser("generate", help="print a family member as graph6")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistentClassification as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
