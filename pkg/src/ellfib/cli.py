"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import atiyah, chern, lattice, model_surfaces, p1bundles
from .p1bundles import SplittingType

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

# options whose values may legitimately start with "-"
_VALUE_FLAGS = ("--type", "--class")

ORBIT_HELP = """TSV columns: coords (comma separated, reduced mod n), divisibility,
pontrjagin (square of a lift mod 2n), orbit_id."""


class ValidationError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _frac(x: Fraction) -> str:
    return str(x)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, SplittingType):
        return list(obj.twists)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _table(rows: list[dict], sep: str = "  ") -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[str(_jsonable(r[c])) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = [sep.join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += [sep.join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    out = ["\t".join(cols)]
    for r in rows:
        out.append("\t".join(json.dumps(_jsonable(r[c])) if isinstance(r[c], (list, tuple)) else str(_jsonable(r[c])) for c in cols))
    return "\n".join(out) + "\n"


def _emit(rows, fmt: str, out, payload=None) -> None:
    if fmt == "json":
        out.write(json.dumps(_jsonable(rows if payload is None else payload), indent=2) + "\n")
    elif fmt == "tsv":
        out.write(_tsv(rows))
    else:
        out.write(_table(rows))


def _sorted_type(values: list[int], err) -> SplittingType:
    if values != sorted(values):
        err.write(f"warning: splitting type {values} is not ascending; sorted to {sorted(values)}\n")
    return SplittingType(values)


def _load_lattice(path: str) -> lattice.EvenLattice:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read lattice file {path}: {exc}")
    return lattice.EvenLattice.from_json(text)


# subcommand handlers: (args, out, err) -> exit code

def cmd_enumerate(args, out, err):
    types = p1bundles.enumerate_admissible(args.n, args.d, args.delta)
    rows = [{"type": S, "gap": S.twists[-1] - S.twists[0], "rigid": p1bundles.is_rigid(S)} for S in types]
    _emit(rows, args.format, out, payload=[list(S.twists) for S in types])
    return EXIT_OK


def cmd_check(args, out, err):
    S = _sorted_type(args.type, err)
    if S.rank < 2:
        raise ValidationError("admissibility needs rank n >= 2")
    failed = p1bundles.admissibility_violations(S, args.d)
    rb = p1bundles.remark_bounds(S, args.d)
    report = {
        "type": S, "d": args.d, "delta": S.degree,
        "d2": chern.d_squared_from_delta(S.rank, args.d, S.degree),
        "gap": S.twists[-1] - S.twists[0], "gap_bound": rb.total_gap_bound,
        "coarse_gap_bound": p1bundles.coarse_gap_bound(args.d),
        "status": "pass" if not failed else "fail", "violated": failed,
    }
    if args.format == "json":
        _emit([report], "json", out, payload=report)
    else:
        out.write(f"{report['status']}: {S} with d={args.d}\n")
        for name in failed:
            out.write(f"  violates {name}\n")
    return EXIT_OK if not failed else EXIT_INVALID


def cmd_bounds(args, out, err):
    n, d = args.n, args.d
    if n < 2:
        raise ValidationError("bounds need n >= 2")
    rows = []
    for r in range(1, n):
        rows.append({
            "r": r,
            "sub_bound": p1bundles.admissibility_bound(n, r, d, "sub", args.p1),
            "quot_bound": p1bundles.admissibility_bound(n, r, d, "quot", args.p1),
            "from_discriminant": chern.slope_gap_from_cthm1(n, r, d, args.p1),
            "formula": "(r(n-r)+(e-1))d/(2nr)" + (" - (e-1)/(nr)" if args.p1 else ""),
        })
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_thresholds(args, out, err):
    th = chern.d2_thresholds(args.n, args.d, args.g)
    row = th.to_dict()
    if args.format == "json":
        _emit([row], "json", out, payload=row)
    else:
        _emit([row], args.format, out)
    return EXIT_OK


def cmd_components(args, out, err):
    count = lattice.component_count(args.d, args.n)
    levels = sorted(lattice.wall_levels(args.d, args.n))
    if args.format == "json":
        _emit([], "json", out, payload={"d": args.d, "n": args.n, "components": count, "levels": levels})
    elif args.format == "tsv":
        _emit([{"d": args.d, "n": args.n, "components": count}], "tsv", out)
    else:
        out.write(f"{count}\n")
    return EXIT_OK


def cmd_pontrjagin(args, out, err):
    L = _load_lattice(args.lattice)
    if len(args.class_) != L.rank:
        raise ValidationError(f"class has {len(args.class_)} coordinates, lattice rank is {L.rank}")
    a = lattice.ModClass(args.n, args.class_)
    row = {"class": list(a.coords), "n": a.n, "divisibility": lattice.divisibility(a),
           "pontrjagin": lattice.pontrjagin(L, a)}
    _emit([row], args.format, out, payload=row)
    return EXIT_OK


def cmd_orbit(args, out, err):
    L = _load_lattice(args.lattice)
    orbits = lattice.orbit_partition(L, args.n, args.root_bound)
    if args.format == "json":
        payload = [{"orbit_id": i, "divisibility": o.divisibility, "pontrjagin": o.pontrjagin,
                    "size": len(o.classes), "classes": [list(c) for c in o.classes]}
                   for i, o in enumerate(orbits)]
        _emit([], "json", out, payload=payload)
    elif args.format == "text":
        rows = [{"orbit_id": i, "pontrjagin": o.pontrjagin, "divisibility": o.divisibility,
                 "size": len(o.classes)} for i, o in enumerate(orbits)]
        _emit(rows, "text", out)
    else:
        out.write(lattice.orbits_to_tsv(orbits))
    return EXIT_OK


def _cover_rows(cov, ts):
    return [{"t": t, "D2": cov.d_squared(t), "h1_nonzero": cov.h1_nonzero(t),
             "basepoint": cov.has_basepoint(t)} for t in ts]


def cmd_cover(args, out, err, n):
    if n == 2:
        cov = model_surfaces.double_cover(args.a, args.N)
    else:
        cov = model_surfaces.triple_cover(args.a, args.b, args.N)
    if args.format == "json":
        payload = cov.to_dict()
        payload["splitting_type"] = list(cov.splitting_type.twists)
        payload["D2"] = cov.d_squared(0)
        _emit([], "json", out, payload=payload)
    else:
        header = {k: v for k, v in cov.to_dict().items() if v is not None}
        out.write(" ".join(f"{k}={v}" for k, v in header.items()) + "\n")
        top = cov.a if n == 2 else cov.b
        _emit(_cover_rows(cov, range(top - 3, top + 2)), args.format, out)
    return EXIT_OK


def cmd_ratsurf(args, out, err):
    rows = [model_surfaces.rational_surface_divisor(k).to_dict() for k in range(1, args.n + 1)] if args.all \
        else [model_surfaces.rational_surface_divisor(args.n).to_dict()]
    _emit(rows, args.format, out, payload=rows if args.all else rows[0])
    return EXIT_OK


def cmd_tables(args, out, err):
    rows = model_surfaces.numerology_table(args.corollary, args.dmin, args.dmax)
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_reglemma(args, out, err):
    rows = []
    ok = True
    for e in range(1, args.e + 1):
        rep = atiyah.verify_reg_lemma(e)
        ok &= rep.ok
        rows.append({"e": e, "types": rep.checked, "commutative": rep.commutative,
                     "counterexamples": len(rep.counterexamples)})
    _emit(rows, args.format, out)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_lattice(args, out, err):
    out.write(lattice.lambda_d(args.d).to_json() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellfib", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "tsv", "text"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[fmt], help="admissible splitting types of given degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[fmt], help="test one splitting type against every slope bound")
    p.add_argument("--type", type=_ints, required=True, help='ascending twists, e.g. "-3,-1"')
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", parents=[fmt], help="slope-gap bounds for every rank r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p1", action="store_true", help="use the sharper bounds over P^1")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("thresholds", parents=[fmt], help="D^2 thresholds for h^1 != 0 and base points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, default=0)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("components", parents=[fmt], help="number of moduli components")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("pontrjagin", parents=[fmt], help="Pontrjagin square of a class mod n")
    p.add_argument("--lattice", required=True, help="JSON Gram matrix file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="class_", type=_ints, required=True)
    p.set_defaults(func=cmd_pontrjagin)

    p = sub.add_parser("orbit", parents=[fmt], help="reflection orbits of primitive classes mod n",
                       epilog=ORBIT_HELP)
    p.add_argument("--lattice", required=True, help="JSON Gram matrix file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root-bound", type=int, default=2)
    p.set_defaults(func=cmd_orbit, format_default="tsv")

    p = sub.add_parser("cover2", parents=[fmt], help="order-2 fibration over F_a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=lambda a, o, e: cmd_cover(a, o, e, 2))

    p = sub.add_parser("cover3", parents=[fmt], help="order-3 fibration in P(O + O(a) + O(b))")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=lambda a, o, e: cmd_cover(a, o, e, 3))

    p = sub.add_parser("ratsurf", parents=[fmt], help="divisor with trivial pushforward on a rational elliptic surface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list every n' from 1 to n")
    p.set_defaults(func=cmd_ratsurf)

    p = sub.add_parser("tables", parents=[fmt], help="sharpness tables for orders 2 and 3")
    p.add_argument("--corollary", choices=["n2", "n3"], required=True)
    p.add_argument("--dmin", type=int, default=2)
    p.add_argument("--dmax", type=int, default=10)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("reglemma", parents=[fmt], help="exhaustive check that dim End >= e, with equality iff commutative")
    p.add_argument("--e", type=int, required=True, help="check every e' from 1 to e")
    p.set_defaults(func=cmd_reglemma)

    p = sub.add_parser("lattice", help="write the Gram matrix of (2d-2)U + d(-E8) as JSON")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_lattice)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "format_default", None) and "--format" not in " ".join(argv):
        args.format = args.format_default
    try:
        return args.func(args, out, err)
    except (ValidationError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
