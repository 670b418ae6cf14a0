"""Command-line front end: space, fkm, census and check."""

import argparse
import csv
import json
import sys

from . import census as cen
from .fkmproj import (ScopeError, admissible_points_fkm, clifford_family, closed_form_N,
                      count_classes_fkm, lowest_weights, outpm_generators)
from .golden import check_tables, literal_admissible
from .rootsys import EPSILON, TorusPoint, format_point
from .symcat import CLASSICAL, EXCEPTIONAL, build_extended_vogan, dims, make_record
from .voganproj import (ClassificationError, admissible_points, admissible_points_oracle,
                        count_classes, diagram_automorphisms)

DEFAULT_MAX_RANK = 8
DEFAULT_GRID_BOUND = 2


class UsageError(Exception):
    pass


def _fmt_root(r):
    return "(" + "".join(str(c) for c in r) + ")" if all(0 <= c < 10 for c in r) else str(r)


def _emit(out, payload, fmt, lines):
    if fmt == "json":
        out.write(json.dumps(payload, indent=1) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in payload.items():
            w.writerow([k, v if isinstance(v, (int, str)) else json.dumps(v)])
    else:
        out.write("\n".join(lines) + "\n")


def cmd_space(args, out):
    label = args.label
    if label not in CLASSICAL and label not in EXCEPTIONAL:
        raise UsageError(f"unknown label {label!r}; choose from {', '.join(CLASSICAL + tuple(EXCEPTIONAL))}")
    if label in CLASSICAL and (args.p is None or args.nu is None):
        raise UsageError(f"{label} needs --p and --nu")
    try:
        rec = make_record(label, args.p, args.nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    pts = admissible_points(rec)
    if admissible_points_oracle(rec, args.grid_bound) != pts:
        raise ClassificationError(f"{rec.name}: closed form and search disagree")
    listed = literal_admissible(rec)
    if listed is not None and listed != pts:
        raise ClassificationError(f"{rec.name}: closed form disagrees with the listed set")
    autos = diagram_automorphisms(build_extended_vogan(rec))
    N, orbs = count_classes(rec)
    dim_p, rank, n, codim = dims(rec)
    rows = []
    for orb in orbs:
        homog = cen.homogeneity(rec, orb[0])
        rows.append((orb, homog))
    payload = {
        "label": rec.label,
        "type": str(rec.cartan_type),
        "nu": rec.nu,
        "hermitian": rec.hermitian,
        "mu": list(rec.mu),
        "lambda": list(rec.lambda_nc),
        "dim": dim_p,
        "rank": rank,
        "n": n,
        "codim": codim,
        "admissible": [str(t) for t in pts],
        "automorphisms": [str(a) for a in autos],
        "orbits": [{"points": [str(t) for t in orb], "homogeneous": h} for orb, h in rows],
        "N": N,
        "in_census": rec.projective_census and not rec.rank_one,
    }
    lines = [
        f"{rec.name}: type {rec.cartan_type}, painted node {rec.nu}, "
        f"{'Hermitian' if rec.hermitian else 'non-Hermitian'}",
        f"  highest root {_fmt_root(rec.mu)}, highest noncompact root {_fmt_root(rec.lambda_nc)}",
        f"  dim G/K = {dim_p}, rank = {rank}, CP^{n}, codimension {codim}",
        f"  admissible points: {', '.join(str(t) for t in pts)}",
        f"  diagram automorphisms: {', '.join(str(a) for a in autos)}",
        "  orbits:",
    ]
    for orb, h in rows:
        lines.append(f"    {{{', '.join(str(t) for t in orb)}}}  {'homogeneous' if h else 'inhomogeneous'}")
    lines.append(f"  N = {N}")
    if not payload["in_census"]:
        lines.append("  (rank one: not counted in the projective census)")
    _emit(out, payload, args.format, lines)
    return 0


def cmd_fkm(args, out):
    if args.k is not None and (args.kplus is not None or args.kminus is not None):
        raise UsageError("give either --k or --kplus/--kminus")
    if args.m % 4 == 0:
        if args.kplus is None or args.kminus is None:
            raise UsageError("m = 0 mod 4 needs --kplus and --kminus")
        split = (args.kplus, args.kminus)
    else:
        if args.k is None:
            raise UsageError("--k is required")
        split = args.k
    try:
        f = clifford_family(args.m, split)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    info = {
        "m": f.m,
        "split": list(f.split),
        "delta": f.delta,
        "dimV": f.dimV,
        "n": f.n,
        "multiplicities": list(f.mult),
        "group": f.descriptor,
    }
    lines = [f"{f.label()}: {f.descriptor}",
             f"  delta = {f.delta}, dim V = {f.dimV}, CP^{f.n}, multiplicities {f.mult}"]
    if not f.in_scope:
        info["in_scope"] = False
        lines.append("  m1 > m2: congruent to a family with the multiplicities swapped; not classified here")
        _emit(out, info, args.format, lines)
        return 0
    try:
        pts = admissible_points_fkm(f, args.grid_bound)
        N, orbs = count_classes_fkm(f, args.grid_bound)
    except ScopeError as exc:
        raise UsageError(str(exc)) from exc
    want = closed_form_N(f)
    if N != want:
        raise ClassificationError(f"{f.label()}: orbit count {N} differs from closed form {want}")
    names = f.coordinate_names()
    show = [f.point_str(t) for t in pts]
    gens = [g.name for g in outpm_generators(f)]
    lows = [format_point(TorusPoint(EPSILON, w), names) for w in lowest_weights(f)]
    info.update({
        "admissible": show,
        "generators": gens,
        "lowest_weights": lows,
        "orbits": [[f.point_str(t) for t in orb] for orb in orbs],
        "N": N,
        "extrapolated": f.extrapolated,
    })
    lines += [
        f"  coordinates: {' '.join(names)}",
        f"  lowest weights: {', '.join(lows)}",
        f"  admissible points: {', '.join(show)}",
        f"  generators: {', '.join(gens) or 'none'}",
        "  orbits: " + "; ".join("{" + ", ".join(f.point_str(t) for t in orb) + "}" for orb in orbs),
        f"  N = {N}" + ("  (k+ or k- is zero: extrapolated)" if f.extrapolated else ""),
    ]
    _emit(out, info, args.format, lines)
    return 0


def cmd_census(args, out):
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    rows = cen.enumerate_foliations(n)
    if args.format in ("json", "csv"):
        out.write(cen.export(rows, args.format).decode())
        return 0
    lines = [f"CP^{n}: {len(rows)} foliation classes"]
    for r in rows:
        rep = "-" if r.representative is None else str(r.representative)
        extra = " overlap-candidate" if r.overlap_candidate else ""
        extra += " extrapolated" if r.extrapolated else ""
        lines.append(f"  codim {r.codim}  {r.source} {r.params}  rep {rep}  "
                     f"homogeneous={r.homogeneous}  N={r.N_within_source}{extra}")
    qs = [q for q in range(1, cen.codim_bound(n) + 1) if cen.inhomog_exists(n, q)]
    lines.append(f"inhomogeneous codimensions: {qs if qs else 'none'}")
    lines.append(f"all_homogeneous={'true' if cen.all_homogeneous(n) else 'false'}")
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_check(args, out):
    if not args.tables:
        raise UsageError("nothing to check; pass --tables")
    results = check_tables(max_rank=args.max_rank, bound=args.grid_bound)
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="isoproj", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=["table", "json", "csv"], default="table")
        p.add_argument("--grid-bound", type=int, default=DEFAULT_GRID_BOUND,
                       help="coordinate bound for the admissible-point searches (default 2)")

    sp = sub.add_parser("space", help="classify one inner symmetric pair")
    sp.add_argument("--label", required=True, help='e.g. "E II" or "A III"')
    sp.add_argument("--p", type=int)
    sp.add_argument("--nu", type=int)
    common(sp)

    fk = sub.add_parser("fkm", help="classify one Clifford (FKM) family")
    fk.add_argument("--m", type=int, required=True)
    fk.add_argument("--k", type=int)
    fk.add_argument("--kplus", type=int)
    fk.add_argument("--kminus", type=int)
    common(fk)

    ce = sub.add_parser("census", help="list all foliation classes on CP^n")
    ce.add_argument("--n", type=int, required=True)
    ce.add_argument("--format", choices=["table", "json", "csv"], default="table")

    ch = sub.add_parser("check", help="compare computations with the reference tables")
    ch.add_argument("--tables", action="store_true")
    ch.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    ch.add_argument("--grid-bound", type=int, default=DEFAULT_GRID_BOUND)
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"space": cmd_space, "fkm": cmd_fkm, "census": cmd_census, "check": cmd_check}[args.verb]
    try:
        if getattr(args, "grid_bound", 2) < 2:
            raise UsageError("--grid-bound must be at least 2")
        return handler(args, out)
    except UsageError as exc:
        err.write(f"isoproj {args.verb}: error: {exc}\n")
        return 2
    except (ClassificationError, AssertionError) as exc:
        err.write(f"isoproj {args.verb}: invariant failure: {exc}\n")
        return 1


def main():
    sys.exit(run())
