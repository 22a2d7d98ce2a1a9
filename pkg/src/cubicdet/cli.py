"""Command-line interface: ``cubicdet <subcommand> ...``.

Exit status: 0 on success, 1 when a mathematical check fails (for instance
a matrix that is not a representation), 2 on malformed input.
"""

import argparse
import json
import sys

from . import catalog
from .census import census_run, verify_representatives
from .curve import NormalizedCubic, SmoothCubic, normalize, parse_point, rational_points, tangent_line
from .detrep import (WeierstrassCurve, default_base_point, detrep_algorithm, detrep_all,
                     detrep_formula, detrep_galinat, detrep_transport, detrep_verify)
from .equiv import brute_force_equivalent, recover_point
from .errors import CubicDetError, UsageError
from .field import parse_field_spec
from .forms import LinearMatrix, monomials, parse_form


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field(args):
    return parse_field_spec(args.field)


def _cubic(args, K):
    text = args.cubic.strip()
    if text.startswith("["):
        vec = [K.parse(s) for s in text.strip("[]").split(",")]
        from .forms import TernaryForm
        F = TernaryForm.from_vector(K, 3, vec)
    else:
        F = parse_form(text, K, degree=3)
    return F


def _curve(args, K):
    F = _cubic(args, K)
    if K.is_finite:
        return SmoothCubic(F)
    return F


def _load_matrix(path, K, transpose=False):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    if isinstance(obj, dict) and "matrix" in obj:
        obj = obj["matrix"]
    M = LinearMatrix.from_json(obj, K)
    return M.transpose() if transpose else M


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# --- subcommands ----------------------------------------------------------------

def cmd_points(args):
    K = _field(args)
    C = _curve(args, K)
    pts = rational_points(C, args.degree)
    _emit(args, {"schema": 1, "field": K.spec(), "curve": str(C.F), "degree": args.degree,
                 "count": len(pts), "points": [str(P) for P in pts]},
          "\n".join(str(P) for P in pts) + f"\n# {len(pts)} points")
    return 0


def _detrep_point(C, P, P0, method):
    if isinstance(C, NormalizedCubic) and P0 == C.P0:
        build = detrep_formula if method == "formula" else detrep_algorithm
        return build(C, P)
    G, T = normalize(C, P0)
    Q = T.inverse().apply(P.coords)
    from .curve import ProjectivePoint
    build = detrep_formula if method == "formula" else detrep_algorithm
    rep = build(G, ProjectivePoint(C.field, Q))
    return detrep_transport(rep, T, C.F)


def cmd_detrep(args):
    K = _field(args)
    if args.method == "galinat":
        E = _weierstrass(args, K)
        points = E.affine_points() if args.all else [parse_point(args.point, K)]
        reps = [detrep_galinat(E, P) for P in points]
    else:
        C = _curve(args, K)
        if not isinstance(C, SmoothCubic):
            raise UsageError("formula and algorithm need a finite field")
        C = _maybe_normalized(C)
        P0 = parse_point(args.base, K) if args.base else default_base_point(C)
        if args.all:
            reps = detrep_all(C, P0, args.method)
        else:
            reps = [_detrep_point(C, parse_point(args.point, K), P0, args.method)]
    payload = {"schema": 1, "representations": [r.to_json() for r in reps]}
    text = "\n\n".join(f"# point {r.point}\n{r}" for r in reps) or "# no representations"
    _emit(args, payload, text)
    return 0


def _maybe_normalized(C):
    try:
        return NormalizedCubic(C.F, check=False)
    except CubicDetError:
        return C


def _weierstrass(args, K):
    F = _cubic(args, K)
    a = K.neg(F.coefficient((1, 0, 2)))
    b = K.neg(F.coefficient((0, 0, 3)))
    shape = {(0, 2, 1): K.one, (3, 0, 0): K.neg(K.one), (1, 0, 2): K.neg(a), (0, 0, 3): K.neg(b)}
    if any(F.coefficient(m) != shape.get(m, 0) for m in monomials(3)):
        raise UsageError("galinat needs a cubic of the form Y^2*Z - X^3 - a*X*Z^2 - b*Z^3")
    return WeierstrassCurve(K, a, b)


def cmd_verify(args):
    K = _field(args)
    F = _cubic(args, K)
    M = _load_matrix(args.matrix, K, args.transpose)
    lam = detrep_verify(F, M)
    _emit(args, {"schema": 1, "lambda": str(lam), "field": K.spec(), "curve": str(F)},
          f"det(M) = {lam} * F")
    return 0


def cmd_equiv(args):
    K = _field(args)
    C = _curve(args, K)
    M1 = _load_matrix(args.matrix1, K)
    M2 = _load_matrix(args.matrix2, K)
    P0 = parse_point(args.base, K) if args.base else None
    C = _maybe_normalized(C)
    p1 = recover_point(C, M1, args.route, P0)
    p2 = recover_point(C, M2, args.route, P0)
    payload = {"schema": 1, "equivalent": p1 == p2, "point1": str(p1), "point2": str(p2)}
    if args.brute:
        w = brute_force_equivalent(C, M1, M2)
        payload["witness"] = None if w is None else {"A": w[0], "B": w[1]}
        if (w is not None) != (p1 == p2):
            raise CubicDetError("brute-force search disagrees with point recovery")
    _emit(args, payload, f"equivalent: {p1 == p2} ({p1} vs {p2})")
    return 0


def cmd_recover(args):
    K = _field(args)
    C = _maybe_normalized(_curve(args, K))
    M = _load_matrix(args.matrix, K, args.transpose)
    P0 = parse_point(args.base, K) if args.base else None
    P = recover_point(C, M, args.route, P0)
    _emit(args, {"schema": 1, "point": str(P)}, str(P))
    return 0


def cmd_normalize(args):
    K = _field(args)
    C = _curve(args, K)
    P0 = parse_point(args.point, K) if args.point else default_base_point(C)
    G, T = normalize(C, P0)
    rows = [[K.fmt(c, signed=True) for c in r] for r in T.matrix]
    payload = {"schema": 1, "cubic": str(G.F), "transform": rows, "base": str(P0),
               "tangent": str(tangent_line(C, P0))}
    text = f"G = {G.F}\nT = {rows}\n(G = F o T, T [1:0:0] = {P0})"
    _emit(args, payload, text)
    return 0


def cmd_census(args):
    rep = census_run(args.q, full=args.full, cache_dir=args.cache)
    counts = {str(k): v for k, v in rep.counts.items()}
    if args.report:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(json.dumps(counts, sort_keys=True))
    ok = rep.tallies_agree and rep.hasse_ok and rep.orbit_stabilizer_ok is not False
    return 0 if ok else 1


def reference_suite(census_fields=(2, 3, 4, 5), full=False, cache_dir=None):
    """Run every published check; returns a list of (name, ok, detail)."""
    from .field import QQ
    rows = []
    reports = {}
    fields = tuple(census_fields) + ((7,) if full else ())
    for q in fields:
        try:
            rep = census_run(q, full=full, cache_dir=cache_dir)
            reports[q] = rep
            want = catalog.TABLE[q]
            ok = rep.counts_tuple() == want and rep.tallies_agree and rep.hasse_ok
            rows.append((f"table q={q}", ok, f"{rep.counts_tuple()} expected {want}"))
        except CubicDetError as exc:
            rows.append((f"table q={q}", False, str(exc)))
    for chk in verify_representatives(reports):
        rows.append((f"representative q={chk.q}: {chk.cubic}", chk.ok,
                     f"points {chk.points}, classes {chk.classes}"
                     + (f", errors {chk.errors}" if chk.errors else "")))
    for pm in catalog.PRINTED_MATRICES:
        K = parse_field_spec(pm.field_spec)
        C = NormalizedCubic(parse_form(pm.cubic, K))
        rep = detrep_formula(C, parse_point(pm.point, K))
        ok = [list(r) for r in rep.M.rows_as_strings()] == [list(r) for r in pm.rows]
        rows.append((f"printed matrix {pm.name}", ok, str(rep.M.rows_as_strings())))
    for pm in catalog.RATIONAL_MATRICES:
        F = parse_form(pm.cubic, QQ)
        M = LinearMatrix(QQ, [[parse_form(s, QQ, degree=1) for s in r] for r in pm.rows])
        for label, mat in (("", M), (" transpose", M.transpose())):
            try:
                lam = detrep_verify(F, mat)
                rows.append((f"rational matrix {pm.name}{label}", True, f"lambda = {lam}"))
            except CubicDetError as exc:
                rows.append((f"rational matrix {pm.name}{label}", False, str(exc)))
    return rows


def cmd_reference_suite(args):
    rows = reference_suite(full=args.full, cache_dir=args.cache)
    if args.json:
        print(json.dumps([{"check": n, "ok": ok, "detail": d} for n, ok, d in rows], indent=2))
    else:
        for name, ok, detail in rows:
            print(f"{'PASS' if ok else 'FAIL'}  {name}  [{detail}]")
        print(f"# {sum(ok for _, ok, _ in rows)}/{len(rows)} passed")
    return 0 if all(ok for _, ok, _ in rows) else 1


# --- argument grammar -------------------------------------------------------------

def build_parser():
    p = _Parser(prog="cubicdet", description="Linear determinantal representations of plane cubics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, cubic=True):
        sp.add_argument("--field", required=True, help="Q, q=4, q=3^2 or q=9,mod=w^2+1")
        if cubic:
            sp.add_argument("--cubic", required=True,
                            help="cubic form such as 'X^2*Z+X*Y^2+Y*Z^2', or a 10-vector [a000,...]")
        sp.add_argument("--json", action="store_true", help="JSON output")

    sp = sub.add_parser("points", help="list rational points")
    common(sp)
    sp.add_argument("--degree", type=int, default=1, help="points over GF(q^degree)")
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("detrep", help="build representations")
    common(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--point", help="point [s:t:u]")
    g.add_argument("--all", action="store_true", help="one representation per rational point")
    sp.add_argument("--method", choices=("formula", "algorithm", "galinat"), default="formula")
    sp.add_argument("--base", help="base point P0 (default [1:0:0] when on the curve)")
    sp.set_defaults(func=cmd_detrep)

    sp = sub.add_parser("verify", help="check det(M) = lambda F")
    common(sp)
    sp.add_argument("--matrix", required=True, help="JSON file with {'entries': 3x3 strings}")
    sp.add_argument("--transpose", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("equiv", help="decide equivalence of two representations")
    common(sp)
    sp.add_argument("--matrix1", required=True)
    sp.add_argument("--matrix2", required=True)
    sp.add_argument("--base", help="base point P0")
    sp.add_argument("--route", choices=("adjugate", "section"), default="adjugate")
    sp.add_argument("--brute", action="store_true", help="also search GL3 x GL3 (F_2, F_3 only)")
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("recover", help="point attached to a representation")
    common(sp)
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--transpose", action="store_true")
    sp.add_argument("--base", help="base point P0")
    sp.add_argument("--route", choices=("adjugate", "section"), default="adjugate")
    sp.set_defaults(func=cmd_recover)

    sp = sub.add_parser("normalize", help="move a point to [1:0:0] with tangent Z = 0")
    common(sp)
    sp.add_argument("--point", help="base point P0")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("census", help="count PGL3 classes of cubics with few points")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--full", action="store_true", help="allow the long q = 7 run")
    sp.add_argument("--report", action="store_true", help="full JSON report")
    sp.add_argument("--cache", help="directory for cached reports")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("paper-suite", help="run every published check")
    sp.add_argument("--full", action="store_true", help="include the q = 7 census")
    sp.add_argument("--cache", help="directory for cached census reports")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_reference_suite)
    return p


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CubicDetError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


__all__ = ["run", "main", "reference_suite", "build_parser"]
