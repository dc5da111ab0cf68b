"""Command-line front end.

Exit codes: 0 success, 2 precondition failure (bad input, critical
parameter in the grid, ...), 1 internal error, 3 a verification check failed.
Every output starts with provenance: '#' lines for CSV, a "provenance" key
for JSON. Floats are written with repr, the shortest string that round-trips.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import traceback

import numpy as np

from . import __version__
from .errors import ConvergenceError, EquidistError, SpecError
from .functions import from_json

TOL_ENV = "EQUIDIST_TOL"


def _tol(default):
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return default
    try:
        val = float(raw)
    except ValueError:
        raise SpecError(f"{TOL_ENV} is not a number: {raw!r}", TOL_ENV) from None
    if not val > 0:
        raise SpecError(f"{TOL_ENV} must be positive", TOL_ENV)
    return val


def parse_grid(text):
    """'lo:hi:n' -> numpy grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise SpecError(f"grid must look like lo:hi:n, got {text!r}", "grid")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise SpecError(f"grid must look like lo:hi:n, got {text!r}", "grid") from None
    if n < 2:
        raise SpecError("grid needs n >= 2", "grid")
    if not hi > lo:
        raise SpecError("grid needs hi > lo", "grid")
    return np.linspace(lo, hi, n)


def parse_ray(text):
    """'u1,u2,...:rmax:n' -> (unit direction, rmax, n)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise SpecError(f"ray must look like u1,u2:rmax:n, got {text!r}", "ray")
    try:
        u = np.array([float(v) for v in parts[0].split(",")])
        rmax, n = float(parts[1]), int(parts[2])
    except ValueError:
        raise SpecError(f"ray must look like u1,u2:rmax:n, got {text!r}", "ray") from None
    norm = float(np.linalg.norm(u))
    if norm == 0:
        raise SpecError("ray direction must be nonzero", "ray")
    if n < 2:
        raise SpecError("ray needs n >= 2", "ray")
    return u / norm, rmax, n


def _radius(value):
    if not value > 0:
        raise SpecError("R must be positive", "R")
    return value


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.ndarray):
        return _jsonable(v.tolist())
    if isinstance(v, (np.bool_, bool)):
        return bool(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    return v


class Output:
    def __init__(self, path, provenance):
        self.path = path
        self.provenance = provenance

    def _write(self, text):
        if self.path is None or self.path == "-":
            sys.stdout.write(text)
        else:
            with open(self.path, "w", newline="") as fh:
                fh.write(text)

    def csv(self, columns, rows, extra=()):
        lines = [f"# {k}: {v}" for k, v in list(self.provenance.items()) + list(extra)]
        lines.append(",".join(columns))
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        self._write("\n".join(lines) + "\n")

    def json(self, payload):
        doc = {"provenance": self.provenance}
        doc.update(payload)
        self._write(json.dumps(_jsonable(doc), indent=2, allow_nan=False) + "\n")

    def table(self, fmt, columns, rows, extra=()):
        if fmt == "json":
            self.json({**dict(extra), "columns": columns, "rows": [list(r) for r in rows]})
        else:
            self.csv(columns, rows, extra)


def _provenance(args, fn=None, R=None, tol=None):
    prov = {"equidist": __version__, "command": args.command}
    if fn is not None:
        prov["fn"] = json.dumps(fn.to_json(), sort_keys=True)
    if R is not None:
        prov["R"] = repr(float(R))
    if tol is not None:
        prov["tol"] = repr(float(tol))
    return prov


# ---------------------------------------------------------------- commands

def cmd_curve(args):
    from . import circle, sphere

    f, R = from_json(args.fn), _radius(args.R)
    out = Output(args.out, _provenance(args, f, R))
    if not args.grid:
        raise SpecError("give --grid lo:hi:n (once per coordinate)", "grid")
    if len(args.grid) != f.dim:
        raise SpecError(f"need {f.dim} --grid option(s), got {len(args.grid)}", "grid")
    axes = [parse_grid(g) for g in args.grid]
    if f.dim == 1:
        c = circle.trace_curve(f, R, axes[0])
        cols = ["t", "x", "y", "s", "alpha", "g", "r", "f", "f_slope"]
        data = np.column_stack([c.t, c.x, c.y, c.s, c.alpha, c.g, c.r, f.value(c.t), f.gradient(c.t)])
    else:
        p = sphere.trace_patch(f, R, axes)
        n = f.dim
        t = p.t.reshape(-1, n)
        idx = range(1, n + 1)
        cols = ([f"t{i}" for i in idx] + [f"x{i}" for i in idx] + ["y", "s", "alpha"]
                + [f"g{i}" for i in idx] + ["r", "f"] + [f"f_slope{i}" for i in idx])
        data = np.column_stack([t, p.x.reshape(-1, n), p.y.ravel(), p.s.ravel(), p.alpha.ravel(),
                                p.g.reshape(-1, n), p.r.ravel(), f.value(t), f.gradient(t)])
    out.table(args.format, cols, data.tolist())
    return 0


def cmd_domain(args):
    from . import circle

    f, R = from_json(args.fn), _radius(args.R)
    if f.dim != 1:
        raise SpecError("domain needs a one-variable function; use 'rays' in higher dimensions", "fn")
    dom = circle.critical_domain(f, R, search_radius=args.search_radius, tol=_tol(1e-10))
    prov = _provenance(args, f, R, _tol(1e-10))
    prov["search_radius"] = repr(float(args.search_radius))
    Output(args.out, prov).json({"t_minus": dom.t_minus, "t_plus": dom.t_plus})
    return 0


def cmd_rays(args):
    from . import sphere

    f, R = from_json(args.fn), _radius(args.R)
    tol = _tol(1e-10)
    rows = []
    for text in args.ray:
        u, rmax, n = parse_ray(text)
        if u.size != f.dim:
            raise SpecError(f"ray direction needs {f.dim} components", "ray")
        seg = sphere.ray_admissible_segments(f, R, u, rmax, grid_n=max(n, 2), tol=tol)
        for a, b in seg.segments:
            rows.append(list(u) + [a, b, seg.t_u_plus])
    cols = [f"u{i}" for i in range(1, f.dim + 1)] + ["r_start", "r_end", "t_u_plus"]
    Output(args.out, _provenance(args, f, R, tol)).table(args.format, cols, rows)
    return 0


def _focal_K(args, R, dim):
    from .checks import circle_cloud
    from .geometry import Ball

    if args.cloud:
        if dim != 1:
            raise SpecError("point clouds are only available in the plane", "cloud")
        return circle_cloud(R, args.cloud)
    return Ball(R, dim=dim + 1)


def cmd_vertical(args):
    from .vertical import profile

    f, R = from_json(args.fn), _radius(args.R)
    if f.dim != 1:
        raise SpecError("vertical scans from the CLI take one-variable functions", "fn")
    tol = _tol(1e-10)
    xs = parse_grid(args.grid)
    scans = profile(xs, _focal_K(args, R, 1), f, grid_n=args.grid_n, tol=tol)
    rows = [[float(s.x[0]), s.g_minus, s.g_plus, len(s.roots), len(s.clusters),
             s.bounds.lower, s.bounds.upper] for s in scans]
    cols = ["x", "g_minus", "g_plus", "n_roots", "n_clusters", "lower", "upper"]
    extra = [("K", f"cloud of {args.cloud} points" if args.cloud else "ball")]
    Output(args.out, _provenance(args, f, R, tol)).table(args.format, cols, rows, extra)
    return 0


def cmd_characterize(args):
    from .characterize import is_equidistant_function

    G, R = from_json(args.fn), _radius(args.R)
    tol = _tol(1e-6)
    grid = parse_grid(args.grid) if args.grid else None
    rep = is_equidistant_function(G, R, grid, tol=tol)
    Output(args.out, _provenance(args, G, R, tol)).json(rep.to_json())
    return 0


def cmd_minop(args):
    from .minop import DEFAULT_TOL, min_commute_check, sandwich_check

    fam = [from_json(s) for s in args.fn]
    if len(fam) < 2:
        raise SpecError("give at least two --fn members", "fn")
    R = _radius(args.R)
    tol = _tol(DEFAULT_TOL)
    xs = parse_grid(args.grid)
    K = _focal_K(args, R, 1)
    rep = sandwich_check(K, fam, xs, tol=tol)
    extra = [("sandwich_ok", str(rep.ok)), ("sandwich_violations", str(len(rep.violations)))]
    if args.commute:
        mc = min_commute_check(K, fam, xs, tol=tol)
        extra += [("commute_ok", str(mc.ok)), ("commute_max_gap", repr(mc.max_gap))]
    prov = _provenance(args, None, R, tol)
    prov["family"] = json.dumps([m.to_json() for m in fam], sort_keys=True)
    cols = ["x", "G_min"] + [f"G_{i}" for i in range(1, len(fam) + 1)]
    Output(args.out, prov).table(args.format, cols, rep.table().tolist(), extra)
    return 0


def cmd_pathology(args):
    from .pathology import RESIDUAL_TOL, build_scene, segment_membership_test

    if not args.svc:
        raise SpecError("only the --svc scene is available", "svc")
    if args.depth < 0:
        raise SpecError("depth must be nonnegative", "depth")
    tol = _tol(RESIDUAL_TOL)
    scene = build_scene(args.depth)
    t = np.linspace(-0.5, 0.5, args.n)
    conv = segment_membership_test(scene, t, use_trimmed=False, tol=tol)
    trim = segment_membership_test(scene, t, use_trimmed=True, tol=tol)
    prov = _provenance(args, scene.f, scene.R, tol)
    prov["depth"] = str(args.depth)
    extra = [("x0", repr(scene.x0)), ("kept_measure", str(scene.cantor.measure)),
             ("kept_measure_float", repr(float(scene.cantor.measure))),
             ("disagreements", str(int((~trim.agrees).sum())))]
    cols = ["t", "residual_convex", "residual_trimmed", "in_fat_cantor", "equidistant_trimmed"]
    rows = [[a, b, c, bool(d), bool(e)] for a, b, c, d, e in
            zip(t, conv.residual, trim.residual, trim.in_fat_cantor, trim.is_equidistant)]
    Output(args.out, prov).table(args.format, cols, rows, extra)
    return 0


def cmd_verify(args):
    from .checks import CHECKS, run_checks

    only = None
    if args.only:
        only = [name for item in args.only for name in item.split(",") if name]
        unknown = [n for n in only if n not in CHECKS]
        if unknown:
            raise SpecError(f"unknown check(s) {unknown}; choose from {list(CHECKS)}", "only")
    results = run_checks(only, perturb=args.perturb)
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {"passed": all(r.passed for r in results),
              "perturbed": bool(args.perturb),
              "failed": [r.name for r in results if not r.passed],
              "checks": [r.to_json() for r in results]}
    if args.out:
        Output(args.out, _provenance(args)).json(report)
    return 0 if report["passed"] else 3


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="equidist",
                                description="Equidistant sets between a ball about the origin and a convex epigraph.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fn=True, R=True, fmt=True):
        if fn:
            sp.add_argument("--fn", required=True, help="function spec as JSON, e.g. '{\"kind\":\"exp\"}'")
        if R:
            sp.add_argument("--R", type=float, required=True, help="radius of the ball about the origin")
        sp.add_argument("--out", default=None, help="output file (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("curve", help="trace the closed-form equidistant curve or patch")
    common(sp)
    sp.add_argument("--grid", action="append", help="lo:hi:n; repeat once per coordinate")
    sp.set_defaults(run=cmd_curve)

    sp = sub.add_parser("domain", help="admissible parameter interval (JSON)")
    common(sp, fmt=False)
    sp.add_argument("--search-radius", type=float, default=1e3)
    sp.set_defaults(run=cmd_domain)

    sp = sub.add_parser("rays", help="admissible segments along rays t = r u")
    common(sp)
    sp.add_argument("--ray", action="append", required=True, help="u1,u2,...:rmax:n")
    sp.set_defaults(run=cmd_rays)

    sp = sub.add_parser("vertical", help="scan vertical lines for equidistant points")
    common(sp)
    sp.add_argument("--grid", required=True, help="base points lo:hi:n")
    sp.add_argument("--grid-n", type=int, default=1024, help="nodes per vertical line")
    sp.add_argument("--cloud", type=int, default=0, help="replace the ball by this many circle points")
    sp.set_defaults(run=cmd_vertical)

    sp = sub.add_parser("characterize", help="test whether G is an equidistant function (JSON)")
    common(sp, fmt=False)
    sp.add_argument("--grid", default=None, help="sample points lo:hi:n")
    sp.set_defaults(run=cmd_characterize)

    sp = sub.add_parser("minop", help="minimum operator: sandwich and commuting checks")
    sp.add_argument("--fn", action="append", required=True, help="family member JSON; repeat")
    common(sp, fn=False)
    sp.add_argument("--grid", required=True, help="base points lo:hi:n")
    sp.add_argument("--cloud", type=int, default=0)
    sp.add_argument("--commute", action="store_true", help="also compare G_min with min G_i")
    sp.set_defaults(run=cmd_minop)

    sp = sub.add_parser("pathology", help="Smith-Volterra-Cantor scene along the vertical segment")
    common(sp, fn=False, R=False)
    sp.add_argument("--svc", action="store_true", help="use the fat Cantor scene")
    sp.add_argument("--depth", type=int, default=3)
    sp.add_argument("--n", type=int, default=257, help="number of sampled t in [-1/2, 1/2]")
    sp.set_defaults(run=cmd_pathology)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.add_argument("--only", action="append", help="comma-separated check names")
    sp.add_argument("--perturb", action="store_true", help="inject a perturbation (negative control)")
    sp.add_argument("--out", default=None, help="JSON report file")
    sp.set_defaults(run=cmd_verify)
    return p


_VALUE_FLAGS = ("--grid", "--ray")


def _glue_values(argv):
    """Turn '--grid -1:1:5' into '--grid=-1:1:5' so argparse accepts a leading minus."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.run(args)
    except ConvergenceError as exc:
        print(f"equidist: internal error: {exc}", file=sys.stderr)
        return 1
    except EquidistError as exc:
        print(f"equidist: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"equidist: {exc}", file=sys.stderr)
        return 2
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
