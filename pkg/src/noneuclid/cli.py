"""Command-line front-end.

Subcommands: volume, edges, principal, orthoscheme, delta, lobachevsky,
sweep, selfcheck.  Output as plain text (default, 10 significant digits),
a flat JSON object, or CSV with a header row.  Exit codes: 0 success,
1 check/convergence failure, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
import time

from . import lambert, orthoscheme, specfun
from .errors import DomainError, NonConvergence, NonFiniteIntegrand
from .quadrature import DEFAULT_ABS_TOL
from .verify import run_all_checks

# fields holding angles/arc lengths; the only ones --degrees-out converts
_ANGLE_FIELDS = frozenset({
    "alpha", "beta", "gamma", "theta", "x",
    "l_alpha", "l_beta", "l_gamma", "a", "b", "c",
})

_ANGLE_RE = re.compile(r"^([+-]?)(\d+(?:\.\d+)?)?pi(?:/(\d+(?:\.\d+)?))?$")


def parse_angle(text: str) -> float:
    """Plain decimals plus rational multiples of pi: 'pi/2', '2pi/3',
    '-3pi/4', '0.5pi'."""
    s = text.strip().lower().replace(" ", "")
    m = _ANGLE_RE.match(s)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        num = float(m.group(2)) if m.group(2) else 1.0
        den = float(m.group(3)) if m.group(3) else 1.0
        if den == 0.0:
            raise ValueError(f"zero denominator in angle {text!r}")
        return sign * num * math.pi / den
    try:
        return float(s)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}") from None


def parse_range(text: str) -> list[float]:
    """Either a single angle or an inclusive range 'start:stop:n'."""
    parts = text.split(":")
    if len(parts) == 1:
        return [parse_angle(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"range must be 'start:stop:n', got {text!r}")
    lo, hi = parse_angle(parts[0]), parse_angle(parts[1])
    n = int(parts[2])
    if n < 1:
        raise ValueError("range must contain at least one point")
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _fmt(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(record), file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(record.keys())
        writer.writerow("" if v is None else _fmt(v) for v in record.values())
    else:
        width = max(len(k) for k in record)
        for k, v in record.items():
            print(f"{k:<{width}}  {_fmt(v)}", file=out)


def _convert_out(record: dict, degrees_out: bool) -> dict:
    if not degrees_out:
        return record
    return {k: (math.degrees(v) if k in _ANGLE_FIELDS and isinstance(v, float)
                else v)
            for k, v in record.items()}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("plain", "json", "csv"),
                        default="plain")
    parser.add_argument("--degrees", action="store_true",
                        help="interpret input angles as degrees")
    parser.add_argument("--degrees-out", action="store_true",
                        help="emit angle fields in degrees")
    parser.add_argument("--no-timing", action="store_true",
                        help="suppress the wall-time field")
    parser.add_argument("--tol", type=float, default=None,
                        help="quadrature absolute tolerance")


def _add_angles(parser: argparse.ArgumentParser) -> None:
    for name in ("--alpha", "--beta", "--gamma"):
        parser.add_argument(name, required=True)


def _angles(args) -> tuple[float, float, float]:
    vals = (parse_angle(args.alpha), parse_angle(args.beta),
            parse_angle(args.gamma))
    if args.degrees:
        vals = tuple(math.radians(v) for v in vals)
    return vals


def _tol(args) -> float:
    if args.tol is not None:
        if args.tol <= 0.0:
            raise ValueError("--tol must be positive")
        return args.tol
    env = os.environ.get("NONEUCLID_TOL")
    if env:
        t = float(env)
        if t <= 0.0:
            raise ValueError("NONEUCLID_TOL must be positive")
        return t
    return DEFAULT_ABS_TOL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noneuclid",
        description="Volumes and metric data of Lambert cubes and "
                    "double-rectangular orthoschemes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", help="volume of a Lambert cube")
    _add_angles(p)
    p.add_argument("--geometry", choices=("spherical", "hyperbolic", "auto"),
                   default="auto")
    p.add_argument("--method", choices=("delta", "transformed", "ray"),
                   default="delta")
    _add_common(p)

    p = sub.add_parser("edges", help="essential edge lengths (spherical)")
    _add_angles(p)
    _add_common(p)

    p = sub.add_parser("principal", help="principal parameter data")
    _add_angles(p)
    _add_common(p)

    p = sub.add_parser("orthoscheme",
                       help="double-rectangular orthoscheme data and volume")
    _add_angles(p)
    p.add_argument("--method", choices=("series", "delta", "integral"),
                   default="series")
    _add_common(p)

    p = sub.add_parser("delta", help="the delta integral")
    p.add_argument("--alpha", required=True)
    p.add_argument("--theta", required=True)
    _add_common(p)

    p = sub.add_parser("lobachevsky", help="the Lobachevsky function")
    p.add_argument("--x", required=True)
    _add_common(p)

    p = sub.add_parser("sweep",
                       help="CSV sweep of the spherical volume over a grid")
    p.add_argument("--alpha", required=True, help="angle or start:stop:n")
    p.add_argument("--beta", required=True, help="angle or start:stop:n")
    p.add_argument("--gamma", required=True, help="angle or start:stop:n")
    _add_common(p)

    p = sub.add_parser("selfcheck", help="run the full identity-check suite")
    p.add_argument("--seed", type=int, default=42)
    _add_common(p)
    return parser


def _record_volume(args) -> dict:
    a, b, g = _angles(args)
    tol = _tol(args)
    ca = lambert.classify(a, b, g)
    if args.geometry != "auto" and ca.klass.value != args.geometry:
        raise DomainError(f"angles classify as {ca.klass.value}, "
                          f"not {args.geometry}")
    err = None
    if ca.klass is lambert.GeometryClass.SPHERICAL:
        pd = lambert.principal_spherical(ca)
        if args.method == "delta":
            vol, err, pd = lambert._spherical_volume_detail(ca, tol)
        else:
            vol = lambert.volume_spherical_integral(ca, tol, args.method)
            err = tol
    else:
        if args.method != "delta":
            raise DomainError("integral routes apply to spherical cubes only")
        pd = lambert.principal_hyperbolic(ca)
        vol = lambert.volume_hyperbolic(ca, tol)
        err = tol
    return {"geometry": ca.klass.value, "alpha": a, "beta": b, "gamma": g,
            "theta": pd.theta, "T": pd.T, "A": pd.A, "B": pd.B, "C": pd.C,
            "volume": vol, "err_estimate": err}


def _record_edges(args) -> dict:
    a, b, g = _angles(args)
    ca = lambert.classify(a, b, g)
    if ca.klass is not lambert.GeometryClass.SPHERICAL:
        raise DomainError("edge lengths are implemented for spherical cubes")
    pd = lambert.principal_spherical(ca)
    el = lambert.edge_lengths_spherical(pd)
    return {"geometry": ca.klass.value, "alpha": a, "beta": b, "gamma": g,
            "theta": pd.theta, "T": pd.T,
            "l_alpha": el.l_alpha, "l_beta": el.l_beta, "l_gamma": el.l_gamma}


def _record_principal(args) -> dict:
    a, b, g = _angles(args)
    ca = lambert.classify(a, b, g)
    if ca.klass is lambert.GeometryClass.SPHERICAL:
        pd = lambert.principal_spherical(ca)
    else:
        pd = lambert.principal_hyperbolic(ca)
    return {"geometry": ca.klass.value, "alpha": a, "beta": b, "gamma": g,
            "L": pd.L, "M": pd.M, "N": pd.N, "p": pd.p,
            "T": pd.T, "theta": pd.theta, "A": pd.A, "B": pd.B, "C": pd.C}


def _record_orthoscheme(args) -> dict:
    a, b, g = _angles(args)
    tol = _tol(args)
    ang = orthoscheme.OrthoschemeAngles(a, b, g)
    data = orthoscheme.classify_orthoscheme(ang)
    vol = None
    edges = (None, None, None)
    if data.curvature is orthoscheme.Curvature.SPHERICAL:
        fn = {"series": orthoscheme.volume_orthoscheme_schlaefli,
              "delta": orthoscheme.volume_via_delta,
              "integral": orthoscheme.volume_orthoscheme_integral}[args.method]
        vol = fn(ang, tol)
        edges = orthoscheme.orthoscheme_edges(data, ang)
    elif data.curvature is orthoscheme.Curvature.EUCLIDEAN:
        vol = 0.0
    return {"curvature": data.curvature.value,
            "alpha": a, "beta": b, "gamma": g,
            "D": data.D, "X": data.X, "T": data.T, "theta": data.theta,
            "a": edges[0], "b": edges[1], "c": edges[2], "volume": vol}


def _record_delta(args) -> dict:
    a = parse_angle(args.alpha)
    t = parse_angle(args.theta)
    if args.degrees:
        a, t = math.radians(a), math.radians(t)
    tol = _tol(args)
    value, err = specfun.integrate_log_kernel(
        [(1.0, math.cos(2.0 * a))], t, 0.5 * math.pi, tol)
    return {"alpha": a, "theta": t, "delta": value, "err_estimate": err}


def _record_lobachevsky(args) -> dict:
    x = parse_angle(args.x)
    if args.degrees:
        x = math.radians(x)
    return {"x": x, "lobachevsky": specfun.lobachevsky(x)}


def _run_sweep(args, out) -> int:
    tol = _tol(args)
    axes = [parse_range(getattr(args, name))
            for name in ("alpha", "beta", "gamma")]
    if args.degrees:
        axes = [[math.radians(v) for v in axis] for axis in axes]
    writer = csv.writer(out)
    writer.writerow(("alpha", "beta", "gamma", "theta", "T",
                     "volume", "err_estimate"))
    conv = math.degrees if args.degrees_out else (lambda v: v)
    for a in axes[0]:
        for b in axes[1]:
            for g in axes[2]:
                ca = lambert.classify(a, b, g)
                if ca.klass is lambert.GeometryClass.SPHERICAL:
                    vol, err, pd = lambert._spherical_volume_detail(ca, tol)
                else:
                    pd = lambert.principal_hyperbolic(ca)
                    vol = lambert.volume_hyperbolic(ca, tol)
                    err = tol
                writer.writerow(_fmt(v) for v in
                                (conv(a), conv(b), conv(g), conv(pd.theta),
                                 pd.T, vol, err))
    return 0


def _run_selfcheck(args, out) -> int:
    reports = run_all_checks(seed=args.seed, tolerance=args.tol)
    for rep in reports:
        print(rep, file=out)
    return 0 if all(r.passed for r in reports) else 1


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = sys.stdout
    try:
        start = time.perf_counter()
        if args.command == "sweep":
            return _run_sweep(args, out)
        if args.command == "selfcheck":
            return _run_selfcheck(args, out)
        record = {
            "volume": _record_volume,
            "edges": _record_edges,
            "principal": _record_principal,
            "orthoscheme": _record_orthoscheme,
            "delta": _record_delta,
            "lobachevsky": _record_lobachevsky,
        }[args.command](args)
        if not args.no_timing:
            record["wall_time_ms"] = (time.perf_counter() - start) * 1e3
        _emit(_convert_out(record, args.degrees_out), args.format, out)
        return 0
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (NonConvergence, NonFiniteIntegrand) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
