"""Command-line front end.

Exit codes: 0 on success, 2 for unreadable input or bad usage, 3 when the
input is well formed but the request makes no sense for it (a tangent at an
off-curve point, asymptotes of an ellipse, ...).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .classifier import reduce
from .errors import ConicError, InputError
from .factor import factor_lines
from .features import ON_CURVE_TOL, asymptotes, tangent_at
from .invariants import DEFAULT_TOL
from .parser import parse_coefficients, parse_conic
from .report import classify_report, format_text, line_data, reduce_report
from .sections import cone_axis_parallel_section, cone_plane_section, cylinder_section
from .svg import DEFAULT_VIEWPORT, emit_svg


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_angle(text: str) -> float:
    """Radians, or degrees with a ``deg`` suffix (``45deg``)."""
    t = text.strip().lower()
    try:
        if t.endswith("deg"):
            return math.radians(float(t[:-3]))
        if t.endswith("°"):
            return math.radians(float(t[:-1]))
        return float(t)
    except ValueError:
        raise UsageError(f"not an angle: {text!r}") from None


def _numbers(text, count, what):
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {count} comma-separated numbers") from None
    if len(values) != count or not all(math.isfinite(v) for v in values):
        raise UsageError(f"{what} must be {count} comma-separated numbers")
    return values


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tolerance (default 1e-9)")
    common.add_argument("--json", action="store_true", help="JSON output")

    equation = argparse.ArgumentParser(add_help=False)
    equation.add_argument("equation", nargs="?", help='equation such as "x^2 + 4xy - 3 = 0"')
    equation.add_argument("--coeffs", metavar="A,B2,C,D2,E2,F",
                          help="the six printed coefficients of A x^2 + B2 xy + C y^2 + D2 x + E2 y + F")

    p = _Parser(prog="conicred", description="Classify and reduce plane conics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in (("classify", "locus type and invariants"),
                       ("reduce", "full reduction to canonical form"),
                       ("factor", "lines of a degenerate conic"),
                       ("asymptotes", "asymptotes of a hyperbola")):
        sub.add_parser(name, parents=[common, equation], help=text)
    for name in ("tangent", "normal"):
        sp = sub.add_parser(name, parents=[common, equation], help=f"{name} line at a point of the curve")
        sp.add_argument("--at", required=True, metavar="x,y")
        sp.add_argument("--on-curve-tol", type=float, default=ON_CURVE_TOL)

    cone = sub.add_parser("cone-section", parents=[common], help="section of a cone by a plane")
    cone.add_argument("--alpha", required=True, help="half-angle of the cone")
    cone.add_argument("--beta", help="angle between plane and axis")
    cone.add_argument("--h", type=float, help="distance from the vertex to the plane along the axis")
    cone.add_argument("--parallel-offset", type=float, metavar="ETA",
                      help="distance of a plane parallel to the axis")

    cyl = sub.add_parser("cylinder-section", parents=[common], help="section of a cylinder by a plane")
    cyl.add_argument("--radius", type=float, required=True)
    cyl.add_argument("--beta", required=True)

    svg = sub.add_parser("svg", parents=[common, equation], help="render the curve as SVG")
    svg.add_argument("--viewport", metavar="xmin,xmax,ymin,ymax")
    svg.add_argument("--out", help="output path (default stdout)")
    return p


def _conic(args):
    if args.coeffs is not None:
        if args.equation is not None:
            raise UsageError("give either an equation or --coeffs, not both")
        return parse_coefficients(args.coeffs), args.coeffs
    if args.equation is None:
        raise UsageError("an equation (or --coeffs) is required")
    return parse_conic(args.equation), args.equation


def _emit(out, args, data, text):
    out.write((json.dumps(data, indent=2, sort_keys=True) if args.json else text) + "\n")


def _run_section(args):
    alpha = parse_angle(args.alpha)
    if args.parallel_offset is not None:
        if args.beta is not None or args.h is not None:
            raise UsageError("--parallel-offset excludes --beta and --h")
        rep = cone_axis_parallel_section(alpha, args.parallel_offset)
    else:
        if args.beta is None or args.h is None:
            raise UsageError("cone-section needs --beta and --h, or --parallel-offset")
        rep = cone_plane_section(alpha, parse_angle(args.beta), args.h, args.tol)
    return rep


def _section_text(rep):
    lines = [f"kind: {rep.kind}", f"eccentricity: {rep.eccentricity:.12g}"]
    for key, value in rep.as_dict().items():
        if key not in ("kind", "eccentricity") and value is not None:
            lines.append(f"{key}: {value:.12g}")
    return "\n".join(lines)


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        cmd = args.command
        if cmd == "cone-section":
            rep = _run_section(args)
            _emit(out, args, rep.as_dict(), _section_text(rep))
            return 0
        if cmd == "cylinder-section":
            rep = cylinder_section(args.radius, parse_angle(args.beta))
            _emit(out, args, rep.as_dict(), _section_text(rep))
            return 0

        conic, text = _conic(args)
        if cmd == "classify":
            report = classify_report(conic, text, args.tol)
            _emit(out, args, report.to_dict(), format_text(report))
        elif cmd == "reduce":
            report = reduce_report(conic, text, args.tol)
            _emit(out, args, report.to_dict(), format_text(report))
        elif cmd == "factor":
            fac = factor_lines(conic, args.tol)
            data = {"kind": fac.kind.value, "lines": [line_data(x) for x in fac.lines],
                    "multiplier": fac.multiplier}
            _emit(out, args, data, "\n".join(x.equation() for x in fac.lines))
        elif cmd == "asymptotes":
            asy = asymptotes(conic, args.tol)
            data = {"lines": [line_data(asy.first), line_data(asy.second)],
                    "intersection": list(asy.intersection)}
            _emit(out, args, data, f"{asy.first.equation()}\n{asy.second.equation()}")
        elif cmd in ("tangent", "normal"):
            x0, y0 = _numbers(args.at, 2, "--at")
            tn = tangent_at(conic, x0, y0, args.on_curve_tol)
            data = {"point": [x0, y0], "tangent": line_data(tn.tangent), "normal": line_data(tn.normal)}
            _emit(out, args, data, getattr(tn, cmd).equation())
        elif cmd == "svg":
            viewport = (_numbers(args.viewport, 4, "--viewport") if args.viewport
                        else DEFAULT_VIEWPORT)
            result = reduce(conic, args.tol)
            try:
                doc = emit_svg(conic, result, viewport)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(doc)
            else:
                out.write(doc)
        return 0
    except SystemExit as exc:  # --help
        return exc.code or 0
    except InputError as exc:
        err.write(f"conicred: error: {exc}\n")
        return 2
    except ConicError as exc:
        err.write(f"conicred: {exc}\n")
        return 3


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
