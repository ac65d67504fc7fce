"""Deterministic SVG rendering of a reduced conic.

World coordinates are written as they are and a single group transform
flips the y-axis, so every number inside ``class="locus"`` elements is a
point of the curve.  Coordinates carry nine decimals: with six, rounding
alone moves a point off a steep curve by more than 1e-6 in ``f``.
"""

from __future__ import annotations

import math

from .classifier import LINE_TAGS, ReductionResult, Tag
from .conic import GeneralConic, Line
from .transforms import chain_point, chain_vector

DECIMALS = 9
WIDTH = 600
SAMPLES = 240
DEFAULT_VIEWPORT = (-10.0, 10.0, -10.0, 10.0)


def _f(v):
    text = f"{v:.{DECIMALS}f}"
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def clip_line(line: Line, viewport):
    """Segment of ``line`` inside the viewport box, or None."""
    xmin, xmax, ymin, ymax = viewport
    x0, y0 = line.foot()
    dx, dy = line.direction()
    lo, hi = -math.inf, math.inf
    for p, q0, q1 in ((dx, xmin - x0, xmax - x0), (dy, ymin - y0, ymax - y0)):
        if p == 0.0:
            if q0 > 0 or q1 < 0:
                return None
            continue
        t0, t1 = sorted((q0 / p, q1 / p))
        lo, hi = max(lo, t0), min(hi, t1)
    if lo > hi:
        return None
    return line.point_at(lo), line.point_at(hi)


def _line_element(line, viewport, cls):
    seg = clip_line(line, viewport)
    if seg is None:
        return None
    (x1, y1), (x2, y2) = seg
    return (f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" '
            f'x2="{_f(x2)}" y2="{_f(y2)}"/>')


def _path(points, closed=False):
    head, *rest = points
    d = [f"M {_f(head[0])} {_f(head[1])}"]
    d.extend(f"L {_f(x)} {_f(y)}" for x, y in rest)
    if closed:
        d.append("Z")
    return f'<path class="locus" d="{" ".join(d)}"/>'


def _reach(origin, viewport):
    """Distance from ``origin`` to the farthest viewport corner."""
    xmin, xmax, ymin, ymax = viewport
    return max(math.hypot(x - origin[0], y - origin[1])
               for x in (xmin, xmax) for y in (ymin, ymax))


def _curve_paths(result, viewport):
    chain, e = result.chain, result.elements
    tag = result.classification
    if tag in (Tag.ELLIPSE, Tag.CIRCLE):
        a, b = e.semi_x, e.semi_y
        pts = [chain_point(chain, a * math.cos(t), b * math.sin(t))
               for t in (2 * math.pi * i / SAMPLES for i in range(SAMPLES))]
        return [_path(pts, closed=True)]
    if tag is Tag.HYPERBOLA:
        a, b = e.semi_x, e.semi_y
        tmax = math.asinh(_reach(e.center, viewport) / min(a, b)) + 0.1
        ts = [tmax * (2 * i / (SAMPLES - 1) - 1) for i in range(SAMPLES)]
        paths = []
        for s in (1.0, -1.0):
            if e.focal_axis == "x":
                pts = [chain_point(chain, s * a * math.cosh(t), b * math.sinh(t)) for t in ts]
            else:
                pts = [chain_point(chain, a * math.sinh(t), s * b * math.cosh(t)) for t in ts]
            paths.append(_path(pts))
        return paths
    if tag is Tag.PARABOLA:
        A, _, C, D, E, _ = result.canonical.coefficients()
        T = _reach(e.vertex, viewport)
        ts = [T * (2 * i / (SAMPLES - 1) - 1) for i in range(SAMPLES)]
        if A != 0.0:
            k = -A / (2 * E)
            pts = [chain_point(chain, t, k * t * t) for t in ts]
        else:
            k = -C / (2 * D)
            pts = [chain_point(chain, k * t * t, t) for t in ts]
        return [_path(pts)]
    if tag is Tag.POINT:
        x, y = e.center
        return [f'<circle class="locus" cx="{_f(x)}" cy="{_f(y)}" r="0.1"/>']
    if tag in LINE_TAGS:
        return [el for el in (_line_element(line, viewport, "locus") for line in e.lines) if el]
    return []


def emit_svg(conic: GeneralConic, result: ReductionResult, viewport=DEFAULT_VIEWPORT) -> str:
    """SVG document showing the curve, the coordinate and principal axes
    and, for a hyperbola, the asymptotes."""
    xmin, xmax, ymin, ymax = (float(v) for v in viewport)
    if not (xmin < xmax and ymin < ymax):
        raise ValueError("viewport must satisfy xmin < xmax and ymin < ymax")
    viewport = (xmin, xmax, ymin, ymax)
    w, h = xmax - xmin, ymax - ymin
    height = round(WIDTH * h / w)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="{_f(xmin)} {_f(-ymax)} {_f(w)} {_f(h)}">',
        "<style>line, path, circle { fill: none; vector-effect: non-scaling-stroke; }"
        " .axis { stroke: #999; } .principal-axis { stroke: #6a6; stroke-dasharray: 4 3; }"
        " .asymptote { stroke: #c66; stroke-dasharray: 2 2; } .locus { stroke: #036; stroke-width: 2; }"
        " circle.locus { fill: #036; }</style>",
        '<g transform="matrix(1 0 0 -1 0 0)">',
    ]
    for axis in (Line(0.0, 1.0, 0.0), Line(1.0, 0.0, 0.0)):
        el = _line_element(axis, viewport, "axis")
        if el:
            out.append(el)

    if result.classification is not Tag.EMPTY_SET:
        origin = chain_point(result.chain, 0.0, 0.0)
        for v in ((1.0, 0.0), (0.0, 1.0)):
            # principal axis: through the canonical origin along x' or y'
            dx, dy = chain_vector(result.chain, *v)
            el = _line_element(Line.through(origin, (-dy, dx)), viewport, "principal-axis")
            if el:
                out.append(el)
        for line in result.elements.asymptotes:
            el = _line_element(line, viewport, "asymptote")
            if el:
                out.append(el)
        out.extend(_curve_paths(result, viewport))
    out.append("</g>")
    if result.classification is Tag.EMPTY_SET:
        out.append(f'<text class="annotation" x="{_f(xmin + 0.05 * w)}" '
                   f'y="{_f(-ymax + 0.08 * h)}" font-size="{_f(0.05 * h)}">empty locus</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
