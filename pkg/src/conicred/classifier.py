"""Classification of a conic and its reduction to canonical form.

The tag is decided from the invariants alone.  The reduction then chains
at most one translation and one rotation so that, in the final ``x'y'``
frame, the equation is one of

* ``lambda1 x'^2 + lambda2 y'^2 + K = 0``            (unique center),
* ``omega x'^2 + 2E' y' = 0`` or ``omega y'^2 + 2D' x' = 0``  (parabola),
* ``omega x'^2 + f0 = 0`` or ``omega y'^2 + f0 = 0``  (line of centers).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .centers import (
    CenterLine,
    UniqueCenter,
    center_line,
    center_system_consistent,
    delta_vanishes,
    on_curve,
    quadratic_part_vanishes,
    unique_center,
)
from .conic import GeneralConic, Line
from .errors import DegenerateLinearInput
from .invariants import DEFAULT_TOL, Invariants, evaluate_f, invariants, term_magnitude
from .spectral import SpectralData, eigen2x2
from .transforms import RigidMotion, chain_point, chain_vector, rotate_by_matrix


class Tag(str, enum.Enum):
    CIRCLE = "Circle"
    ELLIPSE = "Ellipse"
    HYPERBOLA = "Hyperbola"
    PARABOLA = "Parabola"
    POINT = "Point"
    TWO_CONCURRENT_LINES = "TwoConcurrentLines"
    TWO_PARALLEL_LINES = "TwoParallelLines"
    DOUBLE_LINE = "DoubleLine"
    EMPTY_SET = "EmptySet"
    DEGENERATE_LINEAR = "DegenerateLinear"

    def __str__(self):
        return self.value


LINE_TAGS = frozenset({Tag.TWO_CONCURRENT_LINES, Tag.TWO_PARALLEL_LINES, Tag.DOUBLE_LINE})


@dataclass(frozen=True)
class Elements:
    """Geometric elements, positions in the original coordinates.

    ``semi_x`` and ``semi_y`` are the semi-axes measured along ``x'`` and
    ``y'``; ``focal_axis`` says which of the two carries the foci.
    """

    center: tuple | None = None
    vertex: tuple | None = None
    semi_x: float | None = None
    semi_y: float | None = None
    focal_axis: str | None = None
    linear_c: float | None = None
    eccentricity: float | None = None
    foci: tuple = ()
    focal_parameter: float | None = None
    directrix: Line | None = None
    center_line: Line | None = None
    asymptotes: tuple = ()
    lines: tuple = ()


@dataclass(frozen=True)
class ReductionResult:
    classification: Tag
    canonical: GeneralConic
    chain: tuple
    elements: Elements
    invariants: Invariants
    spectral: SpectralData
    equation: str = field(default="")

    @property
    def angle(self):
        return sum(m.rotation_angle for m in self.chain)


def _zero_f_at(conic, x, y, tol):
    """``f(x, y)`` if it is clearly nonzero, else exactly 0."""
    value = evaluate_f(conic, x, y)
    return 0.0 if abs(value) <= tol * term_magnitude(conic, x, y) else value


def _axis_point(conic):
    """A point of the line of centers on a coordinate axis."""
    if abs(conic.A) >= abs(conic.C):
        return (-conic.D / conic.A, 0.0)
    return (0.0, -conic.E / conic.C)


def classify(conic: GeneralConic, tol: float = DEFAULT_TOL) -> Tag:
    """Locus type of ``conic``.

    >>> classify(GeneralConic(5, 3, 5, -2, 2, -4))
    <Tag.ELLIPSE: 'Ellipse'>
    """
    if quadratic_part_vanishes(conic, tol):
        return Tag.DEGENERATE_LINEAR
    A, B, C = conic.A, conic.B, conic.C
    delta = A * C - B * B
    omega = A + C

    if not delta_vanishes(conic, tol):
        # Delta = delta * f(center); the sign and the zero test both go
        # through f(center), which is far better conditioned than Delta.
        f0 = _zero_f_at(conic, *unique_center(conic), tol)
        if f0 == 0.0:
            return Tag.POINT if delta > 0 else Tag.TWO_CONCURRENT_LINES
        if delta < 0:
            return Tag.HYPERBOLA
        if f0 * omega > 0:
            return Tag.EMPTY_SET
        s = max(abs(A), abs(B), abs(C))
        if abs(B) <= tol * s and abs(A - C) <= tol * s:
            return Tag.CIRCLE
        return Tag.ELLIPSE

    if not center_system_consistent(conic, tol):
        return Tag.PARABOLA

    # infinitely many centers: sign of M22 (or M11 when C dominates)
    A, B, C, D, E, F = conic.coefficients()
    if abs(A) >= abs(C):
        minor, size = A * F - D * D, abs(A * F) + D * D
    else:
        minor, size = C * F - E * E, abs(C * F) + E * E
    # M22 = A f(-D/A, 0): even in the coefficients, so its sign is already
    # unchanged when the equation is negated
    if abs(minor) <= tol * size:
        return Tag.DOUBLE_LINE
    return Tag.TWO_PARALLEL_LINES if minor < 0 else Tag.EMPTY_SET


# -- reduction --------------------------------------------------------------

def _map_line(chain, normal, point):
    """Canonical-frame line (normal, point on it) -> original-frame Line."""
    return Line.through(chain_point(chain, *point), chain_vector(chain, *normal))


def _sorted_lines(lines):
    return tuple(sorted(lines, key=Line.key))


def _central(conic, tag, inv, sp, tol):
    h, k = unique_center(conic)
    chain = (RigidMotion(0.0, (h, k)), RigidMotion(sp.angle))
    l1, l2 = sp.lambda1, sp.lambda2
    if tag in (Tag.POINT, Tag.TWO_CONCURRENT_LINES):
        K = 0.0
    else:
        K = evaluate_f(conic, h, k)
    canonical = GeneralConic(l1, 0.0, l2, 0.0, 0.0, K)
    center = (h, k)

    if tag in (Tag.ELLIPSE, Tag.CIRCLE):
        a, b = math.sqrt(-K / l1), math.sqrt(-K / l2)
        if tag is Tag.CIRCLE:
            elements = Elements(center=center, semi_x=a, semi_y=b, linear_c=0.0,
                                eccentricity=0.0, foci=(center,))
        else:
            c = math.sqrt(abs(K) * abs(l2 - l1) / abs(l1 * l2))
            axis = "y" if b > a else "x"
            fx, fy = (0.0, c) if axis == "y" else (c, 0.0)
            foci = (chain_point(chain, fx, fy), chain_point(chain, -fx, -fy))
            elements = Elements(center=center, semi_x=a, semi_y=b, focal_axis=axis,
                                linear_c=c, eccentricity=c / max(a, b), foci=foci)
    elif tag is Tag.HYPERBOLA:
        a, b = math.sqrt(abs(K / l1)), math.sqrt(abs(K / l2))
        axis = "x" if -K / l1 > 0 else "y"
        c = math.hypot(a, b)
        fx, fy = (c, 0.0) if axis == "x" else (0.0, c)
        foci = (chain_point(chain, fx, fy), chain_point(chain, -fx, -fy))
        asymptotes = _concurrent_lines(chain, l1, l2)
        elements = Elements(center=center, semi_x=a, semi_y=b, focal_axis=axis, linear_c=c,
                            eccentricity=c / (a if axis == "x" else b), foci=foci,
                            asymptotes=asymptotes)
    elif tag is Tag.TWO_CONCURRENT_LINES:
        elements = Elements(center=center, lines=_concurrent_lines(chain, l1, l2))
    else:  # Point, EmptySet
        elements = Elements(center=center)
    return canonical, chain, elements


def _concurrent_lines(chain, l1, l2):
    """Lines of ``l1 x'^2 + l2 y'^2 = 0`` (opposite signs) in original frame."""
    r1, r2 = math.sqrt(abs(l1)), math.sqrt(abs(l2))
    return _sorted_lines(_map_line(chain, (r1, s * r2), (0.0, 0.0)) for s in (1.0, -1.0))


def _parabolic(conic, sp):
    rotated = rotate_by_matrix(conic, sp.matrix())
    omega = conic.A + conic.C
    Dp, Ep, F = rotated.D, rotated.E, rotated.F
    if abs(sp.lambda1) >= abs(sp.lambda2):
        # omega X^2 + 2D'X + 2E'Y + F = 0
        a, b = -Dp / omega, -(F - Dp * Dp / omega) / (2 * Ep)
        canonical = GeneralConic(omega, 0.0, 0.0, 0.0, Ep, 0.0)
        p = abs(Ep / omega)
        s = math.copysign(1.0, -Ep / omega)
        focus, dir_normal, dir_point = (0.0, s * p / 2), (0.0, 1.0), (0.0, -s * p / 2)
    else:
        # omega Y^2 + 2D'X + 2E'Y + F = 0
        a, b = -(F - Ep * Ep / omega) / (2 * Dp), -Ep / omega
        canonical = GeneralConic(0.0, 0.0, omega, Dp, 0.0, 0.0)
        p = abs(Dp / omega)
        s = math.copysign(1.0, -Dp / omega)
        focus, dir_normal, dir_point = (s * p / 2, 0.0), (1.0, 0.0), (-s * p / 2, 0.0)
    chain = (RigidMotion(sp.angle), RigidMotion(0.0, (a, b)))
    elements = Elements(
        vertex=chain_point(chain, 0.0, 0.0),
        eccentricity=1.0,
        focal_parameter=p,
        foci=(chain_point(chain, *focus),),
        directrix=_map_line(chain, dir_normal, dir_point),
    )
    return canonical, chain, elements


def _axial(conic, tag, sp, tol):
    point = _axis_point(conic)
    chain = (RigidMotion(0.0, point), RigidMotion(sp.angle))
    omega = conic.A + conic.C
    f0 = 0.0 if tag is Tag.DOUBLE_LINE else evaluate_f(conic, *point)
    x_squared = abs(sp.lambda1) >= abs(sp.lambda2)
    if x_squared:
        canonical = GeneralConic(omega, 0.0, 0.0, 0.0, 0.0, f0)
        normal = (1.0, 0.0)
    else:
        canonical = GeneralConic(0.0, 0.0, omega, 0.0, 0.0, f0)
        normal = (0.0, 1.0)
    lines = ()
    if tag is Tag.TWO_PARALLEL_LINES:
        u = math.sqrt(-f0 / omega)
        lines = _sorted_lines(
            _map_line(chain, normal, (s * u * normal[0], s * u * normal[1])) for s in (1.0, -1.0))
    elif tag is Tag.DOUBLE_LINE:
        lines = (_map_line(chain, normal, (0.0, 0.0)),)
    elements = Elements(center_line=center_line(conic, tol), lines=lines)
    return canonical, chain, elements


def reduce(conic: GeneralConic, tol: float = DEFAULT_TOL) -> ReductionResult:
    """Classify and reduce ``conic`` to canonical form.

    Raises :class:`DegenerateLinearInput` when the quadratic part vanishes.
    """
    tag = classify(conic, tol)
    if tag is Tag.DEGENERATE_LINEAR:
        raise DegenerateLinearInput("quadratic part is zero; nothing to reduce")
    inv = invariants(conic)
    sp = eigen2x2(conic.A, conic.B, conic.C)
    if not delta_vanishes(conic, tol):
        canonical, chain, elements = _central(conic, tag, inv, sp, tol)
    elif tag is Tag.PARABOLA:
        canonical, chain, elements = _parabolic(conic, sp)
    else:
        canonical, chain, elements = _axial(conic, tag, sp, tol)
    return ReductionResult(tag, canonical, chain, elements, inv, sp,
                           canonical_equation(tag, canonical))


def center_structure_of(result: ReductionResult):
    e = result.elements
    if e.center is not None:
        return UniqueCenter(*e.center)
    if e.center_line is not None:
        return CenterLine(e.center_line)
    from .centers import NoCenter
    return NoCenter()


# -- canonical text ---------------------------------------------------------

def _g(value):
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


def _term(coef, var, first=False):
    sign = "-" if coef < 0 else "+"
    mag = abs(coef)
    body = var if mag == 1 else f"{_g(mag)}{var}"
    if first:
        return ("-" if sign == "-" else "") + body
    return f" {sign} {body}"


def canonical_equation(tag: Tag, canonical: GeneralConic) -> str:
    """Standard textual form of a canonical conic in ``x'``, ``y'``."""
    A, _, C, D, E, F = canonical.coefficients()
    X, Y = "x'^2", "y'^2"
    if tag in (Tag.ELLIPSE, Tag.CIRCLE):
        return f"{X}/{_g(-F / A)} + {Y}/{_g(-F / C)} = 1"
    if tag is Tag.HYPERBOLA:
        if -F / A > 0:
            return f"{X}/{_g(-F / A)} - {Y}/{_g(F / C)} = 1"
        return f"{Y}/{_g(-F / C)} - {X}/{_g(F / A)} = 1"
    if tag is Tag.EMPTY_SET and A != 0 and C != 0:
        return f"{X}/{_g(F / A)} + {Y}/{_g(F / C)} = -1"
    if tag in (Tag.POINT, Tag.TWO_CONCURRENT_LINES):
        return _term(A, X, first=True) + _term(C, Y) + " = 0"
    if tag is Tag.PARABOLA:
        if A != 0:
            return "y' = " + _term(-A / (2 * E), "x'^2", first=True)
        return "x' = " + _term(-C / (2 * D), "y'^2", first=True)
    # line of centers: omega u^2 + f0 = 0
    coef, var = (A, X) if A != 0 else (C, Y)
    return _term(coef, var, first=True) + f" = {_g(-F)}"
