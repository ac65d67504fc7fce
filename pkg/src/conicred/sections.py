"""Plane sections of a right circular cone and of a right circular cylinder.

Notation: ``alpha`` is the half-angle of the cone, ``beta`` the angle between
the cutting plane and the axis, ``h`` the distance from the vertex to the
point where the plane meets the axis, ``eta`` the distance from the axis to
a plane parallel to it and ``R`` the cylinder radius.  Angles are radians.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

from .conic import GeneralConic
from .errors import DomainError

HALF_PI = math.pi / 2


class SectionKind(str, enum.Enum):
    CIRCLE = "Circle"
    ELLIPSE = "Ellipse"
    PARABOLA = "Parabola"
    HYPERBOLA = "Hyperbola"
    LINE_PAIR = "LinePair"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SectionReport:
    kind: SectionKind
    eccentricity: float
    semi_a: float | None = None
    semi_b: float | None = None
    linear_c: float | None = None
    focus_directrix_p: float | None = None
    vertex_offset: float | None = None

    def as_dict(self):
        d = asdict(self)
        d["kind"] = self.kind.value
        return d


def _check_alpha(alpha):
    if not 0 < alpha < HALF_PI:
        raise DomainError(f"cone half-angle must lie in (0, pi/2), got {alpha!r}")


def _check_beta(beta):
    if not 0 < beta <= HALF_PI:
        raise DomainError(f"plane angle must lie in (0, pi/2], got {beta!r}")


def _check_positive(name, value):
    if not value > 0 or not math.isfinite(value):
        raise DomainError(f"{name} must be positive, got {value!r}")


def cone_plane_section(alpha: float, beta: float, h: float, tol: float = 1e-9) -> SectionReport:
    """Section of the cone by a plane crossing the axis at distance ``h``.

    >>> round(cone_plane_section(math.pi / 6, math.pi / 3, 1.0).eccentricity ** 2, 12)
    0.333333333333
    """
    _check_alpha(alpha)
    _check_beta(beta)
    _check_positive("h", h)
    t = math.tan(alpha)
    if abs(beta - HALF_PI) <= tol:
        r = h * t
        return SectionReport(SectionKind.CIRCLE, 0.0, r, r, 0.0)
    if abs(beta - alpha) <= tol:
        return SectionReport(SectionKind.PARABOLA, 1.0,
                             focus_directrix_p=h * t * t * math.cos(alpha),
                             vertex_offset=h / (2 * math.cos(alpha)))
    e = math.cos(beta) / math.cos(alpha)
    k = h * t * math.sin(beta)
    if beta > alpha:
        one_minus = 1 - e * e
        a, b = k / math.sqrt(one_minus), k / one_minus
        return SectionReport(SectionKind.ELLIPSE, e, a, b, k * e / one_minus)
    e2_minus = e * e - 1
    a, b = k / math.sqrt(e2_minus), k / e2_minus
    return SectionReport(SectionKind.HYPERBOLA, e, a, b, k * e / e2_minus)


def cone_axis_parallel_section(alpha: float, eta: float) -> SectionReport:
    _check_alpha(alpha)
    _check_positive("eta", eta)
    return SectionReport(SectionKind.HYPERBOLA, 1 / math.cos(alpha),
                         eta / math.tan(alpha), eta, eta / math.sin(alpha))


def cylinder_section(R: float, beta: float) -> SectionReport:
    _check_positive("R", R)
    _check_beta(beta)
    if beta == HALF_PI:
        return SectionReport(SectionKind.CIRCLE, 0.0, R, R, 0.0)
    return SectionReport(SectionKind.ELLIPSE, math.cos(beta),
                         R, R / math.sin(beta), R / math.tan(beta))


# -- the section curves written as plane conics ------------------------------

def cone_plane_conic(alpha: float, beta: float, h: float) -> GeneralConic:
    """``X^2 + (sin^2 b - tan^2 a cos^2 b) Y^2 + 2h tan^2 a cos b Y - h^2 tan^2 a = 0``.

    The origin is where the plane meets the axis, ``Y`` runs along the
    plane's line of steepest slope and ``X`` across it.
    """
    _check_alpha(alpha)
    _check_beta(beta)
    _check_positive("h", h)
    t2 = math.tan(alpha) ** 2
    cb = math.cos(beta)
    return GeneralConic(1.0, 0.0, math.sin(beta) ** 2 - t2 * cb * cb,
                        0.0, h * t2 * cb, -h * h * t2)


def cone_axis_parallel_conic(alpha: float, eta: float) -> GeneralConic:
    """``tan^2(a) Z^2 - X^2 - eta^2 = 0`` in the plane's ``(X, Z)`` frame."""
    _check_alpha(alpha)
    _check_positive("eta", eta)
    return GeneralConic(-1.0, 0.0, math.tan(alpha) ** 2, 0.0, 0.0, -eta * eta)


def cylinder_conic(R: float, beta: float) -> GeneralConic:
    """``X^2 + sin^2(b) Y^2 - R^2 = 0``."""
    _check_positive("R", R)
    _check_beta(beta)
    return GeneralConic(1.0, 0.0, math.sin(beta) ** 2, 0.0, 0.0, -R * R)
