"""Centers of a conic: solutions of ``A h + B k = -D, B h + C k = -E``.

Every "is this zero" decision here and in the classifier compares a quantity
against ``tol`` times a magnitude of the same degree in the coefficients, so
the answers do not change when the whole equation is multiplied by a
constant or when its sign is flipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conic import GeneralConic, Line
from .errors import AllCoefficientsZero, NotACenter
from .invariants import DEFAULT_TOL, coefficient_scale, evaluate_f, term_magnitude


@dataclass(frozen=True)
class UniqueCenter:
    h: float
    k: float
    kind = "UniqueCenter"

    @property
    def point(self):
        return (self.h, self.k)


@dataclass(frozen=True)
class NoCenter:
    kind = "NoCenter"


@dataclass(frozen=True)
class CenterLine:
    line: Line
    kind = "CenterLine"


# -- zero tests -------------------------------------------------------------

def quadratic_part_vanishes(conic, tol=DEFAULT_TOL):
    A, B, C = conic.A, conic.B, conic.C
    return max(abs(A), abs(B), abs(C)) <= tol * coefficient_scale(conic)


def delta_vanishes(conic, tol=DEFAULT_TOL):
    """``|AC - B^2|`` small against ``A^2 + 2B^2 + C^2`` (both degree 2)."""
    A, B, C = conic.A, conic.B, conic.C
    return abs(A * C - B * B) <= tol * (A * A + 2 * B * B + C * C)


def center_system_consistent(conic, tol=DEFAULT_TOL):
    """Rank test for a singular center system.

    ``(-D, -E)`` must be parallel to both rows ``(A, B)`` and ``(B, C)``;
    each 2x2 minor is compared with the product of its row lengths.
    """
    A, B, C, D, E, _ = conic.coefficients()
    lin = math.hypot(D, E)
    r1 = abs(B * D - A * E) <= tol * math.hypot(A, B) * lin
    r2 = abs(C * D - B * E) <= tol * math.hypot(B, C) * lin
    return r1 and r2


def unique_center(conic):
    A, B, C, D, E, _ = conic.coefficients()
    delta = A * C - B * B
    return ((B * E - C * D) / delta, (B * D - A * E) / delta)


def on_curve(conic, x, y, tol=DEFAULT_TOL):
    return abs(evaluate_f(conic, x, y)) <= tol * term_magnitude(conic, x, y)


def center_line(conic, tol=DEFAULT_TOL) -> Line:
    A, B, C, D, E, _ = conic.coefficients()
    if math.hypot(A, B) > tol * max(abs(A), abs(B), abs(C)):
        return Line.from_coefficients(A, B, D)
    return Line.from_coefficients(B, C, E)


def center_structure(conic: GeneralConic, tol: float = DEFAULT_TOL):
    """Return :class:`UniqueCenter`, :class:`NoCenter` or :class:`CenterLine`.

    >>> center_structure(GeneralConic(2, 1, 3, 3, 4, 7))
    UniqueCenter(h=-1.0, k=-1.0)
    """
    if quadratic_part_vanishes(conic, tol):
        raise AllCoefficientsZero(
            "quadratic part is zero; the equation is the line "
            f"{2 * conic.D!r}x + {2 * conic.E!r}y + {conic.F!r} = 0")
    if not delta_vanishes(conic, tol):
        return UniqueCenter(*unique_center(conic))
    if center_system_consistent(conic, tol):
        return CenterLine(center_line(conic, tol))
    return NoCenter()


def center_residual(conic, h, k):
    A, B, C, D, E, _ = conic.coefficients()
    r1, r2 = A * h + B * k + D, B * h + C * k + E
    size = abs(A * h) + abs(B * k) + abs(D) + abs(B * h) + abs(C * k) + abs(E)
    return math.hypot(r1, r2), size


def value_at_center(conic: GeneralConic, h: float, k: float, tol: float = DEFAULT_TOL) -> float:
    """``f(h, k)`` at a center, computed as ``D h + E k + F``."""
    residual, size = center_residual(conic, h, k)
    if residual > tol * size:
        raise NotACenter(f"({h!r}, {k!r}) is not a center (residual {residual:.3g})")
    return conic.D * h + conic.E * k + conic.F
