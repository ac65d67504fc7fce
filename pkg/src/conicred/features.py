"""Asymptotes, tangents, normals and polar lines."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .classifier import Tag, classify
from .conic import GeneralConic, Line
from .errors import DegeneratePolar, NotAHyperbola, PointNotOnConic, SingularPoint
from .invariants import DEFAULT_TOL, evaluate_f, gradient, term_magnitude

ON_CURVE_TOL = 1e-7


class Asymptotes(NamedTuple):
    first: Line
    second: Line
    intersection: tuple


@dataclass(frozen=True)
class TangentNormal:
    tangent: Line
    normal: Line
    point: tuple


def asymptotes(conic: GeneralConic, tol: float = DEFAULT_TOL) -> Asymptotes:
    """Both asymptotes of a hyperbola and the point where they cross.

    The slopes solve ``C m^2 + 2B m + A = 0``.  With
    ``q = -(B + sign(B) sqrt(B^2 - AC))`` one root is ``A/q`` (a line
    ``y = m x + b``) and the reciprocal of the other is ``C/q`` (a line
    ``x = m' y + b'``).  Neither form divides by a vanishing ``A`` or ``C``,
    so vertical and horizontal asymptotes need no special case.
    """
    if classify(conic, tol) is not Tag.HYPERBOLA:
        raise NotAHyperbola("asymptotes exist only for a hyperbola")
    A, B, C, D, E, _ = conic.coefficients()
    root = math.copysign(math.sqrt(B * B - A * C), B)
    q = -(B + root)
    # B + C m and B + A m' both equal `root` at these roots
    m = A / q
    y_form = Line.from_coefficients(m, -1.0, -(D + E * m) / root)
    mp = C / q
    x_form = Line.from_coefficients(1.0, -mp, (E + D * mp) / root)
    first, second = sorted((y_form, x_form), key=Line.key)
    return Asymptotes(first, second, first.intersect(second))


def _on_curve_or_raise(conic, x0, y0, tol):
    value = evaluate_f(conic, x0, y0)
    size = term_magnitude(conic, x0, y0)
    if abs(value) > tol * size:
        raise PointNotOnConic(f"f({x0!r}, {y0!r}) = {value:.6g} is not zero")


def _gradient_or_raise(conic, x0, y0, tol):
    fx, fy = gradient(conic, x0, y0)
    A, B, C, D, E, _ = conic.coefficients()
    size = 2 * (abs(A * x0) + abs(B * y0) + abs(D) + abs(B * x0) + abs(C * y0) + abs(E))
    if math.hypot(fx, fy) <= tol * size:
        raise SingularPoint(f"gradient vanishes at ({x0!r}, {y0!r}); no tangent")
    return fx, fy


def tangent_at(conic: GeneralConic, x0: float, y0: float, tol: float = ON_CURVE_TOL) -> TangentNormal:
    """Tangent and normal at an on-curve point.

    >>> tangent_at(GeneralConic.from_full(3, 4, 2, 3, 1, -11), 2, -1).tangent.equation()
    '11x + 5y - 17 = 0'
    """
    _on_curve_or_raise(conic, x0, y0, tol)
    fx, fy = _gradient_or_raise(conic, x0, y0, tol)
    point = (float(x0), float(y0))
    return TangentNormal(Line.through(point, (fx, fy)), Line.through(point, (fy, -fx)), point)


def normal_at(conic: GeneralConic, x0: float, y0: float, tol: float = ON_CURVE_TOL) -> Line:
    return tangent_at(conic, x0, y0, tol).normal


def polar_line(conic: GeneralConic, x0: float, y0: float, tol: float = DEFAULT_TOL) -> Line:
    """Polar of ``(x0, y0)``: ``l x + m y + n = 0`` with
    ``l = A x0 + B y0 + D``, ``m = B x0 + C y0 + E``, ``n = D x0 + E y0 + F``."""
    A, B, C, D, E, F = conic.coefficients()
    l = A * x0 + B * y0 + D
    m = B * x0 + C * y0 + E
    n = D * x0 + E * y0 + F
    size = abs(A * x0) + abs(B * y0) + abs(D) + abs(B * x0) + abs(C * y0) + abs(E)
    if math.hypot(l, m) <= tol * size:
        raise DegeneratePolar(f"({x0!r}, {y0!r}) has no polar line (it is a center)")
    return Line.from_coefficients(l, m, n)
