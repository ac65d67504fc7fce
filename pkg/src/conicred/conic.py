"""Core value types: the general conic and the normalized line."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Sign decisions on a unit normal ignore components this small.
_SIGN_EPS = 1e-12


@dataclass(frozen=True)
class GeneralConic:
    """Coefficients of ``A x^2 + 2B xy + C y^2 + 2D x + 2E y + F = 0``.

    ``B``, ``D`` and ``E`` hold *half* of the printed cross and linear
    coefficients, so ``x^2 + 4xy = 0`` has ``B == 2``.
    """

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        for name in "ABCDEF":
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coefficient {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_full(cls, a, bxy, c, dx, ey, f):
        """Build from the printed coefficients of ``a x^2 + bxy xy + ...``."""
        return cls(a, bxy / 2, c, dx / 2, ey / 2, f)

    def full(self):
        """Printed coefficients ``(A, 2B, C, 2D, 2E, F)``."""
        return (self.A, 2 * self.B, self.C, 2 * self.D, 2 * self.E, self.F)

    def coefficients(self):
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def scaled(self, s):
        return GeneralConic(*(s * v for v in self.coefficients()))

    def matrix(self):
        """The symmetric 2x2 matrix of the quadratic part."""
        return ((self.A, self.B), (self.B, self.C))

    def bordered(self):
        """The symmetric 3x3 matrix of the whole equation."""
        A, B, C, D, E, F = self.coefficients()
        return ((A, B, D), (B, C, E), (D, E, F))

    def __call__(self, x, y):
        A, B, C, D, E, F = self.coefficients()
        return A * x * x + 2 * B * x * y + C * y * y + 2 * D * x + 2 * E * y + F


@dataclass(frozen=True)
class Line:
    """The line ``l x + m y + n = 0`` with ``l^2 + m^2 == 1``.

    The first of ``(l, m)`` that is not negligible is positive, so two
    ``Line`` values describing the same set compare equal up to rounding.
    Construct through :meth:`from_coefficients` unless the values are
    already normalized.
    """

    l: float
    m: float
    n: float

    @classmethod
    def from_coefficients(cls, l, m, n):
        l, m, n = float(l), float(m), float(n)
        norm = math.hypot(l, m)
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError(f"not a line: {l!r}x + {m!r}y + {n!r} = 0")
        l, m, n = l / norm, m / norm, n / norm
        if l < -_SIGN_EPS or (abs(l) <= _SIGN_EPS and m < 0):
            l, m, n = -l, -m, -n
        return cls(l + 0.0, m + 0.0, n + 0.0)

    @classmethod
    def through(cls, point, normal):
        """Line through ``point`` perpendicular to ``normal``."""
        (x0, y0), (a, b) = point, normal
        return cls.from_coefficients(a, b, -(a * x0 + b * y0))

    def __call__(self, x, y):
        return self.l * x + self.m * y + self.n

    def key(self):
        return (self.l, self.m, self.n)

    def normal(self):
        return (self.l, self.m)

    def direction(self):
        return (-self.m, self.l)

    def foot(self):
        """Point of the line closest to the origin."""
        return (-self.n * self.l, -self.n * self.m)

    def point_at(self, t):
        x0, y0 = self.foot()
        dx, dy = self.direction()
        return (x0 + t * dx, y0 + t * dy)

    def intersect(self, other):
        det = self.l * other.m - self.m * other.l
        if abs(det) <= _SIGN_EPS:
            raise ValueError("lines are parallel")
        x = (self.m * other.n - self.n * other.m) / det
        y = (self.n * other.l - self.l * other.n) / det
        return (x, y)

    def isclose(self, other, tol=1e-9):
        return all(abs(a - b) <= tol for a, b in zip(self.key(), other.key()))

    def integer_form(self, max_denominator=1000, rel_tol=1e-9):
        """Smallest integer triple proportional to ``(l, m, n)``, or None."""
        coeffs = self.key()
        pivot = max(coeffs, key=abs)
        ratios = [Fraction(c / pivot).limit_denominator(max_denominator) for c in coeffs]
        if any(abs(float(r) * pivot - c) > rel_tol for r, c in zip(ratios, coeffs)):
            return None
        denominator = math.lcm(*(r.denominator for r in ratios))
        ints = [int(r * denominator) for r in ratios]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        # keep the orientation convention of the normalized line
        lead = next((v for v in ints[:2] if v != 0), 1)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def equation(self, precision=6):
        """Human-readable equation, integral when the ratios allow it."""
        ints = self.integer_form()
        if ints is not None:
            return format_linear(*ints)
        # otherwise scale so the leading coefficient is 1
        lead = self.l if abs(self.l) > _SIGN_EPS else self.m
        return format_linear(*(round(c / lead, precision) for c in self.key()))


def _num(value):
    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def format_linear(l, m, n):
    terms = []
    for coef, var in ((l, "x"), (m, "y"), (n, "")):
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = var if (mag == 1 and var) else _num(mag) + var
        terms.append((sign, body))
    if not terms:
        return "0 = 0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out + " = 0"
