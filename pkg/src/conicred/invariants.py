"""Scalar invariants and pointwise evaluation of a conic."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .conic import GeneralConic

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Invariants:
    big_delta: float   # determinant of the bordered 3x3 matrix
    delta: float       # AC - B^2
    omega: float       # A + C
    m11: float         # CF - E^2
    m22: float         # AF - D^2
    m33: float         # equal to delta
    lin_norm_sq: float  # D^2 + E^2
    minor_sum: float   # m11 + m22 + m33

    def as_dict(self):
        return asdict(self)


def invariants(conic: GeneralConic) -> Invariants:
    A, B, C, D, E, F = conic.coefficients()
    m11 = C * F - E * E
    m22 = A * F - D * D
    delta = A * C - B * B
    # cofactor expansion along the first row
    big_delta = A * m11 - B * (B * F - D * E) + D * (B * E - C * D)
    return Invariants(
        big_delta=big_delta,
        delta=delta,
        omega=A + C,
        m11=m11,
        m22=m22,
        m33=delta,
        lin_norm_sq=D * D + E * E,
        minor_sum=m11 + m22 + delta,
    )


def evaluate_f(conic: GeneralConic, x: float, y: float) -> float:
    return conic(x, y)


def evaluate_q(conic: GeneralConic, x: float, y: float) -> float:
    """The quadratic form ``A x^2 + 2B xy + C y^2``."""
    return conic.A * x * x + 2 * conic.B * x * y + conic.C * y * y


def gradient(conic: GeneralConic, x: float, y: float):
    A, B, C, D, E, _ = conic.coefficients()
    return (2 * (A * x + B * y + D), 2 * (B * x + C * y + E))


def coefficient_scale(conic: GeneralConic) -> float:
    """Largest coefficient magnitude; zero only for the zero polynomial."""
    return max(abs(v) for v in conic.coefficients())


def term_magnitude(conic: GeneralConic, x: float, y: float) -> float:
    """Sum of the absolute values of the six terms of ``f(x, y)``.

    Rounding error in ``evaluate_f`` is proportional to this, which makes it
    the natural yardstick for "is this point on the curve".
    """
    A, B, C, D, E, F = conic.coefficients()
    return (abs(A * x * x) + abs(2 * B * x * y) + abs(C * y * y)
            + abs(2 * D * x) + abs(2 * E * y) + abs(F))
