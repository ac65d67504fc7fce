"""Eigen-decomposition of the symmetric matrix ``((A, B), (B, C))``.

Ordering convention: each unit eigenvector is taken with a non-negative
y-component (non-negative x when y is zero); ``p1`` is whichever of the two
points furthest right, i.e. lies in the first quadrant, and ``p2`` is ``p1``
turned by +90 degrees.  The rotation angle of the principal axes is then in
``[0, pi/2)``.  For ``B > 0`` this makes ``lambda1`` the larger eigenvalue,
for ``B < 0`` the smaller one, and for ``B == 0`` the eigenvalue of the
x-axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SpectralData:
    lambda1: float
    lambda2: float
    p1: tuple
    p2: tuple
    angle: float

    def matrix(self):
        """``P = [p1 p2]`` (eigenvectors as columns)."""
        return ((self.p1[0], self.p2[0]), (self.p1[1], self.p2[1]))


def eigenvalues(A, B, C):
    """Both roots of ``t^2 - (A+C) t + (AC - B^2)``, larger magnitude first."""
    omega = A + C
    disc = math.hypot(A - C, 2 * B)  # sqrt(omega^2 - 4 delta) without cancellation
    big = 0.5 * (omega + math.copysign(disc, omega))
    if big == 0.0:
        return 0.0, 0.0
    return big, (A * C - B * B) / big


def _upper_half(x, y):
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    return (x + 0.0, y + 0.0)


def eigen2x2(A: float, B: float, C: float) -> SpectralData:
    big, small = eigenvalues(A, B, C)
    lam_max, lam_min = (big, small) if big >= small else (small, big)
    disc = math.hypot(A - C, 2 * B)
    if disc == 0.0:
        return SpectralData(lam_max, lam_min, (1.0, 0.0), (0.0, 1.0), 0.0)

    # Eigenvector of lam_max from the larger row of (lam_max I - M); the row
    # entries lam_max - A = (disc - (A - C)) / 2 and lam_max - C =
    # (disc + (A - C)) / 2 are formed so the big one never cancels.
    if A >= C:
        vx, vy = 0.5 * (disc + (A - C)), B          # null vector of row 2
    else:
        vx, vy = B, 0.5 * (disc - (A - C))          # null vector of row 1
    norm = math.hypot(vx, vy)
    u_max = _upper_half(vx / norm, vy / norm)
    u_min = _upper_half(-u_max[1], u_max[0])

    if u_max[0] >= u_min[0]:
        lambda1, lambda2, p1 = lam_max, lam_min, u_max
    else:
        lambda1, lambda2, p1 = lam_min, lam_max, u_min
    p2 = (0.0 - p1[1], p1[0] + 0.0)
    return SpectralData(lambda1, lambda2, p1, p2, math.atan2(p1[1], p1[0]))
