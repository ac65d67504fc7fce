"""Changes of axes: translations, proper rotations and their compositions.

A :class:`RigidMotion` is read as a change of coordinates
``x_old = P(angle) @ x_new + (h, k)``; applying it to a conic returns the
same curve written in the new coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conic import GeneralConic
from .invariants import evaluate_f, evaluate_q, gradient


def _wrap_angle(theta):
    theta = math.remainder(theta, 2 * math.pi)
    return math.pi if theta == -math.pi else theta


@dataclass(frozen=True)
class RigidMotion:
    rotation_angle: float = 0.0
    translation: tuple = (0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "rotation_angle", _wrap_angle(float(self.rotation_angle)))
        h, k = self.translation
        object.__setattr__(self, "translation", (float(h), float(k)))

    @classmethod
    def from_matrix(cls, P, translation=(0.0, 0.0), tol=1e-12):
        """Accept an orthonormal matrix with determinant +1 (no reflections)."""
        (p11, p12), (p21, p22) = P
        if abs(p11 * p11 + p21 * p21 - 1) > tol or abs(p12 * p12 + p22 * p22 - 1) > tol \
                or abs(p11 * p12 + p21 * p22) > tol:
            raise ValueError("matrix is not orthonormal")
        if abs(p11 * p22 - p12 * p21 - 1) > tol:
            raise ValueError("matrix is a reflection, only proper rotations are allowed")
        return cls(math.atan2(p21, p11), translation)

    def matrix(self):
        c, s = math.cos(self.rotation_angle), math.sin(self.rotation_angle)
        return ((c, -s), (s, c))

    def apply_point(self, x, y):
        """New coordinates -> old coordinates."""
        (p11, p12), (p21, p22) = self.matrix()
        h, k = self.translation
        return (p11 * x + p12 * y + h, p21 * x + p22 * y + k)

    def apply_vector(self, x, y):
        (p11, p12), (p21, p22) = self.matrix()
        return (p11 * x + p12 * y, p21 * x + p22 * y)

    def invert_point(self, x, y):
        """Old coordinates -> new coordinates."""
        (p11, p12), (p21, p22) = self.matrix()
        h, k = self.translation
        dx, dy = x - h, y - k
        return (p11 * dx + p21 * dy, p12 * dx + p22 * dy)


def translate(conic: GeneralConic, h: float, k: float) -> GeneralConic:
    """Move the origin to ``(h, k)``: substitute ``x = X + h, y = Y + k``."""
    A, B, C, D, E, _ = conic.coefficients()
    return GeneralConic(
        A, B, C,
        A * h + B * k + D,
        B * h + C * k + E,
        evaluate_f(conic, h, k),
    )


def rotate_by_matrix(conic: GeneralConic, P) -> GeneralConic:
    """Substitute ``x = P x'`` for an orthonormal ``P`` (columns = new axes)."""
    A, B, C, D, E, F = conic.coefficients()
    (p11, p12), (p21, p22) = P
    # P^t M P, one entry at a time
    a2 = A * p11 * p11 + 2 * B * p11 * p21 + C * p21 * p21
    b2 = A * p11 * p12 + B * (p11 * p22 + p21 * p12) + C * p21 * p22
    c2 = A * p12 * p12 + 2 * B * p12 * p22 + C * p22 * p22
    d2 = D * p11 + E * p21
    e2 = D * p12 + E * p22
    return GeneralConic(a2, b2, c2, d2, e2, F)


def rotate(conic: GeneralConic, motion) -> GeneralConic:
    """Rotate the axes by ``motion`` (a :class:`RigidMotion` without
    translation, or a bare angle in radians)."""
    if not isinstance(motion, RigidMotion):
        motion = RigidMotion(motion)
    elif motion.translation != (0.0, 0.0):
        raise ValueError("rotate() takes a pure rotation; use apply_motion()")
    return rotate_by_matrix(conic, motion.matrix())


def apply_motion(conic: GeneralConic, motion: RigidMotion) -> GeneralConic:
    h, k = motion.translation
    return rotate_by_matrix(translate(conic, h, k), motion.matrix())


def apply_chain(conic: GeneralConic, chain) -> GeneralConic:
    """Push a conic through an ordered list of motions, first one first."""
    for motion in chain:
        conic = apply_motion(conic, motion)
    return conic


def chain_point(chain, x, y):
    """Map canonical coordinates back to original ones through ``chain``."""
    for motion in reversed(chain):
        x, y = motion.apply_point(x, y)
    return (x, y)


def chain_vector(chain, x, y):
    for motion in reversed(chain):
        x, y = motion.apply_vector(x, y)
    return (x, y)


def chain_inverse_point(chain, x, y):
    """Original coordinates -> canonical coordinates."""
    for motion in chain:
        x, y = motion.invert_point(x, y)
    return (x, y)


def increment_expand(conic: GeneralConic, X: float, Y: float, h: float, k: float) -> float:
    """``q(X, Y) + grad f(h, k) . (X, Y) + f(h, k)``, which equals ``f(X+h, Y+k)``."""
    fx, fy = gradient(conic, h, k)
    return evaluate_q(conic, X, Y) + fx * X + fy * Y + evaluate_f(conic, h, k)
