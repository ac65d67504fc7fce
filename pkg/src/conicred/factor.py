"""Line factorizations of degenerate conics."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .classifier import LINE_TAGS, Tag, reduce
from .conic import GeneralConic, Line
from .errors import NotDegenerate
from .invariants import DEFAULT_TOL


class FactorKind(str, enum.Enum):
    CONCURRENT = "ConcurrentPair"
    PARALLEL = "ParallelPair"
    DOUBLE = "Double"

    def __str__(self):
        return self.value


_KIND = {
    Tag.TWO_CONCURRENT_LINES: FactorKind.CONCURRENT,
    Tag.TWO_PARALLEL_LINES: FactorKind.PARALLEL,
    Tag.DOUBLE_LINE: FactorKind.DOUBLE,
}


@dataclass(frozen=True)
class LineFactorization:
    kind: FactorKind
    lines: tuple
    multiplier: float

    def product(self) -> GeneralConic:
        """``multiplier * L1 * L2`` (or ``multiplier * L^2``) as a conic."""
        first = self.lines[0]
        second = self.lines[-1]
        return line_product(first, second).scaled(self.multiplier)


def line_product(p: Line, q: Line) -> GeneralConic:
    """Expand ``(l1 x + m1 y + n1)(l2 x + m2 y + n2)``."""
    l1, m1, n1 = p.key()
    l2, m2, n2 = q.key()
    return GeneralConic(
        l1 * l2,
        (l1 * m2 + l2 * m1) / 2,
        m1 * m2,
        (l1 * n2 + l2 * n1) / 2,
        (m1 * n2 + m2 * n1) / 2,
        n1 * n2,
    )


def fit_multiplier(target: GeneralConic, product: GeneralConic) -> float:
    """Least-squares ``s`` minimizing ``|target - s * product|``."""
    v = product.coefficients()
    c = target.coefficients()
    return sum(a * b for a, b in zip(v, c)) / sum(a * a for a in v)


def factor_lines(conic: GeneralConic, tol: float = DEFAULT_TOL) -> LineFactorization:
    """Split a degenerate conic into its lines.

    >>> f = factor_lines(GeneralConic.from_full(1, -2, 1, 2, -2, 1))
    >>> f.kind, f.lines[0].equation()
    (<FactorKind.DOUBLE: 'Double'>, 'x - y + 1 = 0')
    """
    result = reduce(conic, tol)
    if result.classification not in LINE_TAGS:
        raise NotDegenerate(f"conic is a {result.classification}, not a pair of lines")
    lines = result.elements.lines
    product = line_product(lines[0], lines[-1])
    return LineFactorization(_KIND[result.classification], lines, fit_multiplier(conic, product))
