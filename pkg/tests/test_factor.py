import random

import pytest

from conicred import GeneralConic, Line, factor_lines
from conicred.errors import NotDegenerate
from conicred.factor import FactorKind, line_product
from conicred.parser import parse_conic
from conftest import conic_close


def ints(fac):
    return sorted(line.integer_form() for line in fac.lines)


def test_parallel_pair():
    fac = factor_lines(parse_conic("9x^2-12xy+4y^2+9x-6y+2=0"))
    assert fac.kind is FactorKind.PARALLEL
    assert ints(fac) == [(3, -2, 1), (3, -2, 2)]


def test_concurrent_pair():
    fac = factor_lines(parse_conic("3x^2-4xy+y^2+10x-2y-8=0"))
    assert fac.kind is FactorKind.CONCURRENT
    # y = 3x - 2 and y = x + 4
    assert ints(fac) == [(1, -1, 4), (3, -1, -2)]
    assert fac.lines[0].intersect(fac.lines[1]) == pytest.approx((3, 7))


def test_double_line():
    fac = factor_lines(parse_conic("x^2-2xy+y^2+2x-2y+1=0"))
    assert fac.kind is FactorKind.DOUBLE
    assert len(fac.lines) == 1
    assert fac.lines[0].integer_form() == (1, -1, 1)


def test_lines_sorted_lexicographically():
    fac = factor_lines(parse_conic("x^2 - y^2 = 0"))
    assert [line.key() for line in fac.lines] == sorted(line.key() for line in fac.lines)


@pytest.mark.parametrize("text", [
    "9x^2-12xy+4y^2+9x-6y+2=0",
    "3x^2-4xy+y^2+10x-2y-8=0",
    "x^2-2xy+y^2+2x-2y+1=0",
    "xy = 0",
    "y^2 = 9",
    "-4x^2 + 4 = 0",
    "x^2 - 4y^2 + 2x + 1 = 0",
])
def test_reconstruction_and_samples(text):
    c = parse_conic(text)
    fac = factor_lines(c)
    assert conic_close(fac.product(), c, 1e-9)
    scale = max(abs(v) for v in c.coefficients())
    for line in fac.lines:
        for i in range(21):
            t = -10 + i
            assert abs(c(*line.point_at(t))) <= 1e-7 * scale


def test_parallel_pair_symmetric_about_center_line():
    c = parse_conic("9x^2-12xy+4y^2+9x-6y+2=0")
    fac = factor_lines(c)
    from conicred import center_structure
    mid = center_structure(c).line
    p, q = fac.lines
    assert p.normal() == pytest.approx(mid.normal())
    assert (p.n + q.n) / 2 == pytest.approx(mid.n)


def test_not_degenerate():
    for text in ("x^2 + y^2 = 1", "y = x^2", "x^2 + y^2 + 1 = 0", "x^2 + y^2 = 0"):
        with pytest.raises(NotDegenerate):
            factor_lines(parse_conic(text))


def _random_line(rng):
    return Line.from_coefficients(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5))


def test_random_round_trip():
    rng = random.Random(7)
    for _ in range(1000):
        p, q = _random_line(rng), _random_line(rng)
        if abs(p.l * q.m - p.m * q.l) < 1e-3:
            continue
        s = rng.uniform(0.5, 3) * rng.choice([-1, 1])
        fac = factor_lines(line_product(p, q).scaled(s))
        want = sorted([p.key(), q.key()])
        got = sorted(line.key() for line in fac.lines)
        for a, b in zip(want, got):
            assert a == pytest.approx(b, abs=1e-8)
        assert fac.multiplier == pytest.approx(s, rel=1e-9)


def test_random_parallel_and_double():
    rng = random.Random(8)
    for _ in range(300):
        p = _random_line(rng)
        q = Line.from_coefficients(p.l, p.m, p.n + rng.uniform(0.1, 3))
        c = line_product(p, q).scaled(rng.uniform(-3, 3) or 1.0)
        fac = factor_lines(c)
        assert fac.kind is FactorKind.PARALLEL
        assert conic_close(fac.product(), c, 1e-9)
        d = line_product(p, p).scaled(2.0)
        fd = factor_lines(d)
        assert fd.kind is FactorKind.DOUBLE
        assert fd.lines[0].isclose(p, 1e-8)


def test_corpus_against_sympy():
    sp = pytest.importorskip("sympy")
    from sympy.parsing.sympy_parser import (
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )
    from test_acceptance import CORPUS
    from conicred import classify
    from conicred.classifier import LINE_TAGS
    x, y = sp.symbols("x y")
    for text in CORPUS:
        lhs = text.split("=")[0].replace("^", "**")
        expr = parse_expr(lhs, local_dict={"x": x, "y": y},
                          transformations=standard_transformations + (implicit_multiplication_application,))
        _, factors = sp.factor_list(sp.expand(expr))
        linear = sum(mult for f, mult in factors if sp.Poly(f, x, y).total_degree() == 1)
        degenerate = classify(parse_conic(text)) in LINE_TAGS
        assert degenerate == (linear == 2), text
        if degenerate:
            ours = {line.integer_form() for line in factor_lines(parse_conic(text)).lines}
            theirs = set()
            for f, _ in factors:
                p = sp.Poly(f, x, y)
                if p.total_degree() == 1:
                    theirs.add(Line.from_coefficients(float(p.coeff_monomial(x)), float(p.coeff_monomial(y)),
                                                      float(p.coeff_monomial(1))).integer_form())
            assert ours == theirs, text
