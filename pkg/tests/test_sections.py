import math
import random

import pytest

from conicred import Tag, classify, reduce
from conicred.errors import DomainError
from conicred.sections import (
    SectionKind,
    cone_axis_parallel_conic,
    cone_axis_parallel_section,
    cone_plane_conic,
    cone_plane_section,
    cylinder_conic,
    cylinder_section,
)


def test_perpendicular_plane_gives_circle():
    for alpha in (0.2, 0.7, 1.3):
        rep = cone_plane_section(alpha, math.pi / 2, 2.0)
        assert rep.kind is SectionKind.CIRCLE
        assert rep.eccentricity == 0
        assert rep.semi_a == pytest.approx(2 * math.tan(alpha))


def test_parabola_when_beta_equals_alpha():
    alpha, h = 0.6, 1.7
    rep = cone_plane_section(alpha, alpha, h)
    assert rep.kind is SectionKind.PARABOLA
    assert rep.focus_directrix_p == pytest.approx(h * math.tan(alpha) ** 2 * math.cos(alpha))
    assert rep.vertex_offset == pytest.approx(h / (2 * math.cos(alpha)))
    assert rep.eccentricity == 1.0


def test_ellipse_example():
    rep = cone_plane_section(math.pi / 6, math.pi / 3, 1.0)
    assert rep.kind is SectionKind.ELLIPSE
    assert rep.eccentricity == pytest.approx(1 / math.sqrt(3), rel=1e-12)
    assert rep.linear_c / rep.semi_b == pytest.approx(rep.eccentricity, rel=1e-12)
    assert rep.semi_a < rep.semi_b
    assert rep.linear_c ** 2 == pytest.approx(rep.semi_b ** 2 - rep.semi_a ** 2, rel=1e-10)


def test_hyperbola_branch():
    rep = cone_plane_section(math.pi / 3, math.pi / 6, 2.0)
    assert rep.kind is SectionKind.HYPERBOLA
    assert rep.eccentricity > 1
    assert rep.linear_c ** 2 == pytest.approx(rep.semi_a ** 2 + rep.semi_b ** 2, rel=1e-10)
    assert rep.linear_c / rep.semi_b == pytest.approx(rep.eccentricity, rel=1e-12)


def test_axis_parallel():
    rep = cone_axis_parallel_section(math.pi / 4, 1.0)
    assert (rep.semi_a, rep.semi_b, rep.linear_c) == pytest.approx((1, 1, math.sqrt(2)))
    assert rep.eccentricity == pytest.approx(math.sqrt(2))
    rep = cone_axis_parallel_section(math.pi / 6, 2.0)
    assert rep.semi_a == pytest.approx(2 * math.sqrt(3))
    assert rep.eccentricity == pytest.approx(2 / math.sqrt(3))
    assert rep.eccentricity * rep.semi_a == pytest.approx(rep.linear_c)


def test_cylinder():
    rep = cylinder_section(3.0, math.pi / 2)
    assert rep.kind is SectionKind.CIRCLE and rep.semi_a == 3 and rep.eccentricity == 0
    rep = cylinder_section(1.0, math.pi / 3)
    assert rep.semi_b == pytest.approx(2 / math.sqrt(3))
    assert rep.linear_c == pytest.approx(1 / math.sqrt(3))
    assert rep.eccentricity == pytest.approx(0.5)
    assert rep.linear_c ** 2 == pytest.approx(rep.semi_b ** 2 - rep.semi_a ** 2, rel=1e-12)


@pytest.mark.parametrize("call", [
    lambda: cone_plane_section(0, 1, 1),
    lambda: cone_plane_section(math.pi / 2, 1, 1),
    lambda: cone_plane_section(0.5, 1, 0),
    lambda: cone_plane_section(0.5, 0, 1),
    lambda: cone_plane_section(0.5, 2, 1),
    lambda: cone_axis_parallel_section(0.5, -1),
    lambda: cylinder_section(0, 1),
    lambda: cylinder_section(1, 0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_section_conics_through_the_classifier():
    rng = random.Random(4)
    for _ in range(300):
        alpha = rng.uniform(0.05, 1.5)
        beta = rng.uniform(0.05, math.pi / 2)
        h = rng.uniform(0.1, 10)
        rep = cone_plane_section(alpha, beta, h)
        r = reduce(cone_plane_conic(alpha, beta, h))
        assert r.classification.value == rep.kind.value
        assert r.elements.eccentricity == pytest.approx(rep.eccentricity, rel=1e-9)
    r = reduce(cone_axis_parallel_conic(0.4, 1.5))
    assert r.classification is Tag.HYPERBOLA
    assert r.elements.eccentricity == pytest.approx(1 / math.cos(0.4), rel=1e-9)
    r = reduce(cylinder_conic(2.0, 0.9))
    assert r.elements.eccentricity == pytest.approx(math.cos(0.9), rel=1e-9)
    assert classify(cone_plane_conic(0.5, 0.5, 1.0)) is Tag.PARABOLA


def test_eccentricity_independent_of_distance():
    rng = random.Random(9)
    alpha, beta = 0.5, 0.9
    e = cone_plane_section(alpha, beta, 1.0).eccentricity
    for _ in range(1000):
        assert cone_plane_section(alpha, beta, rng.uniform(0.01, 100)).eccentricity == e
        assert cone_axis_parallel_section(alpha, rng.uniform(0.01, 100)).eccentricity == 1 / math.cos(alpha)


def test_as_dict():
    d = cylinder_section(1.0, 1.0).as_dict()
    assert d["kind"] == "Ellipse"
    assert set(d) == {"kind", "eccentricity", "semi_a", "semi_b", "linear_c",
                      "focus_directrix_p", "vertex_offset"}
