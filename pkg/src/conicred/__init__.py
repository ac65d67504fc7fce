"""Classification and reduction of plane conics
``A x^2 + 2B xy + C y^2 + 2D x + 2E y + F = 0``."""

from .centers import CenterLine, NoCenter, UniqueCenter, center_structure, value_at_center
from .classifier import Elements, ReductionResult, Tag, classify, reduce
from .conic import GeneralConic, Line
from .errors import *  # noqa: F401,F403
from .factor import FactorKind, LineFactorization, factor_lines
from .features import Asymptotes, TangentNormal, asymptotes, normal_at, polar_line, tangent_at
from .invariants import Invariants, evaluate_f, evaluate_q, gradient, invariants
from .parser import format_conic, parse_coefficients, parse_conic
from .sections import (
    SectionKind,
    SectionReport,
    cone_axis_parallel_section,
    cone_plane_section,
    cylinder_section,
)
from .spectral import SpectralData, eigen2x2
from .svg import emit_svg
from .transforms import RigidMotion, apply_chain, apply_motion, increment_expand, rotate, translate

__version__ = "0.1.0"
