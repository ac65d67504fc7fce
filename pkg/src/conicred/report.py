"""Plain-data report of an analysis, with a JSON round trip."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, fields

from .centers import CenterLine, UniqueCenter, center_structure
from .classifier import LINE_TAGS, classify, reduce
from .conic import GeneralConic, Line
from .errors import AllCoefficientsZero
from .invariants import DEFAULT_TOL, invariants


@dataclass
class Report:
    input: str
    coefficients: dict
    invariants: dict
    center: dict
    classification: str
    chain: list | None = None
    canonical: dict | None = None
    elements: dict | None = None
    factors: dict | None = None

    def to_dict(self):
        return asdict(self)

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def point_data(p):
    return None if p is None else [p[0], p[1]]


def line_data(line: Line | None):
    if line is None:
        return None
    return {"l": line.l, "m": line.m, "n": line.n, "equation": line.equation()}


def _center_data(conic, tol):
    try:
        cs = center_structure(conic, tol)
    except AllCoefficientsZero:
        return {"kind": "None"}
    if isinstance(cs, UniqueCenter):
        return {"kind": cs.kind, "point": point_data(cs.point)}
    if isinstance(cs, CenterLine):
        return {"kind": cs.kind, "line": line_data(cs.line)}
    return {"kind": cs.kind}


def _motion_data(m):
    return {
        "angle_rad": m.rotation_angle,
        "angle_deg": math.degrees(m.rotation_angle),
        "translation": point_data(m.translation),
    }


def _elements_data(e):
    out = {}
    for f in fields(e):
        value = getattr(e, f.name)
        if value is None or value == ():
            continue
        if f.name in ("center", "vertex"):
            value = point_data(value)
        elif f.name == "foci":
            value = [point_data(p) for p in value]
        elif f.name in ("directrix", "center_line"):
            value = line_data(value)
        elif f.name in ("asymptotes", "lines"):
            value = [line_data(line) for line in value]
        out[f.name] = value
    return out


def classify_report(conic: GeneralConic, text: str = "", tol: float = DEFAULT_TOL) -> Report:
    return Report(
        input=text,
        coefficients=dict(zip("ABCDEF", conic.coefficients())),
        invariants=invariants(conic).as_dict(),
        center=_center_data(conic, tol),
        classification=classify(conic, tol).value,
    )


def reduce_report(conic: GeneralConic, text: str = "", tol: float = DEFAULT_TOL) -> Report:
    report = classify_report(conic, text, tol)
    result = reduce(conic, tol)
    report.chain = [_motion_data(m) for m in result.chain]
    report.canonical = {
        "coefficients": dict(zip("ABCDEF", result.canonical.coefficients())),
        "equation": result.equation,
    }
    report.elements = _elements_data(result.elements)
    if result.classification in LINE_TAGS:
        from .factor import factor_lines
        fac = factor_lines(conic, tol)
        report.factors = {
            "kind": fac.kind.value,
            "lines": [line_data(line) for line in fac.lines],
            "multiplier": fac.multiplier,
        }
    return report


def format_text(report: Report) -> str:
    """Human-readable multi-line rendering of a report."""
    inv = report.invariants
    out = [
        f"input:           {report.input}",
        f"classification:  {report.classification}",
        f"invariants:      Delta={_g(inv['big_delta'])}  delta={_g(inv['delta'])}"
        f"  omega={_g(inv['omega'])}",
    ]
    c = report.center
    if c["kind"] == "UniqueCenter":
        out.append(f"center:          ({_g(c['point'][0])}, {_g(c['point'][1])})")
    elif c["kind"] == "CenterLine":
        out.append(f"center line:     {c['line']['equation']}")
    else:
        out.append(f"center:          {c['kind']}")
    if report.chain is not None:
        for i, m in enumerate(report.chain, 1):
            t = m["translation"]
            out.append(f"motion {i}:        rotate {_g(m['angle_deg'])} deg, "
                       f"translate ({_g(t[0])}, {_g(t[1])})")
        out.append(f"canonical:       {report.canonical['equation']}")
        for key, value in report.elements.items():
            out.append(f"{key + ':':<17}{_render(value)}")
    return "\n".join(out)


def _g(v):
    text = f"{v:.10g}"
    return "0" if text == "-0" else text


def _render(value):
    if isinstance(value, float):
        return _g(value)
    if isinstance(value, dict) and "equation" in value:
        return value["equation"]
    if isinstance(value, list):
        if value and isinstance(value[0], (int, float)):
            return "(" + ", ".join(_g(v) for v in value) + ")"
        return "; ".join(_render(v) for v in value)
    return str(value)

