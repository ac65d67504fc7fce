"""Text front end: parse ``3x^2 - 2xy + y^2 - x + y + 5 = 0`` and print it back.

Grammar (whitespace is ignored everywhere)::

    equation := expr [ "=" expr ]
    expr     := term { ("+" | "-") term }
    term     := unary { [ "*" | "/" ] unary }      (juxtaposition multiplies)
    unary    := ("+" | "-") unary | power
    power    := atom [ "^" INTEGER ]
    atom     := NUMBER | "x" | "y" | "(" expr ")"
    NUMBER   := digits [ "." digits ] [ ("e" | "E") [sign] digits ]

Arithmetic is exact (``fractions.Fraction``) until the final conversion to
the half-convention floats of :class:`GeneralConic`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .conic import GeneralConic, _num
from .errors import DegreeError, EmptyPolynomialError, ParseError, UnknownVariableError

_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_ALIASES = {"−": "-", "·": "*", "×": "*"}
# intermediate products above this degree cannot cancel back to a conic in
# any reasonable input; refuse early instead of multiplying huge polynomials
_MAX_DEGREE = 8


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = _ALIASES.get(text[i], text[i])
        if ch.isspace():
            i += 1
            continue
        match = _NUMBER.match(text, i)
        if match:
            tokens.append(("num", Fraction(match.group(0)), i))
            i = match.end()
        elif ch in "xy":
            tokens.append(("var", ch, i))
            i += 1
        elif ch == "²":
            tokens.append(("op", "^", i))
            tokens.append(("num", Fraction(2), i))
            i += 1
        elif text.startswith("**", i):
            tokens.append(("op", "^", i))
            i += 2
        elif ch in "+-*/^=()":
            tokens.append(("op", ch, i))
            i += 1
        elif ch.isalpha():
            raise UnknownVariableError(f"unknown variable {ch!r}", text, i)
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(("eof", None, len(text)))
    return tokens


# Polynomials are dicts {(i, j): Fraction} for the monomial x^i y^j.

def _add(p, q, sign=1):
    out = dict(p)
    for mono, c in q.items():
        out[mono] = out.get(mono, 0) + sign * c
    return {m: c for m, c in out.items() if c != 0}


def _mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            mono = (i1 + i2, j1 + j2)
            out[mono] = out.get(mono, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def _degree(p):
    return max((i + j for i, j in p), default=0)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.high_degree_at = None

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok=None, cls=ParseError):
        tok = tok or self.peek()
        return cls(message, self.text, tok[2])

    def is_op(self, *ops):
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def equation(self):
        if self.peek()[0] == "eof":
            raise self.error("empty equation")
        lhs = self.expr()
        if self.is_op("="):
            self.take()
            rhs = self.expr()
            lhs = _add(lhs, rhs, -1)
        if self.peek()[0] != "eof":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return lhs

    def expr(self):
        poly = self.term()
        while self.is_op("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            poly = _add(poly, self.term(), sign)
        return poly

    def term(self):
        start = self.peek()
        poly = self.unary()
        while True:
            if self.is_op("*"):
                self.take()
                poly = self.checked(_mul(poly, self.unary()), start)
            elif self.is_op("/"):
                slash = self.take()
                divisor = self.unary()
                if any(m != (0, 0) for m in divisor):
                    raise self.error("division by a non-constant", slash)
                if not divisor:
                    raise self.error("division by zero", slash)
                poly = {m: c / divisor[(0, 0)] for m, c in poly.items()}
            elif self.peek()[0] in ("num", "var") or self.is_op("("):
                poly = self.checked(_mul(poly, self.unary()), start)
            else:
                return poly

    def checked(self, poly, tok):
        degree = _degree(poly)
        if degree > 2 and self.high_degree_at is None:
            self.high_degree_at = tok
        if degree > _MAX_DEGREE:
            raise self.error(f"term of degree {degree} is not allowed", tok, DegreeError)
        return poly

    def unary(self):
        if self.is_op("-"):
            self.take()
            return {m: -c for m, c in self.unary().items()}
        if self.is_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        start = self.peek()
        base = self.atom()
        if not self.is_op("^"):
            return base
        self.take()
        kind, value, _ = tok = self.take()
        if kind != "num" or value.denominator != 1:
            raise self.error("exponent must be a non-negative integer", tok)
        result = {(0, 0): Fraction(1)}
        for _ in range(int(value)):
            result = self.checked(_mul(result, base), start)
        return result

    def atom(self):
        kind, value, _ = tok = self.take()
        if kind == "num":
            return {(0, 0): value} if value else {}
        if kind == "var":
            return {(1, 0): Fraction(1)} if value == "x" else {(0, 1): Fraction(1)}
        if kind == "op" and value == "(":
            inner = self.expr()
            if not self.is_op(")"):
                raise self.error("expected ')'")
            self.take()
            return inner
        what = "end of input" if kind == "eof" else repr(value)
        raise self.error(f"expected a number, 'x', 'y' or '(' but found {what}", tok)


def parse_polynomial(text):
    """Parse to an exact ``{(i, j): Fraction}`` map of ``lhs - rhs``."""
    parser = _Parser(text)
    poly = parser.equation()
    if _degree(poly) > 2:
        tok = parser.high_degree_at or ("eof", None, 0)
        raise DegreeError(f"term of degree {_degree(poly)} is not allowed", text, tok[2])
    return poly


def parse_conic(text: str) -> GeneralConic:
    """Parse a second-degree equation in ``x`` and ``y``.

    A missing ``= ...`` means ``= 0``.  Raises :class:`ParseError` (with the
    offending position), :class:`DegreeError`, :class:`UnknownVariableError`
    or :class:`EmptyPolynomialError`.

    >>> parse_conic("x*y = 4")
    GeneralConic(A=0.0, B=0.5, C=0.0, D=0.0, E=0.0, F=-4.0)
    """
    poly = parse_polynomial(text)
    if not poly:
        raise EmptyPolynomialError(f"all coefficients cancel in {text!r}")
    get = lambda i, j: poly.get((i, j), Fraction(0))
    return GeneralConic(
        float(get(2, 0)),
        float(get(1, 1) / 2),
        float(get(0, 2)),
        float(get(1, 0) / 2),
        float(get(0, 1) / 2),
        float(get(0, 0)),
    )


def format_conic(conic: GeneralConic) -> str:
    """Print with the full (doubled) cross and linear coefficients.

    ``parse_conic(format_conic(c)) == c`` for every finite conic.
    """
    terms = []
    for coef, var in zip(conic.full(), ("x^2", "xy", "y^2", "x", "y", "")):
        if coef == 0:
            continue
        mag = abs(coef)
        body = var if (mag == 1 and var) else _num(mag) + var
        terms.append(("-" if coef < 0 else "+", body))
    if not terms:
        return "0 = 0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out + " = 0"


def parse_coefficients(text: str) -> GeneralConic:
    """Parse ``"A,B2,C,D2,E2,F"``: the six *printed* coefficients."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise ParseError(f"expected 6 comma-separated coefficients, got {len(parts)}")
    values = []
    for part in parts:
        try:
            values.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a number: {part!r}") from None
    if not any(values):
        raise EmptyPolynomialError("all coefficients are zero")
    a, bxy, c, dx, ey, f = values
    return GeneralConic(float(a), float(bxy / 2), float(c), float(dx / 2), float(ey / 2), float(f))
