"""Exception hierarchy.

Everything raised on purpose derives from :class:`ConicError`.  The CLI maps
:class:`InputError` subclasses to exit code 2 and every other
:class:`ConicError` to exit code 3.
"""


class ConicError(ValueError):
    pass


class InputError(ConicError):
    """Malformed user input (equation text, coefficient lists)."""


class ParseError(InputError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class DegreeError(ParseError):
    pass


class UnknownVariableError(ParseError):
    pass


class EmptyPolynomialError(InputError):
    pass


class AllCoefficientsZero(ConicError):
    """The quadratic part vanishes; the equation describes a line."""


class DegenerateLinearInput(AllCoefficientsZero):
    pass


class NotACenter(ConicError):
    pass


class NotDegenerate(ConicError):
    pass


class NotAHyperbola(ConicError):
    pass


class PointNotOnConic(ConicError):
    pass


class SingularPoint(ConicError):
    pass


class DegeneratePolar(ConicError):
    pass


class DomainError(ConicError):
    pass
