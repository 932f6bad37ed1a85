"""Exception types shared across the package.

Anything deriving from :class:`DomainError` is a mathematical refusal
(singular curve, point off the curve, pole at a point, ...).  Parse
problems raise :class:`ExprSyntaxError`.
"""


class DomainError(ValueError):
    pass


class FieldMismatchError(DomainError):
    pass


class SingularCurveError(DomainError):
    pass


class NotOnCurveError(DomainError):
    pass


class PoleError(DomainError):
    """The function has a pole at the requested point."""


class NotAUniformizerError(DomainError):
    pass


class InsufficientPrecisionError(DomainError):
    """All known coefficients vanish but the series is not known to be zero."""


class ExprSyntaxError(ValueError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
