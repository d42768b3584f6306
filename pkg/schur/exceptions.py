"""Errors raised by the Jacobi-Trudi calculus and its front ends."""


class JtvoError(Exception):
    """Base class for every error raised by this app."""


class ShapeError(JtvoError, ValueError):
    """A matrix that must be square is not."""


class DomainError(JtvoError, ValueError):
    """An argument lies outside the domain of the operation (e.g. a foreign generator)."""


class RangeError(JtvoError, ValueError):
    """Index arguments violate an ordering precondition (M >= N, n < l(lambda), ...)."""


class UnsupportedFamilyError(JtvoError):
    """The operation is only defined for a particular generator family."""


class LiteralError(JtvoError, ValueError):
    """A shape, state, word or coefficient literal could not be parsed."""


class IdentityViolation(JtvoError):
    """An identity that must hold exactly failed; points at a family bug."""

    def __init__(self, message, *, context=None):
        super().__init__(message)
        self.context = context or {}
