"""Exception hierarchy shared by every module."""


class DiophrecError(Exception):
    """Base class for all package errors."""


class InvalidInputError(DiophrecError, ValueError):
    """Malformed arguments: wrong arity, zero polynomial, bad text."""


class ConstraintError(InvalidInputError):
    """A recurrence violates the determinant-one constraint."""


class UnsupportedInputError(InvalidInputError):
    """Input is well formed but outside the implemented theory."""


class DomainError(DiophrecError, ArithmeticError):
    """Mathematically undefined operation (inverting zero, empty region)."""


class CompletenessError(DiophrecError):
    """A solution set is not closed under the backward map below its limit."""


class RefinementBudgetError(DiophrecError):
    """An iteration cap was exhausted; indicates a bug or a wrong bound."""
