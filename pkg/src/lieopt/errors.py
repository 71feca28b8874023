"""Shared exception types."""


class LieoptError(Exception):
    """Base class for errors raised by this package."""


class PoleAtK(LieoptError):
    """A rational function of k was evaluated at a root of its denominator."""


class NonRationalPower(LieoptError):
    """A required rational power of a positive scale does not exist in Q."""


class UnsupportedGenerator(LieoptError):
    """The exact exponential only handles generators whose ad-matrix is
    nilpotent or diagonal; anything else must go through the numeric path."""


class SeriesDoesNotTerminate(LieoptError):
    """The Lie series for this (generator, argument) pair never truncates."""


class ZeroVector(LieoptError):
    """An operation that needs a nonzero vector received zero."""


class NotClosed(LieoptError):
    """A subspace is not closed under the bracket.

    The offending pair of spanning vectors and their bracket is kept in
    ``witness`` as ``(x, y, bracket)``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class RelationMismatch(LieoptError):
    """Transported structure constants disagree with the expected table.

    ``bracket`` holds ``(i, j, got, expected)`` for the first bad pair.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class DimensionMismatch(LieoptError):
    """Vector or matrix sizes do not match the algebra dimension."""
