"""Exception types shared across the library.

Every failure mode carries enough context to reproduce it: the inexact
division error keeps the nonzero remainder, the symmetry error names a
violating transposition, the degeneracy error names the colliding
partitions.
"""

from __future__ import annotations


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder.

    The remainder is stored so callers can report an exact witness.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NonSymmetricError(ValueError):
    """An operation that requires a symmetric polynomial got a non-symmetric one.

    ``transposition`` is a pair (i, j) of 1-based variable indices whose
    exchange changes the polynomial.
    """

    def __init__(self, message, transposition=None):
        super().__init__(message)
        self.transposition = transposition


class DegenerateSpectrumError(ValueError):
    """Two basis partitions share an eigenvalue at the chosen specialization."""

    def __init__(self, message, partitions=None):
        super().__init__(message)
        self.partitions = partitions
