"""Exact computations in free nilpotent Lie algebras n_{d,t} and their quotients.

Rational entries are returned as fractions.Fraction. Matrices are lists of
rows; column j holds the image of basis element j.
"""

from ._core import (
    Algebra,
    DimensionError,
    FreeLieAlgebra,
    FreenilError,
    MalformedSpecError,
    ParseError,
    PreconditionError,
    Presentation,
    hall_basis,
    present,
    witt_dimension,
)

__all__ = [
    "Algebra",
    "DimensionError",
    "FreeLieAlgebra",
    "FreenilError",
    "MalformedSpecError",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "hall_basis",
    "present",
    "witt_dimension",
]
