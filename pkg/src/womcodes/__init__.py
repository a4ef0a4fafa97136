"""Write-once-memory codes built on the Wozencraft ensemble."""

from .errors import (NoGoodMatrix, NoSolution, ValidationError, WomError, WriteOnceViolation)
from .f2k import FieldElement, irreducible_poly
from .f2linalg import BitMatrix, BitVector, IndexSet, rank, restrict_columns, row_space_contains, solve_constrained
from .image import MemoryImage, Scheme
from .wozencraft import WozParams, count_spanning, ensemble_matrix, find_good_matrix, is_good

__version__ = "0.1.0"

__all__ = [
    "NoGoodMatrix",
    "NoSolution",
    "ValidationError",
    "WomError",
    "WriteOnceViolation",
    "FieldElement",
    "irreducible_poly",
    "BitMatrix",
    "BitVector",
    "IndexSet",
    "rank",
    "restrict_columns",
    "row_space_contains",
    "solve_constrained",
    "MemoryImage",
    "Scheme",
    "WozParams",
    "count_spanning",
    "ensemble_matrix",
    "find_good_matrix",
    "is_good",
]
