"""Write-once memory images."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ValidationError, WriteOnceViolation
from .f2linalg import BitVector


class Scheme(enum.IntEnum):
    WOM2 = 1
    WOM3 = 2
    RS = 3
    LOOKUPFREE = 4
    DEFECT = 5


@dataclass(frozen=True)
class MemoryImage:
    """A cell array plus the header needed to decode it.

    Images are immutable; :meth:`rewrite` returns the next-round image and
    refuses any transition that would clear a cell.
    """

    scheme: Scheme
    round: int
    params: tuple[int, ...]
    cells: BitVector

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        if self.round < 0:
            raise ValidationError("negative round counter")

    @classmethod
    def fresh(cls, scheme: Scheme, params, n: int) -> MemoryImage:
        return cls(scheme, 0, tuple(params), BitVector.zeros(n))

    def __len__(self) -> int:
        return self.cells.length

    def expect(self, scheme: Scheme, round: int):
        if self.scheme != scheme:
            raise ValidationError(f"image holds a {self.scheme.name} code, expected {scheme.name}")
        if self.round != round:
            raise ValidationError(f"image is at round {self.round}, expected round {round}")

    def rewrite(self, cells: BitVector) -> MemoryImage:
        if cells.length != self.cells.length:
            raise ValidationError(f"write of {cells.length} cells into a {self.cells.length}-cell image")
        cleared = self.cells.bits & ~cells.bits
        if cleared:
            first = (cleared & -cleared).bit_length() - 1
            raise WriteOnceViolation(f"write would clear cell {first}")
        return MemoryImage(self.scheme, self.round + 1, self.params, cells)
