"""Bit-packed vectors and matrices over GF(2).

Vectors and matrix rows are stored as Python ints; bit ``i`` of the int is
coordinate ``i``. Everything here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NoSolution, ValidationError


def _mask(n: int) -> int:
    return (1 << n) - 1


def parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValidationError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValidationError("bits set beyond vector length")

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitVector:
        return cls(n, _mask(n))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        value = 0
        n = 0
        for i, b in enumerate(bits):
            if b not in (0, 1, True, False):
                raise ValidationError(f"not a bit: {b!r}")
            value |= int(b) << i
            n = i + 1
        return cls(n, value)

    @classmethod
    def from_str(cls, text: str) -> BitVector:
        """Parse ``"0110"``; the first character is coordinate 0."""
        text = "".join(text.split())
        if set(text) - {"0", "1"}:
            raise ValidationError(f"bit string may only contain 0 and 1: {text[:20]!r}")
        return cls.from_bits(int(c) for c in text)

    @classmethod
    def from_array(cls, arr) -> BitVector:
        return cls.from_bits(int(v) for v in np.asarray(arr, dtype=np.uint8).ravel())

    @classmethod
    def concat(cls, parts: Iterable[BitVector]) -> BitVector:
        value = 0
        n = 0
        for p in parts:
            value |= p.bits << n
            n += p.length
        return cls(n, value)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return (self.bits >> (i % self.length)) & 1

    def __iter__(self):
        for i in range(self.length):
            yield (self.bits >> i) & 1

    def __str__(self) -> str:
        return "".join(str(b) for b in self)

    def _check(self, other: BitVector):
        if self.length != other.length:
            raise ValidationError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __or__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits | other.bits)

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits & other.bits)

    def __le__(self, other: BitVector) -> bool:
        """Componentwise order: every 1 of ``self`` is also a 1 of ``other``."""
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: BitVector) -> bool:
        return other <= self

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def slice(self, start: int, stop: int) -> BitVector:
        if not 0 <= start <= stop <= self.length:
            raise ValidationError(f"bad slice [{start}, {stop}) of length {self.length}")
        return BitVector(stop - start, (self.bits >> start) & _mask(stop - start))

    def chunks(self, size: int) -> list[BitVector]:
        return [self.slice(i, i + size) for i in range(0, self.length - size + 1, size)]

    def to_list(self) -> list[int]:
        return list(self)

    def to_array(self) -> np.ndarray:
        return np.array(self.to_list(), dtype=np.uint8)


@dataclass(frozen=True)
class IndexSet:
    """A strictly increasing set of 0-based coordinates inside ``range(universe)``."""

    universe: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValidationError(f"members must be strictly increasing: {members}")
        if members and (members[0] < 0 or members[-1] >= self.universe):
            raise ValidationError(f"members outside universe {self.universe}: {members}")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> IndexSet:
        return cls(universe, tuple(sorted(set(members))))

    @classmethod
    def from_vector(cls, v: BitVector) -> IndexSet:
        return cls(v.length, tuple(v.support()))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i) -> bool:
        return i in self.members

    @property
    def mask(self) -> int:
        out = 0
        for i in self.members:
            out |= 1 << i
        return out

    def complement(self) -> IndexSet:
        inside = set(self.members)
        return IndexSet(self.universe, tuple(i for i in range(self.universe) if i not in inside))

    def characteristic(self) -> BitVector:
        return BitVector(self.universe, self.mask)


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; ``rows[i]`` is row ``i`` packed as an int."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if self.ncols < 0:
            raise ValidationError("negative column count")
        if any(r < 0 or r >> self.ncols for r in rows):
            raise ValidationError("row has bits beyond the column count")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValidationError("ragged rows")
        return cls(tuple(BitVector.from_bits(r).bits for r in rows), ncols)

    @classmethod
    def from_array(cls, arr) -> BitMatrix:
        a = np.asarray(arr, dtype=np.uint8) & 1
        return cls.from_lists(a.tolist())

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_list() for i in range(self.nrows)]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    def __matmul__(self, y: BitVector) -> BitVector:
        """Matrix-vector product ``A @ y``."""
        if y.length != self.ncols:
            raise ValidationError(f"vector length {y.length} != {self.ncols} columns")
        out = 0
        for i, r in enumerate(self.rows):
            out |= parity(r & y.bits) << i
        return BitVector(self.nrows, out)

    def combine_rows(self, x: BitVector) -> BitVector:
        """Row-vector product ``x @ A``: the xor of the rows selected by ``x``."""
        if x.length != self.nrows:
            raise ValidationError(f"vector length {x.length} != {self.nrows} rows")
        out = 0
        for i, r in enumerate(self.rows):
            if (x.bits >> i) & 1:
                out ^= r
        return BitVector(self.ncols, out)


def _echelon(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form. Returns (nonzero reduced rows, pivot columns)."""
    work = list(rows)
    pivots = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(M: BitMatrix) -> int:
    return len(_echelon(list(M.rows), M.ncols)[1])


def restrict_columns(M: BitMatrix, S: IndexSet) -> BitMatrix:
    if S.universe != M.ncols:
        raise ValidationError(f"index set universe {S.universe} != {M.ncols} columns")
    rows = []
    for r in M.rows:
        out = 0
        for j, c in enumerate(S.members):
            out |= ((r >> c) & 1) << j
        rows.append(out)
    return BitMatrix(tuple(rows), len(S))


def row_space_contains(M: BitMatrix, y: BitVector) -> bool:
    if y.length != M.ncols:
        raise ValidationError(f"vector length {y.length} != {M.ncols} columns")
    reduced, pivots = _echelon(list(M.rows), M.ncols)
    v = y.bits
    for row, col in zip(reduced, pivots):
        if (v >> col) & 1:
            v ^= row
    return v == 0


def solve(A: BitMatrix, x: BitVector) -> BitVector:
    """Canonical solution of ``A @ y = x``: free variables are 0."""
    if x.length != A.nrows:
        raise ValidationError(f"right-hand side length {x.length} != {A.nrows} rows")
    n = A.ncols
    # rhs rides along as column n of the augmented system
    aug = [r | (((x.bits >> i) & 1) << n) for i, r in enumerate(A.rows)]
    reduced, pivots = _echelon(aug, n + 1)
    if pivots and pivots[-1] == n:
        raise NoSolution("inconsistent system")
    y = 0
    for row, col in zip(reduced, pivots):
        y |= ((row >> n) & 1) << col
    return BitVector(n, y)


def solve_constrained(A: BitMatrix, x: BitVector, S: IndexSet, w: BitVector) -> BitVector:
    """Find ``y`` with ``A @ y = x`` and ``y`` equal to ``w`` on ``S``.

    ``w`` must vanish outside ``S``. The coordinates outside ``S`` come from
    :func:`solve` on the restricted system, so free variables are 0.
    Raises :class:`NoSolution` if the residual is not spanned by the columns
    outside ``S``.
    """
    if x.length != A.nrows:
        raise ValidationError(f"payload length {x.length} != {A.nrows} rows")
    if S.universe != A.ncols or w.length != A.ncols:
        raise ValidationError("index set / fixed vector do not match the column count")
    if w.bits & ~S.mask:
        raise ValidationError("fixed vector is nonzero outside the index set")
    residual = x ^ (A @ w)
    free = S.complement()
    z = solve(restrict_columns(A, free), residual)
    y = w.bits
    for j, c in enumerate(free.members):
        y |= ((z.bits >> j) & 1) << c
    return BitVector(A.ncols, y)


__all__ = [
    "BitVector",
    "BitMatrix",
    "IndexSet",
    "parity",
    "rank",
    "restrict_columns",
    "row_space_contains",
    "solve",
    "solve_constrained",
]
