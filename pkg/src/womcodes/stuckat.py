"""Storing data in memory with stuck-at cells.

The writer knows which cells are frozen and to what value; the reader does
not. A chunk of k+b cells carries k payload bits: the writer scans the
Wozencraft ensemble for a seed ``alpha`` such that ``A_alpha y = payload``
has a solution ``y`` agreeing with the frozen cells, writes ``y``, and
stores ``alpha`` in a separate reliable region. The reader computes
``A_alpha y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoGoodMatrix, NoSolution, ValidationError
from .f2k import FieldElement
from .f2linalg import BitVector, IndexSet, solve_constrained
from .image import MemoryImage, Scheme
from .wozencraft import WozParams, ensemble_matrix, is_good


@dataclass(frozen=True)
class DefectPattern:
    length: int
    stuck: IndexSet
    values: BitVector

    def __post_init__(self):
        if self.stuck.universe != self.length or self.values.length != self.length:
            raise ValidationError("defect pattern parts disagree on length")
        if self.values.bits & ~self.stuck.mask:
            raise ValidationError("frozen values set outside the stuck cells")

    @classmethod
    def from_dict(cls, length: int, frozen: dict[int, int]) -> DefectPattern:
        stuck = IndexSet.of(length, frozen)
        values = BitVector(length, sum(1 << i for i, v in frozen.items() if v))
        return cls(length, stuck, values)

    @classmethod
    def stuck_at_ones(cls, cells: BitVector) -> DefectPattern:
        """Every set cell of a write-once memory behaves as a cell stuck at 1."""
        return cls(cells.length, IndexSet.from_vector(cells), cells)

    def restrict(self, start: int, stop: int) -> DefectPattern:
        members = tuple(i - start for i in self.stuck.members if start <= i < stop)
        return DefectPattern(stop - start, IndexSet(stop - start, members), self.values.slice(start, stop))


def _check(p: WozParams, d: DefectPattern):
    if d.length != p.n:
        raise ValidationError(f"defect pattern covers {d.length} cells, chunk has {p.n}")


def chunk_encode(p: WozParams, d: DefectPattern, payload: BitVector) -> tuple[FieldElement, BitVector]:
    """Smallest seed whose constrained system is solvable, and the solution."""
    _check(p, d)
    if payload.length != p.k:
        raise ValidationError(f"payload must have {p.k} bits, got {payload.length}")
    for a in range(1 << p.k):
        try:
            y = solve_constrained(ensemble_matrix(p, a), payload, d.stuck, d.values)
        except NoSolution:
            continue
        return FieldElement(p.k, a), y
    raise NoGoodMatrix(f"no seed fits {len(d.stuck)} stuck cells")


def chunk_decode(p: WozParams, alpha: FieldElement, y: BitVector) -> BitVector:
    if y.length != p.n:
        raise ValidationError(f"chunk has {y.length} cells, expected {p.n}")
    return ensemble_matrix(p, alpha) @ y


def has_good_seed(p: WozParams, d: DefectPattern) -> bool:
    """Whether some seed works for every payload on this pattern."""
    _check(p, d)
    return any(is_good(p, a, d.stuck) for a in range(1 << p.k))


def defect_capacity(p: WozParams, density) -> Fraction:
    """Guaranteed rate k/(k+b) while the stuck fraction is at most b/(k+b), else 0."""
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise ValidationError("density must lie in [0, 1]")
    if density <= Fraction(p.b, p.n):
        return Fraction(p.k, p.n)
    return Fraction(0)


# Multi-chunk memory: `chunks` data chunks followed by one k-cell seed per chunk.

def image_length(p: WozParams, chunks: int) -> int:
    return chunks * (p.n + p.k)


def write(p: WozParams, chunks: int, defects: DefectPattern, payload: BitVector) -> MemoryImage:
    """Write ``chunks * k`` payload bits around ``defects`` (which cover the data cells)."""
    if chunks < 1:
        raise ValidationError("need at least one chunk")
    if defects.length != chunks * p.n:
        raise ValidationError(f"defect pattern covers {defects.length} cells, data region has {chunks * p.n}")
    if payload.length != chunks * p.k:
        raise ValidationError(f"payload must have {chunks * p.k} bits, got {payload.length}")
    ys, seeds = [], []
    for j in range(chunks):
        alpha, y = chunk_encode(p, defects.restrict(j * p.n, (j + 1) * p.n), payload.slice(j * p.k, (j + 1) * p.k))
        ys.append(y)
        seeds.append(alpha.coeffs)
    img = MemoryImage.fresh(Scheme.DEFECT, (p.k, p.b, chunks), image_length(p, chunks))
    return img.rewrite(BitVector.concat(ys + seeds))


def read(img: MemoryImage) -> BitVector:
    img.expect(Scheme.DEFECT, 1)
    k, b, chunks = img.params
    p = WozParams(k, b)
    data = img.cells.slice(0, chunks * p.n).chunks(p.n)
    seeds = img.cells.slice(chunks * p.n, img.cells.length).chunks(k)
    return BitVector.concat(chunk_decode(p, FieldElement.from_coeffs(s), y) for s, y in zip(seeds, data))
