"""Two-write code that approaches capacity with one stored matrix and no tables.

The memory holds ``sigma = C(m, w)`` tuples of ``m`` cells. Round 1 writes
every weight-``w`` subset exactly once, in an order given by a permutation
of their colex ranks. Round 2 keeps only the tuples whose subset ``S`` is
good for the fixed ``(m-w) x m`` matrix ``A`` (``A`` restricted to the
columns outside ``S`` is invertible): the i-th good tuple is overwritten
with the unique ``y`` such that ``A y = x_i`` and ``y`` keeps the ones of
``S``. Bad tuples are filled with ones. Payload vectors avoid ``A @ 1`` so
that a good tuple can never read as all ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .f2linalg import BitMatrix, BitVector, IndexSet, rank, restrict_columns, solve_constrained
from .image import MemoryImage, Scheme
from .ranking import subset_rank, subset_unrank
from .rates import LOG2_3, RateReport
from .wozencraft import WozParams, ensemble_matrix

CELL_BUDGET = 10**7


@dataclass(frozen=True)
class LookupFreeParams:
    m: int
    w: int
    A: BitMatrix
    sigma: int
    sigma_g: int
    good_mask: int

    @property
    def n_cells(self) -> int:
        return self.sigma * self.m

    @property
    def all_ones_image(self) -> BitVector:
        """``A @ 1``, the payload value that is excluded."""
        return self.A @ BitVector.ones(self.m)

    def is_good(self, r: int) -> bool:
        return bool((self.good_mask >> r) & 1)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.m, self.w) + self.A.rows


def lf_build(m: int, w: int, A: BitMatrix, budget: int = CELL_BUDGET) -> LookupFreeParams:
    """Classify every weight-``w`` subset of ``range(m)`` as good or bad for ``A``."""
    if not 0 < w < m:
        raise ValidationError(f"need 0 < w < m, got m={m}, w={w}")
    if A.shape != (m - w, m):
        raise ValidationError(f"A must be {m - w}x{m}, got {A.nrows}x{A.ncols}")
    if rank(A) != m - w:
        raise ValidationError("A must have full row rank")
    sigma = math.comb(m, w)
    if sigma * m > budget:
        raise ValidationError(f"C({m},{w})*{m} = {sigma * m} cells exceeds the budget of {budget}")
    mask = 0
    for r in range(sigma):
        S = subset_unrank(r, m, w)
        if rank(restrict_columns(A, S.complement())) == m - w:
            mask |= 1 << r
    return LookupFreeParams(m, w, A, sigma, bin(mask).count("1"), mask)


def default_matrix(m: int, w: int, alpha: int) -> BitMatrix:
    """Wozencraft matrix with k = m - w rows and b = w redundancy columns."""
    return ensemble_matrix(WozParams(m - w, w), alpha)


def lf_search(m: int, w: int, budget: int = CELL_BUDGET) -> tuple[int, LookupFreeParams]:
    """Seed of the Wozencraft matrix with the most good subsets (ties: smallest seed)."""
    best = None
    for alpha in range(1 << (m - w)):
        p = lf_build(m, w, default_matrix(m, w, alpha), budget)
        if best is None or p.sigma_g > best[1].sigma_g:
            best = (alpha, p)
    return best


def params_of(img: MemoryImage) -> LookupFreeParams:
    if img.scheme != Scheme.LOOKUPFREE:
        raise ValidationError(f"image holds a {img.scheme.name} code, expected LOOKUPFREE")
    m, w, *rows = img.params
    if len(rows) != m - w:
        raise ValidationError("parameter block does not hold m-w matrix rows")
    p = lf_build(m, w, BitMatrix(tuple(rows), m))
    if img.cells.length != p.n_cells:
        raise ValidationError(f"image has {img.cells.length} cells, parameters need {p.n_cells}")
    return p


def _tuples(p: LookupFreeParams, img: MemoryImage) -> list[BitVector]:
    return img.cells.chunks(p.m)


def lf_encode1(p: LookupFreeParams, perm: Sequence[int]) -> MemoryImage:
    if sorted(perm) != list(range(p.sigma)):
        raise ValidationError(f"message must be a permutation of 0..{p.sigma - 1}")
    cells = BitVector.concat(subset_unrank(r, p.m, p.w).characteristic() for r in perm)
    return MemoryImage.fresh(Scheme.LOOKUPFREE, p.as_tuple(), p.n_cells).rewrite(cells)


def lf_decode1(img: MemoryImage) -> list[int]:
    p = params_of(img)
    img.expect(Scheme.LOOKUPFREE, 1)
    out = []
    for t in _tuples(p, img):
        if t.weight != p.w:
            raise ValidationError("tuple weight differs from w: not a first-round image")
        out.append(subset_rank(IndexSet.from_vector(t)))
    if sorted(out) != list(range(p.sigma)):
        raise ValidationError("tuples do not hold every subset exactly once")
    return out


def lf_encode2(p: LookupFreeParams, img: MemoryImage, xs: Sequence[BitVector]) -> MemoryImage:
    if params_of(img).as_tuple() != p.as_tuple():
        raise ValidationError("image was written with different parameters")
    img.expect(Scheme.LOOKUPFREE, 1)
    if len(xs) != p.sigma_g:
        raise ValidationError(f"expected {p.sigma_g} payload vectors, got {len(xs)}")
    forbidden = p.all_ones_image
    out = []
    it = iter(xs)
    for t in _tuples(p, img):
        S = IndexSet.from_vector(t)
        if not p.is_good(subset_rank(S)):
            out.append(BitVector.ones(p.m))
            continue
        x = next(it)
        if x.length != p.m - p.w:
            raise ValidationError(f"payload vectors must have {p.m - p.w} bits")
        if x == forbidden:
            raise ValidationError("payload vector equals A @ 1, which is reserved")
        out.append(solve_constrained(p.A, x, S, t))
    return img.rewrite(BitVector.concat(out))


def lf_decode2(img: MemoryImage) -> list[BitVector]:
    p = params_of(img)
    img.expect(Scheme.LOOKUPFREE, 2)
    ones = BitVector.ones(p.m)
    xs = [p.A @ t for t in _tuples(p, img) if t != ones]
    if len(xs) != p.sigma_g:
        raise ValidationError(f"found {len(xs)} live tuples, expected {p.sigma_g}")
    return xs


def lf_rate(p: LookupFreeParams) -> RateReport:
    r1 = math.log2(math.factorial(p.sigma))
    r2 = p.sigma_g * math.log2((1 << (p.m - p.w)) - 1)
    return RateReport("lookupfree", (r1, r2), p.n_cells, LOG2_3,
                      {"sigma": p.sigma, "sigma_g": p.sigma_g})


# wire forms of the messages

def payload_to_int(p: LookupFreeParams, x: BitVector) -> int:
    """Index of ``x`` in the payload alphabet: ``A @ 1`` is skipped."""
    hole = p.all_ones_image.bits
    if x.bits == hole:
        raise ValidationError("payload vector equals A @ 1, which is reserved")
    return x.bits - (x.bits > hole)


def int_to_payload(p: LookupFreeParams, v: int) -> BitVector:
    size = (1 << (p.m - p.w)) - 1
    if not 0 <= v < size:
        raise ValidationError(f"payload symbol {v} outside 0..{size - 1}")
    hole = p.all_ones_image.bits
    return BitVector(p.m - p.w, v + (v >= hole))
