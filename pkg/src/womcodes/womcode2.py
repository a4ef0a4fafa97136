"""Capacity-approaching two-write WOM code built on the Wozencraft ensemble.

Layout of the ``N = t*(k+b) + (t/g)*k`` cells::

    block_1 | block_2 | ... | block_t | seed_1 | ... | seed_{t/g}

Round 1 writes the characteristic vector of a subset ``S_j`` into block j
and leaves the seed region zero. Round 2 picks, for each group of ``g``
consecutive blocks, the smallest ``alpha`` whose matrix stays full rank off
every ``S_j`` of the group, rewrites block j as a solution ``y_j`` of
``A_alpha y_j = x_j`` that keeps the ones of ``S_j``, and stores ``alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .f2k import FieldElement
from .f2linalg import BitVector, IndexSet, solve_constrained
from .image import MemoryImage, Scheme
from .rates import LOG2_3, RateReport
from .ranking import bounded_subset_count
from .wozencraft import WozParams, ensemble_matrix, find_good_matrix


@dataclass(frozen=True)
class Wom2Params:
    k: int
    b: int
    t: int
    g: int
    smax: int

    def __post_init__(self):
        WozParams(self.k, self.b)
        if self.t < 1 or self.g < 1 or self.t % self.g:
            raise ValidationError(f"group size g={self.g} must divide block count t={self.t}")
        if not 0 <= self.smax <= self.k + self.b:
            raise ValidationError(f"smax={self.smax} outside 0..k+b")

    @classmethod
    def parse(cls, text: str) -> Wom2Params:
        try:
            k, b, t, g, smax = (int(v) for v in text.split(","))
        except ValueError:
            raise ValidationError(f"expected k,b,t,g,smax, got {text!r}") from None
        return cls(k, b, t, g, smax)

    @property
    def woz(self) -> WozParams:
        return WozParams(self.k, self.b)

    @property
    def block(self) -> int:
        return self.k + self.b

    @property
    def groups(self) -> int:
        return self.t // self.g

    @property
    def n_cells(self) -> int:
        return self.t * self.block + self.groups * self.k

    @property
    def guaranteed(self) -> bool:
        """Round 2 cannot fail: g subsets of size <= smax never exhaust the ensemble."""
        return self.g * ((1 << self.smax) - 1) < (1 << self.b)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.k, self.b, self.t, self.g, self.smax)


def params_of(img: MemoryImage) -> Wom2Params:
    if img.scheme != Scheme.WOM2:
        raise ValidationError(f"image holds a {img.scheme.name} code, expected WOM2")
    return Wom2Params(*img.params)


def encode1(p: Wom2Params, subsets: Sequence[IndexSet]) -> MemoryImage:
    if len(subsets) != p.t:
        raise ValidationError(f"expected {p.t} subsets, got {len(subsets)}")
    for S in subsets:
        if S.universe != p.block:
            raise ValidationError(f"subset universe {S.universe} != block length {p.block}")
        if len(S) > p.smax:
            raise ValidationError(f"subset of size {len(S)} exceeds smax={p.smax}")
    cells = BitVector.concat([S.characteristic() for S in subsets] + [BitVector.zeros(p.groups * p.k)])
    return MemoryImage.fresh(Scheme.WOM2, p.as_tuple(), p.n_cells).rewrite(cells)


def _blocks(p: Wom2Params, img: MemoryImage) -> list[BitVector]:
    if img.cells.length != p.n_cells:
        raise ValidationError(f"image has {img.cells.length} cells, parameters need {p.n_cells}")
    return img.cells.slice(0, p.t * p.block).chunks(p.block)


def decode1(img: MemoryImage) -> list[IndexSet]:
    p = params_of(img)
    img.expect(Scheme.WOM2, 1)
    subsets = [IndexSet.from_vector(w) for w in _blocks(p, img)]
    if any(len(S) > p.smax for S in subsets):
        raise ValidationError("block weight exceeds smax: not a first-round image")
    return subsets


def encode2(p: Wom2Params, img: MemoryImage, payload: BitVector) -> MemoryImage:
    """Second write. Raises ``NoGoodMatrix`` (image untouched) if a group has no seed."""
    if params_of(img) != p:
        raise ValidationError("image was written with different parameters")
    img.expect(Scheme.WOM2, 1)
    if payload.length != p.t * p.k:
        raise ValidationError(f"payload must have {p.t * p.k} bits, got {payload.length}")
    words = _blocks(p, img)
    xs = payload.chunks(p.k)
    ys, seeds = [], []
    for i in range(p.groups):
        group = range(i * p.g, (i + 1) * p.g)
        sets = [IndexSet.from_vector(words[j]) for j in group]
        alpha = find_good_matrix(p.woz, sets)
        A = ensemble_matrix(p.woz, alpha)
        ys.extend(solve_constrained(A, xs[j], S, words[j]) for j, S in zip(group, sets))
        seeds.append(alpha.coeffs)
    return img.rewrite(BitVector.concat(ys + seeds))


def decode2(img: MemoryImage) -> BitVector:
    p = params_of(img)
    img.expect(Scheme.WOM2, 2)
    ys = _blocks(p, img)
    seeds = img.cells.slice(p.t * p.block, p.n_cells).chunks(p.k)
    xs = []
    for i, seed in enumerate(seeds):
        A = ensemble_matrix(p.woz, FieldElement.from_coeffs(seed))
        xs.extend(A @ ys[j] for j in range(i * p.g, (i + 1) * p.g))
    return BitVector.concat(xs)


def rate(p: Wom2Params) -> RateReport:
    count = bounded_subset_count(p.block, p.smax)
    return RateReport(
        "wom2",
        (p.t * math.log2(count), float(p.t * p.k)),
        p.n_cells,
        LOG2_3,
        {"guaranteed": p.guaranteed, "first_round_messages_per_block": count},
    )
