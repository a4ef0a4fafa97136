"""Three-write WOM code: two Rivest-Shamir rounds, then a stuck-at round.

Cell layout for ``n = 12m`` main cells::

    4m triplets | aux (0, 0, 2 or 5 cells) | skip bitmap | seed slots

The aux cells hold the symbol relabelling chosen in round 2 (variants
``ii`` and ``iii``). The bitmap and seed slots (one bit and ``k`` cells per
round-3 chunk) stay zero until round 3.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from . import rs_code
from .errors import ValidationError
from .f2k import FieldElement
from .f2linalg import BitVector
from .image import MemoryImage, Scheme
from .ranking import perm_rank, perm_unrank
from .rates import RateReport, count_equidistributed, count_words_min_zeros, rate3
from .stuckat import DefectPattern, chunk_decode, chunk_encode, has_good_seed
from .wozencraft import WozParams

VARIANTS = ("basic", "i", "ii", "iii")
AUX_CELLS = {"basic": 0, "i": 0, "ii": 2, "iii": 5}


@dataclass(frozen=True)
class Wom3Params:
    m: int
    z: int
    variant: str
    k: int
    b: int

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValidationError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.m < 1:
            raise ValidationError("m must be positive")
        if not 0 <= self.z <= 4 * self.m:
            raise ValidationError(f"z={self.z} outside 0..4m")
        WozParams(self.k, self.b)

    @property
    def chunk(self) -> WozParams:
        return WozParams(self.k, self.b)

    @property
    def n_main(self) -> int:
        return 12 * self.m

    @property
    def n_aux(self) -> int:
        return AUX_CELLS[self.variant]

    @property
    def n_chunks(self) -> int:
        return self.n_main // (self.k + self.b)

    @property
    def n_cells(self) -> int:
        return self.n_main + self.n_aux + self.n_chunks * (1 + self.k)

    @property
    def p(self) -> Fraction:
        return Fraction(self.z, 4 * self.m)

    def weight_bound(self) -> Fraction:
        """Worst-case number of set main cells after round 2."""
        m, p = self.m, self.p
        if self.variant in ("basic", "i"):
            return 9 * m - 4 * p * m
        if self.variant == "ii":
            return (9 - 6 * p) * m
        return (8 - 5 * p) * m

    def as_tuple(self) -> tuple[int, ...]:
        return (self.m, self.z, VARIANTS.index(self.variant), self.k, self.b)

    @classmethod
    def from_tuple(cls, t) -> Wom3Params:
        m, z, v, k, b = t
        if not 0 <= v < len(VARIANTS):
            raise ValidationError(f"variant code {v} out of range")
        return cls(m, z, VARIANTS[v], k, b)


def params_of(img: MemoryImage) -> Wom3Params:
    if img.scheme != Scheme.WOM3:
        raise ValidationError(f"image holds a {img.scheme.name} code, expected WOM3")
    p = Wom3Params.from_tuple(img.params)
    if img.cells.length != p.n_cells:
        raise ValidationError(f"image has {img.cells.length} cells, parameters need {p.n_cells}")
    return p


def parse_word(text: str) -> list[int]:
    text = "".join(text.split())
    if set(text) - set("0123"):
        raise ValidationError("quaternary word may only contain digits 0-3")
    return [int(c) for c in text]


def _check_word(p: Wom3Params, w: Sequence[int]):
    if len(w) != 4 * p.m:
        raise ValidationError(f"word must have {4 * p.m} symbols, got {len(w)}")
    if any(s not in (0, 1, 2, 3) for s in w):
        raise ValidationError("symbols must be in 0..3")


def _triplets(p: Wom3Params, img: MemoryImage) -> list[int]:
    return [img.cells.slice(3 * i, 3 * i + 3).bits for i in range(4 * p.m)]


def _with_main(img: MemoryImage, triplets: Sequence[int], aux: BitVector | None = None) -> BitVector:
    main = sum(t << (3 * i) for i, t in enumerate(triplets))
    bits = (img.cells.bits >> (3 * len(triplets)) << (3 * len(triplets))) | main
    if aux is not None:
        bits |= aux.bits << (3 * len(triplets))
    return BitVector(img.cells.length, bits)


# round 1

def write1(p: Wom3Params, w1: Sequence[int]) -> MemoryImage:
    _check_word(p, w1)
    zeros = sum(1 for s in w1 if s == 0)
    if zeros < p.z:
        raise ValidationError(f"first-round word has {zeros} zeros, needs at least {p.z}")
    img = MemoryImage.fresh(Scheme.WOM3, p.as_tuple(), p.n_cells)
    return img.rewrite(_with_main(img, [rs_code.encode1(s) for s in w1]))


def read1(img: MemoryImage) -> list[int]:
    p = params_of(img)
    img.expect(Scheme.WOM3, 1)
    return [rs_code.decode(t) for t in _triplets(p, img)]


# round 2

PERMS = [tuple(q) for q in permutations(range(4))]  # rank order == lexicographic order


@dataclass(frozen=True)
class Relabel:
    """How round 2 renamed the symbols of ``w2`` before writing them."""

    perm: tuple[int, ...]  # u_i = perm[w2_i]
    alpha: int | None = None

    def apply(self, w):
        return [self.perm[s] for s in w]

    def invert(self, u):
        inv = [0] * 4
        for s, t in enumerate(self.perm):
            inv[t] = s
        return [inv[s] for s in u]


def least_frequent_on(w2: Sequence[int], I: Sequence[int]) -> int:
    counts = Counter(w2[i] for i in I)
    return min(range(4), key=lambda s: (counts[s], s))


def matches(w1: Sequence[int], u: Sequence[int]) -> int:
    """|I_=(u)|: coordinates where w1 is nonzero and u repeats it."""
    return sum(1 for a, c in zip(w1, u) if a != 0 and a == c)


def zeros_on_support(w1: Sequence[int], u: Sequence[int]) -> int:
    """|I_0(u)|: coordinates where w1 is nonzero and u is zero."""
    return sum(1 for a, c in zip(w1, u) if a != 0 and c == 0)


def choose_relabel(variant: str, w1: Sequence[int], w2: Sequence[int]) -> Relabel:
    if variant in ("basic", "i"):
        return Relabel((0, 1, 2, 3))
    I = [i for i, s in enumerate(w1) if s != 0]
    alpha = least_frequent_on(w2, I)
    if variant == "ii":
        swap = list(range(4))
        swap[0], swap[alpha] = alpha, 0
        return Relabel(tuple(swap), alpha)
    best = max(
        (q for q in PERMS if q[alpha] == 0),
        key=lambda q: (matches(w1, [q[s] for s in w2]), -perm_rank(q)),
    )
    return Relabel(best, alpha)


def _aux_bits(p: Wom3Params, r: Relabel) -> BitVector | None:
    if p.variant == "ii":
        return BitVector(2, r.alpha)
    if p.variant == "iii":
        return BitVector(5, perm_rank(r.perm))
    return None


def _read_relabel(p: Wom3Params, img: MemoryImage) -> Relabel:
    aux = img.cells.slice(p.n_main, p.n_main + p.n_aux).bits
    if p.variant == "ii":
        swap = list(range(4))
        swap[0], swap[aux] = aux, 0
        return Relabel(tuple(swap), aux)
    if p.variant == "iii":
        if aux >= 24:
            raise ValidationError(f"stored permutation rank {aux} >= 24")
        q = tuple(perm_unrank(aux, 4))
        return Relabel(q, q.index(0))
    return Relabel((0, 1, 2, 3))


def main_weight(p: Wom3Params, img: MemoryImage) -> int:
    return img.cells.slice(0, p.n_main).weight


def write2(p: Wom3Params, img: MemoryImage, w2: Sequence[int]) -> MemoryImage:
    if params_of(img) != p:
        raise ValidationError("image was written with different parameters")
    img.expect(Scheme.WOM3, 1)
    _check_word(p, w2)
    counts = Counter(w2)
    if any(counts[s] != p.m for s in range(4)):
        raise ValidationError("second-round word must contain each symbol exactly m times")
    old = _triplets(p, img)
    w1 = [rs_code.decode(t) for t in old]
    r = choose_relabel(p.variant, w1, w2)
    u = r.apply(w2)
    out = img.rewrite(_with_main(img, [rs_code.encode2(t, s) for t, s in zip(old, u)], _aux_bits(p, r)))
    if main_weight(p, out) > p.weight_bound():
        raise RuntimeError(
            f"round-2 weight {main_weight(p, out)} exceeds the proven bound {p.weight_bound()}")
    return out


def read2(img: MemoryImage) -> list[int]:
    p = params_of(img)
    img.expect(Scheme.WOM3, 2)
    u = [rs_code.decode(t) for t in _triplets(p, img)]
    return _read_relabel(p, img).invert(u)


# round 3

def _chunk_cells(p: Wom3Params, img: MemoryImage, j: int) -> BitVector:
    n = p.k + p.b
    return img.cells.slice(j * n, (j + 1) * n)


def usable_chunks(p: Wom3Params, img: MemoryImage) -> list[int]:
    """Chunks whose set cells leave at least one seed good for every payload."""
    return [j for j in range(p.n_chunks)
            if has_good_seed(p.chunk, DefectPattern.stuck_at_ones(_chunk_cells(p, img, j)))]


def capacity3(img: MemoryImage) -> int:
    p = params_of(img)
    img.expect(Scheme.WOM3, 2)
    return p.k * len(usable_chunks(p, img))


def write3(p: Wom3Params, img: MemoryImage, payload: BitVector) -> tuple[MemoryImage, int]:
    """Third write. A final partial chunk of payload is padded with zeros.

    Returns the new image and the number of cells' worth of payload bits
    actually stored (a multiple of k).
    """
    if params_of(img) != p:
        raise ValidationError("image was written with different parameters")
    img.expect(Scheme.WOM3, 2)
    usable = usable_chunks(p, img)
    needed = -(-payload.length // p.k)
    if needed > len(usable):
        raise ValidationError(
            f"payload of {payload.length} bits exceeds round-3 capacity {p.k * len(usable)}")
    n = p.k + p.b
    padded = BitVector.concat([payload, BitVector.zeros(needed * p.k - payload.length)])
    bits = img.cells.bits
    skip = [1] * p.n_chunks
    seeds = []
    for slot, j in enumerate(usable[:needed]):
        cells = _chunk_cells(p, img, j)
        alpha, y = chunk_encode(p.chunk, DefectPattern.stuck_at_ones(cells),
                                padded.slice(slot * p.k, (slot + 1) * p.k))
        bits |= y.bits << (j * n)
        skip[j] = 0
        seeds.append(alpha.coeffs)
    side = p.n_main + p.n_aux
    bits |= BitVector.from_bits(skip).bits << side
    if seeds:
        bits |= BitVector.concat(seeds).bits << (side + p.n_chunks)
    return img.rewrite(BitVector(img.cells.length, bits)), needed * p.k


def read3(img: MemoryImage) -> BitVector:
    p = params_of(img)
    img.expect(Scheme.WOM3, 3)
    side = p.n_main + p.n_aux
    skip = img.cells.slice(side, side + p.n_chunks)
    seeds = img.cells.slice(side + p.n_chunks, p.n_cells).chunks(p.k)
    out = []
    slot = 0
    for j in range(p.n_chunks):
        if skip[j]:
            continue
        out.append(chunk_decode(p.chunk, FieldElement.from_coeffs(seeds[slot]), _chunk_cells(p, img, j)))
        slot += 1
    return BitVector.concat(out)


def rate(p: Wom3Params, written_bits: int) -> RateReport:
    """Achieved rate of one three-write cycle that stored ``written_bits`` in round 3."""
    r1 = math.log2(count_words_min_zeros(4 * p.m, p.z))
    r2 = math.log2(count_equidistributed(p.m))
    return RateReport(
        f"wom3-{p.variant}",
        (r1, r2, float(written_bits)),
        p.n_cells,
        rate3(p.variant, float(p.p)),
        {"weight_bound": str(p.weight_bound())},
    )
