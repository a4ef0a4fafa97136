"""Rivest-Shamir two-write code: four symbols in three cells, twice.

Triplets are written as strings such as ``"010"`` whose first character is
the first cell; internally a triplet is an int with cell ``i`` at bit ``i``.
"""

from __future__ import annotations

from .errors import ValidationError
from .f2linalg import BitVector
from .image import MemoryImage, Scheme

# symbol -> (weight 0/1 word, weight 2/3 word)
TABLE = {
    0: ("000", "111"),
    1: ("001", "110"),
    2: ("010", "101"),
    3: ("100", "011"),
}


def triplet(text: str) -> int:
    if len(text) != 3 or set(text) - {"0", "1"}:
        raise ValidationError(f"not a triplet: {text!r}")
    return sum(int(c) << i for i, c in enumerate(text))


def triplet_str(t: int) -> str:
    return "".join(str((t >> i) & 1) for i in range(3))


def weight(t: int) -> int:
    return bin(t).count("1")


_LOW = {s: triplet(lo) for s, (lo, _) in TABLE.items()}
_DECODE = {}
for _s, (_lo, _hi) in TABLE.items():
    _DECODE[triplet(_lo)] = _s
    _DECODE[triplet(_hi)] = _s


def _min_dominating(t: int, s: int):
    candidates = [u for u in range(8) if u & t == t and _DECODE[u] == s]
    return min(candidates, key=lambda u: (weight(u), u)) if candidates else None


# (state, symbol) -> second-round triplet, found by exhaustive search
_SECOND = {(t, s): _min_dominating(t, s) for t in range(8) for s in range(4)}


def _check_symbol(s: int):
    if s not in TABLE:
        raise ValidationError(f"symbol must be in 0..3, got {s!r}")


def encode1(s: int) -> int:
    _check_symbol(s)
    return _LOW[s]


def encode2(t: int, s: int) -> int:
    """Minimum-weight legal overwrite of first-round triplet ``t`` with symbol ``s``."""
    _check_symbol(s)
    if not 0 <= t < 8 or weight(t) > 1:
        raise ValidationError(f"{triplet_str(t) if 0 <= t < 8 else t} is not a first-round triplet")
    return _SECOND[t, s]


def decode(t: int) -> int:
    if not 0 <= t < 8:
        raise ValidationError(f"not a triplet: {t!r}")
    return _DECODE[t]


# Whole-word images, used by the CLI and file fixtures.

def _pack(triplets) -> BitVector:
    return BitVector(3 * len(triplets), sum(t << (3 * i) for i, t in enumerate(triplets)))


def _unpack(cells: BitVector) -> list[int]:
    return [cells.slice(i, i + 3).bits for i in range(0, cells.length, 3)]


def write1(symbols) -> MemoryImage:
    img = MemoryImage.fresh(Scheme.RS, (len(symbols),), 3 * len(symbols))
    return img.rewrite(_pack([encode1(s) for s in symbols]))


def write2(img: MemoryImage, symbols) -> MemoryImage:
    img.expect(Scheme.RS, 1)
    old = _unpack(img.cells)
    if len(symbols) != len(old):
        raise ValidationError(f"expected {len(old)} symbols, got {len(symbols)}")
    return img.rewrite(_pack([encode2(t, s) for t, s in zip(old, symbols)]))


def read(img: MemoryImage) -> list[int]:
    if img.scheme != Scheme.RS or img.round not in (1, 2):
        raise ValidationError("not a written Rivest-Shamir image")
    return [decode(t) for t in _unpack(img.cells)]
