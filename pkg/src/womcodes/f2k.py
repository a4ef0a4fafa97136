"""Arithmetic in GF(2^k), 1 <= k <= 32.

Elements are polynomials over GF(2) reduced modulo a fixed irreducible
polynomial, stored as ints with the coefficient of x^i at bit i. The map
between field elements and length-k bit vectors is the identity on this
coefficient representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .f2linalg import BitVector

MAX_DEGREE = 32

# Smallest (as the integer c_0 + 2 c_1 + ...) irreducible polynomial of each
# degree with nonzero constant term, leading x^k bit included. Never edit:
# stored seeds in memory images depend on it.
IRREDUCIBLE = {
    1: 0x3, 2: 0x7, 3: 0xb, 4: 0x13,
    5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11b,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009,
    13: 0x201b, 14: 0x4021, 15: 0x8003, 16: 0x1002b,
    17: 0x20009, 18: 0x40009, 19: 0x80027, 20: 0x100009,
    21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001b,
    25: 0x2000009, 26: 0x400001b, 27: 0x8000027, 28: 0x10000003,
    29: 0x20000005, 30: 0x40000003, 31: 0x80000009, 32: 0x10000008d,
}


def _check_degree(k: int):
    if not 1 <= k <= MAX_DEGREE:
        raise ValidationError(f"field degree must be in 1..{MAX_DEGREE}, got {k}")


def irreducible_poly(k: int) -> BitVector:
    """Coefficient vector (length k+1, low degree first) of the modulus for GF(2^k)."""
    _check_degree(k)
    return BitVector(k + 1, IRREDUCIBLE[k])


def clmul(a: int, b: int) -> int:
    """Carry-less product of two polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def reduce(a: int, k: int) -> int:
    f = IRREDUCIBLE[k]
    while a.bit_length() > k:
        a ^= f << (a.bit_length() - 1 - k)
    return a


@dataclass(frozen=True)
class FieldElement:
    k: int
    value: int = 0

    def __post_init__(self):
        _check_degree(self.k)
        if self.value < 0 or self.value >> self.k:
            raise ValidationError(f"{self.value:#x} is not an element of GF(2^{self.k})")

    @classmethod
    def from_coeffs(cls, coeffs: BitVector) -> FieldElement:
        return cls(coeffs.length, coeffs.bits)

    @property
    def coeffs(self) -> BitVector:
        return BitVector(self.k, self.value)

    def __add__(self, other: FieldElement) -> FieldElement:
        _same_field(self, other)
        return FieldElement(self.k, self.value ^ other.value)

    def __mul__(self, other: FieldElement) -> FieldElement:
        return mul(self, other)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value


def _same_field(a: FieldElement, b: FieldElement):
    if a.k != b.k:
        raise ValidationError(f"degree mismatch: GF(2^{a.k}) vs GF(2^{b.k})")


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return FieldElement(a.k, reduce(clmul(a.value, b.value), a.k))


def project(v: BitVector, b: int) -> BitVector:
    """First ``b`` coordinates of ``v``."""
    if not 0 < b <= v.length:
        raise ValidationError(f"projection length {b} outside 1..{v.length}")
    return v.slice(0, b)


def elements(k: int):
    """All elements of GF(2^k) in ascending integer order."""
    _check_degree(k)
    return (FieldElement(k, v) for v in range(1 << k))


def field_table() -> list[str]:
    """One line per degree: comma-separated coefficient bits, low degree first."""
    return [",".join(str(b) for b in irreducible_poly(k)) for k in range(1, MAX_DEGREE + 1)]
