"""Closed-form rates, capacities and their maximizers."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from scipy.optimize import bisect

from .errors import ValidationError

LOG2_3 = math.log2(3)
TOL = 1e-9
_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class RateReport:
    scheme: str
    round_bits: tuple[float, ...]
    n_cells: int
    reference: float
    extra: dict = field(default_factory=dict)

    @property
    def rate(self) -> float:
        return sum(self.round_bits) / self.n_cells

    @property
    def gap(self) -> float:
        return self.reference - self.rate

    def as_dict(self) -> dict:
        d = asdict(self)
        d["round_bits"] = list(self.round_bits)
        d.update(rate=self.rate, gap=self.gap)
        return d


@dataclass(frozen=True)
class CurvePoint:
    p: float
    value: float


def entropy(p: float) -> float:
    if not 0 <= p <= 1:
        raise ValidationError(f"probability {p} outside [0, 1]")
    if p in (0, 1):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def wom_capacity(t: int) -> float:
    """Sum-rate capacity of a binary t-write WOM."""
    if t < 1:
        raise ValidationError("need at least one write")
    return math.log2(t + 1)


def golden_max(f, lo: float, hi: float, tol: float = TOL) -> CurvePoint:
    """Golden-section search for the maximum of a unimodal ``f`` on [lo, hi]."""
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return CurvePoint(x, f(x))


def capacity2_curve(p: float) -> float:
    return entropy(p) + 1 - p


def maximize_capacity2() -> CurvePoint:
    return golden_max(capacity2_curve, 0.0, 0.5)


def equal_rate_point() -> CurvePoint:
    """Weight where both writes of a 2-write code carry the same rate."""
    p = bisect(lambda q: entropy(q) - (1 - q), 1e-12, 0.5, xtol=1e-14)
    return CurvePoint(p, 2 * (1 - p))


VARIANTS = ("basic", "i", "ii", "iii")


def _third_round(variant: str, p: float) -> float:
    if variant == "i":
        return p / 3 + 1 / 4
    if variant == "ii":
        return 1 / 4 + p / 2
    if variant == "iii":
        return (4 + 5 * p) / 12
    raise ValidationError(f"unknown variant {variant!r}")


def rate3(variant: str, p: float) -> float:
    """Limit rate of the three-write construction.

    ``basic`` ignores ``p``: both quaternary rounds are equidistributed.
    """
    if variant == "basic":
        return 5 / 3
    if not 0 <= p <= 1:
        raise ValidationError(f"probability {p} outside [0, 1]")
    first = (entropy(p) + (1 - p) * LOG2_3) / 3
    return first + 2 / 3 + _third_round(variant, p)


def maximize_rate3(variant: str) -> CurvePoint:
    if variant == "basic":
        return CurvePoint(0.25, 5 / 3)
    _third_round(variant, 0.0)
    return golden_max(lambda p: rate3(variant, p), 0.0, 1.0)


def curve_table(f, lo: float = 0.0, hi: float = 1.0, steps: int = 100) -> list[CurvePoint]:
    return [CurvePoint(lo + (hi - lo) * i / steps, f(lo + (hi - lo) * i / steps)) for i in range(steps + 1)]


# message-set sizes of the quaternary rounds

def count_words_min_zeros(length: int, zeros: int) -> int:
    """Words in {0,1,2,3}^length with at least ``zeros`` zeros."""
    return sum(math.comb(length, j) * 3 ** (length - j) for j in range(zeros, length + 1))


def count_equidistributed(m: int) -> int:
    """Words in {0,1,2,3}^(4m) with each symbol exactly m times."""
    return math.factorial(4 * m) // math.factorial(m) ** 4
