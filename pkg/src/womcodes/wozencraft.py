"""The (k, k+b) Wozencraft ensemble.

For ``alpha`` in GF(2^k) the matrix ``A_alpha`` maps the row vector of ``x``
to ``(x, first b coefficients of alpha*x)``. Row ``i`` is therefore the unit
vector ``e_i`` followed by the projection of ``alpha * x^i``, i.e. the
systematic form ``[I_k | M_alpha]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NoGoodMatrix, ValidationError
from .f2k import FieldElement, clmul, reduce
from .f2linalg import BitMatrix, BitVector, IndexSet, rank, restrict_columns, row_space_contains


@dataclass(frozen=True)
class WozParams:
    k: int
    b: int

    def __post_init__(self):
        if not 0 < self.b <= self.k <= 32:
            raise ValidationError(f"need 0 < b <= k <= 32, got k={self.k}, b={self.b}")

    @property
    def n(self) -> int:
        return self.k + self.b


def _alpha_value(p: WozParams, alpha) -> int:
    if isinstance(alpha, FieldElement):
        if alpha.k != p.k:
            raise ValidationError(f"alpha lives in GF(2^{alpha.k}), ensemble needs GF(2^{p.k})")
        return alpha.value
    if not 0 <= alpha < (1 << p.k):
        raise ValidationError(f"alpha {alpha} out of range for k={p.k}")
    return alpha


@lru_cache(maxsize=4096)
def _ensemble_rows(k: int, b: int, a: int) -> tuple[int, ...]:
    low = (1 << b) - 1
    return tuple((1 << i) | ((reduce(clmul(a, 1 << i), k) & low) << k) for i in range(k))


def ensemble_matrix(p: WozParams, alpha: FieldElement | int) -> BitMatrix:
    """The k x (k+b) matrix ``A_alpha``."""
    return BitMatrix(_ensemble_rows(p.k, p.b, _alpha_value(p, alpha)), p.n)


def _check_universe(p: WozParams, S: IndexSet):
    if S.universe != p.n:
        raise ValidationError(f"index set universe {S.universe} != k+b = {p.n}")


def is_good(p: WozParams, alpha: FieldElement | int, S: IndexSet) -> bool:
    """Whether ``A_alpha`` keeps full row rank after deleting the columns in ``S``."""
    _check_universe(p, S)
    if p.n - len(S) < p.k:
        return False
    return rank(restrict_columns(ensemble_matrix(p, alpha), S.complement())) == p.k


def find_good_matrix(p: WozParams, sets: Sequence[IndexSet]) -> FieldElement:
    """Smallest alpha that is good for every set in ``sets``."""
    for S in sets:
        _check_universe(p, S)
    for a in range(1 << p.k):
        if all(is_good(p, a, S) for S in sets):
            return FieldElement(p.k, a)
    raise NoGoodMatrix(f"no alpha in GF(2^{p.k}) is good for all {len(sets)} sets")


def guarantee_holds(p: WozParams, set_sizes: Iterable[int]) -> bool:
    """Union-bound condition sum(2^|S| - 1) < 2^b under which a good alpha must exist."""
    return sum((1 << s) - 1 for s in set_sizes) < (1 << p.b)


def count_spanning(p: WozParams, y: BitVector) -> int:
    """Number of alpha whose ``A_alpha`` contains ``y`` in its row space."""
    if y.length != p.n:
        raise ValidationError(f"vector length {y.length} != k+b = {p.n}")
    return sum(row_space_contains(ensemble_matrix(p, a), y) for a in range(1 << p.k))


def count_bad(p: WozParams, S: IndexSet) -> int:
    """Number of alpha that are not good for ``S``."""
    return sum(not is_good(p, a, S) for a in range(1 << p.k))


@dataclass(frozen=True)
class ClaimResult:
    name: str
    checked: int
    worst: int
    bound: int
    passed: bool


def verify_ensemble(p: WozParams) -> list[ClaimResult]:
    """Exhaustively check the ensemble's counting claims for small (k, b).

    Cost grows like 4^k * 2^b rank computations; intended for k <= 12.
    """
    from itertools import combinations

    n, k, b = p.n, p.k, p.b
    results = []

    exact = 1 << (k - b)
    head = (1 << k) - 1
    counts = {y: count_spanning(p, BitVector(n, y)) for y in range(1, 1 << n)}
    live = [c for y, c in counts.items() if y & head]
    dead = [c for y, c in counts.items() if not y & head]
    results.append(ClaimResult(
        "each vector with a nonzero message part lies in exactly 2^(k-b) row spaces",
        len(live), max(live, key=lambda c: abs(c - exact)), exact,
        all(c == exact for c in live)))
    results.append(ClaimResult(
        "each nonzero vector with a zero message part lies in no row space",
        len(dead), max(dead, default=0), 0, all(c == 0 for c in dead)))

    worst_slack = None
    ok = True
    for y in range(1, 1 << n):
        S = IndexSet.from_vector(BitVector(n, y))
        bound = ((1 << len(S)) - 1) << (k - b)
        bad = count_bad(p, S)
        ok &= bad <= bound
        if worst_slack is None or bound - bad < worst_slack[0]:
            worst_slack = (bound - bad, bad, bound)
    results.append(ClaimResult(
        "vectors below a weight-s support span at most (2^s-1)*2^(k-b) ensembles",
        (1 << n) - 1, worst_slack[1], worst_slack[2], ok))

    checked = 0
    worst = 0
    ok = True
    for s in range(b + 1):
        for members in combinations(range(n), s):
            S = IndexSet(n, members)
            bad = count_bad(p, S)
            ok &= bad <= ((1 << s) - 1) << (k - b) and bad < (1 << k)
            worst = max(worst, bad)
            checked += 1
    results.append(ClaimResult(
        "every set of at most b columns leaves a good matrix", checked, worst, (1 << k) - 1, ok))

    seen = {_ensemble_rows(k, b, a) for a in range(1 << k)}
    results.append(ClaimResult(
        "alpha -> A_alpha is injective", 1 << k, len(seen), 1 << k,
        len(seen) == (1 << k)))
    return results
