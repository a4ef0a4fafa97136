"""Colex ranking of fixed-weight subsets and Lehmer ranking of permutations."""

from __future__ import annotations

from math import comb, factorial
from typing import Sequence

from .errors import ValidationError
from .f2linalg import IndexSet


def subset_rank(S: IndexSet) -> int:
    """Colex rank of ``S`` among subsets of the same size.

    rank = sum_i C(s_i, i+1) for the members s_0 < s_1 < ...
    """
    return sum(comb(s, i + 1) for i, s in enumerate(S.members))


def subset_unrank(r: int, m: int, w: int) -> IndexSet:
    if not 0 <= w <= m:
        raise ValidationError(f"weight {w} outside 0..{m}")
    if not 0 <= r < comb(m, w):
        raise ValidationError(f"rank {r} outside 0..C({m},{w})-1")
    members = []
    for i in range(w, 0, -1):
        # largest s with C(s, i) <= r
        s = i - 1
        while comb(s + 1, i) <= r:
            s += 1
        members.append(s)
        r -= comb(s, i)
    return IndexSet(m, tuple(reversed(members)))


def bounded_subset_rank(S: IndexSet, smax: int) -> int:
    """Rank among all subsets of size <= smax: by size first, then colex."""
    if len(S) > smax:
        raise ValidationError(f"subset of size {len(S)} exceeds {smax}")
    return sum(comb(S.universe, j) for j in range(len(S))) + subset_rank(S)


def bounded_subset_unrank(r: int, m: int, smax: int) -> IndexSet:
    if r < 0:
        raise ValidationError("negative rank")
    for w in range(smax + 1):
        c = comb(m, w)
        if r < c:
            return subset_unrank(r, m, w)
        r -= c
    raise ValidationError(f"rank too large for subsets of size <= {smax} of {m}")


def bounded_subset_count(m: int, smax: int) -> int:
    return sum(comb(m, j) for j in range(min(smax, m) + 1))


def perm_rank(perm: Sequence[int]) -> int:
    """Lehmer rank; identity -> 0, reversal -> n! - 1."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValidationError("not a permutation of 0..n-1")
    remaining = list(range(n))
    r = 0
    for i, v in enumerate(perm):
        j = remaining.index(v)
        r = r * (n - i) + j
        remaining.pop(j)
    return r


def perm_unrank(r: int, n: int) -> list[int]:
    if not 0 <= r < factorial(n):
        raise ValidationError(f"rank {r} outside 0..{n}!-1")
    digits = []
    for base in range(1, n + 1):
        r, d = divmod(r, base)
        digits.append(d)
    remaining = list(range(n))
    return [remaining.pop(d) for d in reversed(digits)]
