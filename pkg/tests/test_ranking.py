import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from womcodes.errors import ValidationError
from womcodes.f2linalg import IndexSet
from womcodes.ranking import (bounded_subset_count, bounded_subset_rank, bounded_subset_unrank,
                              perm_rank, perm_unrank, subset_rank, subset_unrank)


def colex_order(m, w):
    return sorted(itertools.combinations(range(m), w), key=lambda c: tuple(reversed(c)))


class TestSubsetRank:
    def test_first(self):
        assert subset_rank(IndexSet(6, (0, 1, 2))) == 0

    def test_last(self):
        assert subset_rank(IndexSet(6, (3, 4, 5))) == comb(6, 3) - 1

    def test_pair_example(self):
        order = colex_order(4, 2)
        assert order.index((1, 3)) == 4
        assert subset_rank(IndexSet(4, (1, 3))) == 4

    @pytest.mark.parametrize("m,w", [(4, 2), (6, 3), (7, 0), (7, 7), (9, 4)])
    def test_matches_enumeration(self, m, w):
        for r, c in enumerate(colex_order(m, w)):
            assert subset_rank(IndexSet(m, c)) == r
            assert subset_unrank(r, m, w) == IndexSet(m, c)

    def test_unrank_range(self):
        with pytest.raises(ValidationError):
            subset_unrank(6, 4, 2)


def test_bounded_ranks_are_a_bijection():
    m, smax = 7, 3
    seen = set()
    for w in range(smax + 1):
        for c in itertools.combinations(range(m), w):
            r = bounded_subset_rank(IndexSet(m, c), smax)
            assert bounded_subset_unrank(r, m, smax) == IndexSet(m, c)
            seen.add(r)
    assert seen == set(range(bounded_subset_count(m, smax)))


class TestPermRank:
    def test_identity(self):
        assert perm_rank(list(range(7))) == 0

    def test_reverse(self):
        assert perm_rank(list(range(6))[::-1]) == factorial(6) - 1

    def test_four_elements_enumeration(self):
        perms = list(itertools.permutations(range(4)))
        for r, q in enumerate(perms):
            assert perm_rank(q) == r
            assert tuple(perm_unrank(r, 4)) == q

    @given(st.permutations(list(range(20))))
    def test_inverse_pair(self, q):
        assert perm_unrank(perm_rank(q), 20) == list(q)

    def test_not_a_permutation(self):
        with pytest.raises(ValidationError):
            perm_rank([0, 0, 1])
