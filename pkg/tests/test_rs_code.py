import itertools

import pytest

from womcodes import rs_code
from womcodes.errors import ValidationError
from womcodes.rs_code import decode, encode1, encode2, triplet, triplet_str, weight


def test_first_round_table():
    assert [triplet_str(encode1(s)) for s in range(4)] == ["000", "001", "010", "100"]


@pytest.mark.parametrize("t,s,out", [("010", 1, "110"), ("000", 1, "001"), ("001", 0, "111")])
def test_second_round_examples(t, s, out):
    assert triplet_str(encode2(triplet(t), s)) == out


@pytest.mark.parametrize("t,s", [("110", 1), ("111", 0), ("000", 0), ("101", 2), ("011", 3)])
def test_decode(t, s):
    assert decode(triplet(t)) == s


def test_decode_is_total():
    assert sorted(decode(t) for t in range(8)) == [0, 0, 1, 1, 2, 2, 3, 3]


def test_exhaustive_transitions():
    for s1, s2 in itertools.product(range(4), repeat=2):
        t1 = encode1(s1)
        t2 = encode2(t1, s2)
        assert t2 & t1 == t1
        assert decode(t2) == s2
        # minimal weight among all legal dominating triplets
        legal = [u for u in range(8) if u & t1 == t1 and decode(u) == s2]
        assert weight(t2) == min(weight(u) for u in legal)
        if s1 != 0 and s2 == 0:
            assert weight(t2) == 3
        else:
            assert weight(t2) <= 2
        if s1 == 0:
            assert weight(t2) <= 1
        if s1 == s2:
            assert t2 == t1


def test_illegal_second_round_state():
    with pytest.raises(ValidationError):
        encode2(triplet("110"), 0)


def test_image_roundtrip():
    img = rs_code.write1([0, 1, 2, 3, 3])
    assert rs_code.read(img) == [0, 1, 2, 3, 3]
    img2 = rs_code.write2(img, [1, 0, 3, 2, 3])
    assert img2.round == 2 and img.cells <= img2.cells
    assert rs_code.read(img2) == [1, 0, 3, 2, 3]
