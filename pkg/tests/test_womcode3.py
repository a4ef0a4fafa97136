import itertools
from fractions import Fraction

import pytest

from womcodes import rs_code
from womcodes import womcode3 as w3
from womcodes.errors import ValidationError, WriteOnceViolation
from womcodes.f2linalg import BitVector
from womcodes.image import MemoryImage, Scheme
from womcodes.ranking import perm_rank


def trip(img, i):
    return rs_code.triplet_str(img.cells.slice(3 * i, 3 * i + 3).bits)


def random_w1(rnd, p):
    w = [0] * p.z + [rnd.randrange(4) for _ in range(4 * p.m - p.z)]
    rnd.shuffle(w)
    return w


def random_w2(rnd, m):
    w = [s for s in range(4) for _ in range(m)]
    rnd.shuffle(w)
    return w


def impiii_ok(p, w1, w2, r):
    I = [i for i, s in enumerate(w1) if s]
    u = r.apply(w2)
    J = [i for i in I if w2[i] != r.alpha]
    i0 = w3.zeros_on_support(w1, u)
    ieq = w3.matches(w1, u)
    return i0 <= (1 - p.p) * p.m and ieq >= -(-len(J) // 3)


class TestParams:
    def test_layout(self):
        p = w3.Wom3Params(6, 11, "iii", 5, 3)
        assert (p.n_main, p.n_aux, p.n_chunks) == (72, 5, 9)
        assert p.n_cells == 72 + 5 + 9 * 6

    def test_aux_by_variant(self):
        assert [w3.Wom3Params(1, 1, v, 2, 1).n_aux for v in w3.VARIANTS] == [0, 0, 2, 5]

    def test_tuple_roundtrip(self):
        for v in w3.VARIANTS:
            p = w3.Wom3Params(3, 5, v, 4, 2)
            assert w3.Wom3Params.from_tuple(p.as_tuple()) == p

    @pytest.mark.parametrize("args", [(0, 0, "i", 2, 1), (1, 5, "i", 2, 1), (1, 1, "iv", 2, 1), (1, 1, "i", 2, 3)])
    def test_rejects(self, args):
        with pytest.raises(ValidationError):
            w3.Wom3Params(*args)

    def test_bounds_are_exact_rationals(self):
        p = w3.Wom3Params(6, 11, "iii", 4, 2)
        assert p.weight_bound() == (8 - 5 * Fraction(11, 24)) * 6
        assert w3.Wom3Params(5, 5, "basic", 4, 2).weight_bound() == 40
        assert w3.Wom3Params(5, 8, "i", 4, 2).weight_bound() == 45 - 8
        assert w3.Wom3Params(5, 10, "ii", 4, 2).weight_bound() == (9 - 6 * Fraction(1, 2)) * 5


class TestRoundOne:
    def test_table_per_symbol(self):
        img = w3.write1(w3.Wom3Params(1, 1, "basic", 4, 2), [0, 1, 2, 3])
        assert [trip(img, i) for i in range(4)] == ["000", "001", "010", "100"]
        assert img.cells.slice(12, img.cells.length).weight == 0
        assert w3.read1(img) == [0, 1, 2, 3]

    def test_all_zero(self):
        p = w3.Wom3Params(2, 8, "ii", 4, 2)
        img = w3.write1(p, [0] * 8)
        assert img.cells.weight == 0 and img.round == 1

    def test_zero_count_enforced(self):
        with pytest.raises(ValidationError):
            w3.write1(w3.Wom3Params(1, 2, "i", 4, 2), [0, 1, 2, 3])

    def test_roundtrip(self, rng):
        for v in w3.VARIANTS:
            p = w3.Wom3Params(3, 5, v, 4, 2)
            w = random_w1(rng, p)
            assert w3.read1(w3.write1(p, w)) == w

    def test_bad_symbols(self):
        p = w3.Wom3Params(1, 0, "i", 4, 2)
        with pytest.raises(ValidationError):
            w3.write1(p, [0, 1, 2, 4])
        with pytest.raises(ValidationError):
            w3.write1(p, [0, 1, 2])


class TestTransforms:
    def test_impii_example(self):
        w1, w2 = [1, 1, 1, 0], [2, 0, 0, 1]
        r = w3.choose_relabel("ii", w1, w2)
        assert r.alpha == 1
        assert r.apply(w2) == [2, 1, 1, 0]
        assert r.invert(r.apply(w2)) == w2

    def test_least_frequent_tie_breaks_low(self):
        assert w3.least_frequent_on([2, 0, 0, 1], [0, 1, 2]) == 1
        assert w3.least_frequent_on([0, 1, 2, 3], [0, 1, 2, 3]) == 0

    def test_plain_variants_identity(self):
        for v in ("basic", "i"):
            assert w3.choose_relabel(v, [1, 2, 3, 0], [3, 2, 1, 0]).perm == (0, 1, 2, 3)

    def test_impiii_sends_alpha_to_zero(self, rng):
        for _ in range(200):
            w1 = [rng.randrange(4) for _ in range(8)]
            w2 = random_w2(rng, 2)
            r = w3.choose_relabel("iii", w1, w2)
            assert r.perm[r.alpha] == 0
            assert r.alpha == w3.least_frequent_on(w2, [i for i, s in enumerate(w1) if s])

    def test_impiii_exhaustive_choice(self, rng):
        # brute force over all 24 permutations with the stated tie-break
        for _ in range(200):
            w1 = [rng.randrange(4) for _ in range(8)]
            w2 = random_w2(rng, 2)
            r = w3.choose_relabel("iii", w1, w2)
            cands = [q for q in itertools.permutations(range(4)) if q[r.alpha] == 0]
            best = max(w3.matches(w1, [q[s] for s in w2]) for q in cands)
            first = min(perm_rank(q) for q in cands if w3.matches(w1, [q[s] for s in w2]) == best)
            assert perm_rank(r.perm) == first

    def test_impiii_identity_when_w2_copies_w1(self):
        w1 = [1, 2, 3, 0, 1, 2, 3, 0]
        w2 = [1, 2, 3, 0, 3, 1, 2, 0]
        r = w3.choose_relabel("iii", w1, w2)
        assert r.alpha == 0
        assert r.perm == (0, 1, 2, 3)

    def test_impiii_conditions(self, rng):
        for m in (1, 2, 6):
            for z in range(0, 4 * m + 1):
                p = w3.Wom3Params(m, z, "iii", 4, 2)
                for _ in range(20):
                    w1, w2 = random_w1(rng, p), random_w2(rng, m)
                    assert impiii_ok(p, w1, w2, w3.choose_relabel("iii", w1, w2))


class TestRoundTwo:
    def test_basic_example(self):
        p = w3.Wom3Params(1, 1, "basic", 4, 2)
        img = w3.write2(p, w3.write1(p, [0, 1, 2, 3]), [1, 0, 3, 2])
        assert [trip(img, i) for i in range(4)] == ["001", "111", "011", "101"]
        assert w3.main_weight(p, img) == 8 == p.weight_bound()
        assert w3.read2(img) == [1, 0, 3, 2]

    def test_requires_equidistributed(self):
        p = w3.Wom3Params(1, 1, "ii", 4, 2)
        img = w3.write1(p, [1, 1, 1, 0])
        with pytest.raises(ValidationError):
            w3.write2(p, img, [2, 0, 0, 1])

    def test_round_order(self):
        p = w3.Wom3Params(1, 1, "basic", 4, 2)
        img = w3.write1(p, [0, 1, 2, 3])
        with pytest.raises(ValidationError):
            w3.read2(img)
        with pytest.raises(ValidationError):
            w3.write2(p, w3.write2(p, img, [0, 1, 2, 3]), [0, 1, 2, 3])

    def test_impiii_bad_aux(self):
        p = w3.Wom3Params(1, 1, "iii", 4, 2)
        img = w3.write2(p, w3.write1(p, [0, 1, 2, 3]), [0, 1, 2, 3])
        cells = BitVector(img.cells.length, img.cells.bits | (0b11111 << 12))
        with pytest.raises(ValidationError):
            w3.read2(MemoryImage(Scheme.WOM3, 2, img.params, cells))

    @pytest.mark.parametrize("variant", w3.VARIANTS)
    def test_roundtrip_and_bound(self, variant, rng):
        for m in (1, 3, 6):
            for z in (m, 2 * m, 4 * m - 1):
                p = w3.Wom3Params(m, z, variant, 4, 2)
                for _ in range(10):
                    w1, w2 = random_w1(rng, p), random_w2(rng, m)
                    img = w3.write2(p, w3.write1(p, w1), w2)
                    assert w3.read2(img) == w2
                    assert w3.main_weight(p, img) <= p.weight_bound()

    def test_exhaustive_m1(self):
        # every legal (w1, w2) pair at m=1, every variant and z
        perms = list(itertools.permutations(range(4)))
        for variant in w3.VARIANTS:
            for z in range(5):
                p = w3.Wom3Params(1, z, variant, 4, 2)
                for w1 in itertools.product(range(4), repeat=4):
                    if w1.count(0) < z:
                        continue
                    img1 = w3.write1(p, list(w1))
                    for w2 in perms:
                        img = w3.write2(p, img1, list(w2))
                        assert w3.read2(img) == list(w2)
                        assert w3.main_weight(p, img) <= p.weight_bound()


class TestRoundThree:
    def _round2(self, rng, variant="iii", m=6, z=11, k=4, b=2):
        p = w3.Wom3Params(m, z, variant, k, b)
        return p, w3.write2(p, w3.write1(p, random_w1(rng, p)), random_w2(rng, m))

    def test_capacity_all_zero(self):
        p = w3.Wom3Params(2, 0, "i", 4, 2)
        img = MemoryImage(Scheme.WOM3, 2, p.as_tuple(), BitVector.zeros(p.n_cells))
        assert w3.capacity3(img) == p.k * p.n_chunks

    def test_capacity_all_ones(self):
        p = w3.Wom3Params(2, 0, "i", 4, 2)
        cells = BitVector(p.n_cells, (1 << p.n_main) - 1)
        assert w3.capacity3(MemoryImage(Scheme.WOM3, 2, p.as_tuple(), cells)) == 0

    def test_light_chunks_always_usable(self, rng):
        # a chunk with at most b ones is always usable
        p = w3.Wom3Params(2, 0, "i", 4, 2)
        for _ in range(50):
            bits = 0
            for j in range(p.n_chunks):
                for c in rng.sample(range(6), rng.randint(0, 2)):
                    bits |= 1 << (6 * j + c)
            img = MemoryImage(Scheme.WOM3, 2, p.as_tuple(), BitVector(p.n_cells, bits))
            assert w3.usable_chunks(p, img) == list(range(p.n_chunks))

    def test_empty_payload(self, rng):
        p, img = self._round2(rng)
        out, written = w3.write3(p, img, BitVector.zeros(0))
        assert written == 0 and out.round == 3
        side = p.n_main + p.n_aux
        assert out.cells.slice(0, side) == img.cells.slice(0, side)
        assert out.cells.slice(side, side + p.n_chunks).weight == p.n_chunks
        assert w3.read3(out).length == 0

    def test_capacity_is_achieved(self, rng):
        for variant in w3.VARIANTS:
            for _ in range(5):
                p, img = self._round2(rng, variant)
                cap = w3.capacity3(img)
                payload = BitVector(cap, rng.getrandbits(cap))
                out, written = w3.write3(p, img, payload)
                assert written == cap
                assert w3.read3(out) == payload

    def test_too_long(self, rng):
        p, img = self._round2(rng)
        cap = w3.capacity3(img)
        with pytest.raises(ValidationError):
            w3.write3(p, img, BitVector.zeros(cap + 1))

    def test_partial_chunk_padded(self, rng):
        p, img = self._round2(rng)
        payload = BitVector.from_str("101")
        out, written = w3.write3(p, img, payload)
        assert written == p.k
        assert w3.read3(out) == BitVector.from_str("1010")

    def test_read3_ignores_other_cells(self, rng):
        # leftover main cells and aux cells do not affect round-3 decoding
        p, img = self._round2(rng, "iii", m=6, z=11, k=5, b=2)
        cap = w3.capacity3(img)
        payload = BitVector(cap, rng.getrandbits(cap))
        out, _ = w3.write3(p, img, payload)
        used = p.n_chunks * (p.k + p.b)
        for _ in range(20):
            noise = 0
            for c in list(range(used, p.n_main + p.n_aux)):
                noise |= rng.getrandbits(1) << c
            fuzzed = MemoryImage(Scheme.WOM3, 3, out.params, BitVector(out.cells.length, out.cells.bits | noise))
            assert w3.read3(fuzzed) == payload

    def test_write_once_across_rounds(self, rng):
        for variant in w3.VARIANTS:
            p = w3.Wom3Params(6, 11, variant, 4, 2)
            i1 = w3.write1(p, random_w1(rng, p))
            i2 = w3.write2(p, i1, random_w2(rng, 6))
            i3, _ = w3.write3(p, i2, BitVector(8, rng.getrandbits(8)))
            assert i1.cells <= i2.cells <= i3.cells
            with pytest.raises(WriteOnceViolation):
                i3.rewrite(i1.cells)


class TestRate:
    def test_components(self):
        p = w3.Wom3Params(1, 1, "basic", 4, 2)
        r = w3.rate(p, 8)
        assert r.round_bits[2] == 8.0
        assert r.n_cells == p.n_cells
        assert r.rate == pytest.approx(sum(r.round_bits) / p.n_cells)

    def test_first_round_counts(self):
        # 4-symbol words with at least one zero: 4^4 - 3^4
        import math
        p = w3.Wom3Params(1, 1, "basic", 4, 2)
        assert w3.rate(p, 0).round_bits[0] == pytest.approx(math.log2(256 - 81))
        assert w3.rate(p, 0).round_bits[1] == pytest.approx(math.log2(24))
