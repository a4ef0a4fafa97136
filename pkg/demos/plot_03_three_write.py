"""
Three writes on quaternary symbols
==================================

Rounds one and two use the Rivest-Shamir triplet code. Round three treats the
set cells as stuck at one and packs payload bits into whatever chunks still
admit a good Wozencraft matrix.
"""

import random

from womcodes import rates
from womcodes import womcode3 as w3
from womcodes.f2linalg import BitVector

rnd = random.Random(3)
m = 30

# %%
# The variants differ only in how round two relabels its word before writing.
for variant in w3.VARIANTS:
    p_opt = 0.25 if variant == "basic" else rates.maximize_rate3(variant).p
    p = w3.Wom3Params(m, round(4 * p_opt * m), variant, 4, 2)
    w1 = [0] * p.z + [rnd.randrange(4) for _ in range(4 * m - p.z)]
    rnd.shuffle(w1)
    w2 = [s for s in range(4) for _ in range(m)]
    rnd.shuffle(w2)

    img1 = w3.write1(p, w1)
    img2 = w3.write2(p, img1, w2)
    cap = w3.capacity3(img2)
    bits = BitVector(cap, rnd.getrandbits(cap))
    img3, written = w3.write3(p, img2, bits)

    assert w3.read1(img1) == w1 and w3.read2(img2) == w2 and w3.read3(img3) == bits
    print(f"{variant:5s} z={p.z:3d} weight {w3.main_weight(p, img2):3d} <= {float(p.weight_bound()):6.1f}"
          f"  round-3 bits {written:3d}  rate {w3.rate(p, written).rate:.3f}")

# %%
# Round two of ImpII swaps 0 with the symbol that is rarest where round one
# wrote something, so fewer triplets need all three cells.
w1, w2 = [1, 1, 1, 0], [2, 0, 0, 1]
r = w3.choose_relabel("ii", w1, w2)
print("alpha =", r.alpha, "written word", r.apply(w2))
