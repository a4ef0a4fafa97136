"""
A two-write code close to capacity
==================================

Round one stores a small subset per block. Round two overwrites each group of
blocks with a coset solution under one Wozencraft matrix, and the group's
seed goes into a few extra cells.
"""

import random

from womcodes import womcode2 as w2
from womcodes.f2linalg import BitVector, IndexSet

rnd = random.Random(1)

# %%
# Parameters: k=8 message bits, b=8 redundancy cells per block, 16 blocks in
# groups of 8, and at most five set cells per block in round one. Then
# 8 * (2^5 - 1) < 2^8, so a good seed is certain to exist for every group.
p = w2.Wom2Params(8, 8, 16, 8, 5)
print("cells:", p.n_cells, "guaranteed:", p.guaranteed)

# %%
# First write.
subsets = [IndexSet.of(p.block, rnd.sample(range(p.block), rnd.randint(0, p.smax))) for _ in range(p.t)]
img1 = w2.encode1(p, subsets)
assert w2.decode1(img1) == subsets
print("after round 1:", img1.cells.weight, "cells set")

# %%
# Second write. Every cell set in round one stays set.
payload = BitVector(p.t * p.k, rnd.getrandbits(p.t * p.k))
img2 = w2.encode2(p, img1, payload)
assert img1.cells <= img2.cells
assert w2.decode2(img2) == payload
print("after round 2:", img2.cells.weight, "cells set")

# %%
# Rate of this parameter set against log2 3.
r = w2.rate(p)
print(f"rate {r.rate:.4f}, gap to capacity {r.gap:.4f}")

# %%
# Best guaranteed choices as k grows. The seed search costs 2^k rank
# computations per group, so the last rows are figures only.
for k, b, smax, g in [(4, 4, 3, 2), (8, 8, 5, 8), (16, 16, 12, 16), (24, 24, 19, 32), (32, 28, 23, 32)]:
    q = w2.Wom2Params(k, b, g, g, smax)
    print(f"k={k:2d} b={b:2d} smax={smax:2d} g={g:2d}  rate {w2.rate(q).rate:.4f}")
