"""
A two-write code without lookup tables
======================================

One fixed matrix ``A`` serves the whole memory. Round one writes every
weight-w subset of an m-cell tuple exactly once, in a chosen order. Round two
writes a payload into each tuple whose subset is good for ``A`` and fills the
rest with ones.
"""

import math
import random

from womcodes import lookupfree as lf

rnd = random.Random(4)

# %%
# Pick the ensemble seed with the most good subsets.
alpha, p = lf.lf_search(6, 3)
print(f"seed {alpha}: {p.sigma_g} of {p.sigma} subsets are good, {p.n_cells} cells")

# %%
# First write: a permutation of the 20 subsets.
perm = list(range(p.sigma))
rnd.shuffle(perm)
img1 = lf.lf_encode1(p, perm)
assert lf.lf_decode1(img1) == perm

# %%
# Second write: one 3-bit vector per good tuple, avoiding A @ 1.
xs = [lf.int_to_payload(p, rnd.randrange(7)) for _ in range(p.sigma_g)]
img2 = lf.lf_encode2(p, img1, xs)
assert lf.lf_decode2(img2) == xs
for t in img2.cells.chunks(6)[:5]:
    print(t)

# %%
# Rate: log2(20!) bits then sigma_g * log2(7) bits over 120 cells.
r = lf.lf_rate(p)
print(f"round bits {r.round_bits[0]:.2f} + {r.round_bits[1]:.2f}, rate {r.rate:.4f}")
print(f"by hand: {(math.log2(math.factorial(20)) + p.sigma_g * math.log2(7)) / 120:.4f}")
