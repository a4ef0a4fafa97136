"""
Writing around stuck cells
==========================

Some cells are frozen at a value only the writer knows. Each chunk of k+b
cells still carries k bits as long as at most b of its cells are frozen.
"""

import random

from womcodes import stuckat
from womcodes.f2linalg import BitVector
from womcodes.wozencraft import WozParams

rnd = random.Random(5)
p = WozParams(6, 3)
chunks = 4

# %%
# Freeze up to b cells per chunk.
frozen = {}
for j in range(chunks):
    for c in rnd.sample(range(p.n), rnd.randint(0, p.b)):
        frozen[j * p.n + c] = rnd.getrandbits(1)
defects = stuckat.DefectPattern.from_dict(chunks * p.n, frozen)
print("frozen cells:", dict(sorted(frozen.items())))

# %%
# Write and read back. The reader only sees the cells and the seeds.
payload = BitVector(chunks * p.k, rnd.getrandbits(chunks * p.k))
img = stuckat.write(p, chunks, defects, payload)
assert stuckat.read(img) == payload
data = img.cells.slice(0, chunks * p.n)
assert all(data[i] == v for i, v in frozen.items())
print("payload:", payload)
print("cells:  ", data)

# %%
# Guaranteed rate as the fraction of frozen cells grows.
for density in (0, 0.2, 1 / 3, 0.4):
    print(f"density {density:.2f}: rate {float(stuckat.defect_capacity(p, density)):.3f}")
