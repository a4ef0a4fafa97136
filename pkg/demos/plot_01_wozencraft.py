"""
The Wozencraft ensemble
=======================

Every element ``alpha`` of GF(2^k) names a k x (k+b) matrix ``[I | pi_b(alpha x^i)]``.
Most of these matrices keep full rank when a few columns are deleted, which is
what the write-once codes exploit.
"""

# %%
# A small field and one ensemble member.
from womcodes.f2k import FieldElement, irreducible_poly
from womcodes.wozencraft import WozParams, count_bad, count_spanning, ensemble_matrix, find_good_matrix, is_good
from womcodes.f2linalg import BitVector, IndexSet

print("modulus for k=4:", irreducible_poly(4))
a = FieldElement(4, 0b0110)
print("alpha^2 =", a * a)

p = WozParams(4, 2)
A = ensemble_matrix(p, a)
for row in A.to_lists():
    print("".join(map(str, row)))

# %%
# Counting: a vector whose first k coordinates are not all zero lies in the row
# space of exactly 2^(k-b) members. A vector that is zero there lies in none,
# since the identity block forces the combination to be empty.
y = BitVector.from_str("101101")
print("spanning members:", count_spanning(p, y), "expected", 2 ** (p.k - p.b))
print("zero head:", count_spanning(p, BitVector.from_str("000010")))

# %%
# Deleting columns. With |S| <= b most seeds survive; once |S| grows past b the
# bad fraction climbs quickly.
for size in range(p.n - p.k + 2):
    S = IndexSet.of(p.n, range(size))
    print(f"|S|={size}: bad seeds {count_bad(p, S)} of {1 << p.k}")

# %%
# The writer needs one seed good for a whole group of sets.
sets = [IndexSet.of(6, [0]), IndexSet.of(6, [3, 5])]
alpha = find_good_matrix(p, sets)
print("first good seed:", int(alpha), all(is_good(p, alpha, S) for S in sets))
