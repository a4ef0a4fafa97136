"""
Rate curves
===========

Two-write capacity, the equal-rate operating point, and the three-write
variants. Writes ``rate_curves.png`` next to this script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from womcodes import rates

# %%
cap = rates.maximize_capacity2()
eq = rates.equal_rate_point()
print(f"two-write max {cap.value:.6f} at p={cap.p:.6f}")
print(f"equal rates at p={eq.p:.4f}, sum rate {eq.value:.4f}")
for v in ("i", "ii", "iii"):
    pt = rates.maximize_rate3(v)
    print(f"three-write {v:>3s}: {pt.value:.4f} at p={pt.p:.4f}")

# %%
ps = np.linspace(0, 1, 401)
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(ps[ps <= 0.5], [rates.capacity2_curve(p) for p in ps[ps <= 0.5]])
ax1.axhline(np.log2(3), ls=":", c="gray")
ax1.plot([cap.p], [cap.value], "o")
ax1.set_xlabel("p")
ax1.set_title("H(p) + 1 - p")
for v in rates.VARIANTS:
    ax2.plot(ps, [rates.rate3(v, p) for p in ps], label=v)
ax2.axhline(2, ls=":", c="gray")
ax2.set_xlabel("p")
ax2.set_title("three-write rate")
ax2.legend()
fig.tight_layout()
out = Path(__file__).with_name("rate_curves.png")
fig.savefig(out, dpi=100)
print("wrote", out)
