# %% [markdown]
# Wigner angular marginal: three coefficient rules
#
# The radial integral of the Wigner function of |n><k| has a closed form only
# when n - k is even.  "gamma" extends that form to odd n - k, "strict" drops
# those pairs, and "exact" evaluates the true finite sum.  Only "exact" is the
# marginal of the real Wigner function, and it can dip below zero.

# %%
import numpy as np

from phasekit import StateSpec, build_state, quasi_coefficient, quasi_distribution
from _plotting import plt, save

# %%
for n, k in [(2, 0), (2, 1), (3, 0), (5, 2)]:
    row = {m: quasi_coefficient(n, k, "wigner", m) for m in ("gamma", "strict", "exact")}
    print(f"F_W({n},{k}): " + "  ".join(f"{m}={v:.6f}" for m, v in row.items()))

# %%
state = build_state(StateSpec("displacement", 1.0, eta=0.8))
dists = {m: quasi_distribution(state, 1024, "wigner", m) for m in ("gamma", "strict", "exact")}
for mode, dist in dists.items():
    print(f"{mode:6s} min {dist.values.min(): .4f}  at theta=0 {dist.values[512]: .4f}")

# %%
if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for mode, dist in dists.items():
        ax.plot(dist.thetas, dist.values, label=mode)
    ax.axhline(0, color="grey", lw=0.8)
    ax.set_xlabel("theta")
    ax.set_ylabel("P_W(theta)")
    ax.legend()
    save(fig, "wigner_modes.png")
