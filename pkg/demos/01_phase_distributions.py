# %% [markdown]
# Phase distributions of the displacement-type state
#
# Pegg-Barnett, Husimi Q and Wigner angular marginals for the trapped-ion
# nonlinearity at eta = 0.8, then the Pegg-Barnett peak as eta grows.

# %%
import numpy as np

from phasekit import StateSpec, build_state, pegg_barnett, quasi_distribution
from _plotting import plt, save

ETA = 0.8

# %% Three distributions at two amplitudes
panels = {}
for alpha in (0.37, 1.0):
    state = build_state(StateSpec("displacement", alpha, eta=ETA))
    pb = pegg_barnett(state, 1024)
    q = quasi_distribution(state, 1024, "husimi_q")
    w = quasi_distribution(state, 1024, "wigner")
    panels[alpha] = (pb, q, w)
    print(f"|alpha| = {alpha}: n_cut = {state.n_cut}")
    for dist in (pb, q, w):
        peak = dist.peak_locations()
        print(f"  {dist.kind:13s} max {dist.values.max():.4f}  peaks at {np.round(peak, 3)}")

# %% The Pegg-Barnett peak moves off theta = 0 as eta grows
for eta in (0.2, 0.5, 0.8, 1.1):
    dist = pegg_barnett(build_state(StateSpec("displacement", 1.0, eta=eta)), 1024)
    print(f"eta = {eta}: P_PB peak at theta = {dist.peak_locations()[0]:.3f}")

# %%
if plt is not None:
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    for ax, (alpha, dists) in zip(axes, panels.items()):
        for dist, label in zip(dists, ("Pegg-Barnett", "Husimi Q", "Wigner")):
            ax.plot(dist.thetas, dist.values, label=label)
        ax.set_title(f"eta = {ETA}, |alpha| = {alpha}")
        ax.set_xlabel("theta")
    axes[0].set_ylabel("P(theta)")
    axes[0].legend()
    save(fig, "phase_distributions.png")
