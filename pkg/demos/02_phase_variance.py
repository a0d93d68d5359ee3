# %% [markdown]
# Phase variance against |alpha|
#
# The variance starts at the uniform value pi^2/3, dips, then climbs again.
# The dip is located by a parabola through the smallest sample.

# %%
import math

from phasekit import StateSpec, SweepSpec, alpha_range, find_variance_minimum, run_sweep
from _plotting import plt, save

# %%
spec = SweepSpec(StateSpec("displacement", 0.0, eta=0.8), alpha_range(0.0, 2.0, 200), ("var_phi",))
result = run_sweep(spec, workers=4)
alphas, var_phi = result.column("var_phi")
alpha_star, var_star = find_variance_minimum(result)
print(f"var_phi(0) = {var_phi[0]:.6f}  (pi^2/3 = {math.pi ** 2 / 3:.6f})")
print(f"minimum var_phi = {var_star:.4f} at |alpha| = {alpha_star:.3f}")

# %% The printed ladder convention puts the dip elsewhere
other = run_sweep(SweepSpec(StateSpec("displacement", 0.0, eta=0.8, ordering="a_f"),
                            alpha_range(0.0, 2.0, 200), ("var_phi",)))
print(f"ordering a_f: minimum at |alpha| = {find_variance_minimum(other)[0]:.3f}")

# %%
if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(alphas, var_phi, label="A = f(N) a")
    ax.plot(*other.column("var_phi"), "--", label="A = a f(N)")
    ax.axvline(alpha_star, color="grey", lw=0.8)
    ax.set_xlabel("|alpha|")
    ax.set_ylabel("Var(phi)")
    ax.legend()
    save(fig, "phase_variance.png")
