# %% [markdown]
# Number-phase squeezing for both nonlinear families
#
# S_N < 0 marks number squeezing and S_phi < 0 phase squeezing; both are
# measured against the Pegg-Barnett commutator.  F is the gap above the
# uncertainty floor.  Eigenstate-type series stop converging past
# |alpha| ~ 1.1 at eta = 0.8, so those rows carry an error instead.  Near
# |alpha| = 0.4 the displacement-type commutator passes through zero and both
# ratios spike.

# %%
from phasekit import StateSpec, SweepSpec, alpha_range, run_sweep
from _plotting import plt, save

QUANTITIES = ("s_n", "s_phi", "f_gap")
alphas = alpha_range(0.0, 2.0, 40)
results = {kind: run_sweep(SweepSpec(StateSpec(kind, 0.0, eta=0.8), alphas, QUANTITIES))
           for kind in ("displacement", "eigenstate")}

# %%
print(f"{'alpha':>6} | {'disp S_N':>10} {'disp S_phi':>10} {'disp F':>8} | "
      f"{'eig S_N':>10} {'eig S_phi':>10} {'eig F':>8}")
for rd, re in zip(results["displacement"].rows, results["eigenstate"].rows):
    cells = []
    for row in (rd, re):
        cells.append(" ".join(f"{row.values[q]:10.3f}" if row.values[q] is not None else f"{'-':>10}"
                              for q in QUANTITIES))
    print(f"{rd.alpha:6.2f} | {cells[0]} | {cells[1]}")

# %%
if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    for ax, q in zip(axes, QUANTITIES):
        for kind, result in results.items():
            ax.plot(*result.column(q), marker=".", label=kind)
        ax.axhline(0, color="grey", lw=0.8)
        ax.set_xlabel("|alpha|")
        ax.set_title(q)
    axes[0].set_ylim(-1.5, 5)
    axes[1].set_ylim(-1.5, 20)
    axes[0].legend()
    save(fig, "squeezing.png")
