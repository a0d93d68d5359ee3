"""Optional matplotlib helper shared by the demo scripts."""

from pathlib import Path

OUT = Path(__file__).with_name("out")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:  # the demos still print their numbers
    plt = None


def save(fig, name):
    OUT.mkdir(exist_ok=True)
    path = OUT / name
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    print(f"wrote {path}")
