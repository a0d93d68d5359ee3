"""Parameter sweeps over |alpha| and location of the phase-variance minimum."""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NoInteriorMinimum, PhasekitError
from .phase import squeezing
from .states import StateSpec, TruncationPolicy, build_state

QUANTITIES = ("var_phi", "var_n", "s_n", "s_phi", "f_gap", "comm")

_REPORT_ATTR = {
    "var_phi": "var_phi",
    "var_n": "var_n",
    "s_n": "s_n",
    "s_phi": "s_phi",
    "f_gap": "f_gap",
    "comm": "comm_mag",
}


@dataclass(frozen=True)
class SweepSpec:
    base: StateSpec
    alpha_values: tuple[float, ...]
    quantities: tuple[str, ...] = ("var_phi",)

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alpha_values)
        if not alphas:
            raise ValueError("alpha_values must be non-empty")
        if any(a < 0 or not math.isfinite(a) for a in alphas):
            raise ValueError("alpha_values must be finite and non-negative")
        if any(b <= a for a, b in zip(alphas, alphas[1:])):
            raise ValueError("alpha_values must be strictly increasing")
        quantities = tuple(dict.fromkeys(self.quantities))
        unknown = [q for q in quantities if q not in QUANTITIES]
        if unknown or not quantities:
            raise ValueError(f"unknown quantities {unknown}; expected a subset of {QUANTITIES}")
        object.__setattr__(self, "alpha_values", alphas)
        object.__setattr__(self, "quantities", quantities)


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    values: dict[str, float | None]
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[SweepRow, ...] = field(default_factory=tuple)

    def column(self, quantity: str) -> tuple[np.ndarray, np.ndarray]:
        """(alphas, values) for rows where ``quantity`` was computed."""
        pairs = [(r.alpha, r.values[quantity]) for r in self.rows
                 if r.values.get(quantity) is not None]
        if not pairs:
            return np.empty(0), np.empty(0)
        a, v = zip(*pairs)
        return np.array(a), np.array(v)

    def to_dict(self) -> dict:
        base = self.spec.base
        return {
            "kind": base.kind,
            "eta": base.eta,
            "phi": base.alpha_phase,
            "ordering": base.ordering,
            "trunc": {"rel_tol": base.trunc.rel_tol,
                      "consecutive": base.trunc.consecutive,
                      "n_max": base.trunc.n_max},
            "quantities": list(self.spec.quantities),
            "rows": [{"alpha": r.alpha, **r.values, "error": r.error} for r in self.rows],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> SweepResult:
        base = StateSpec(data["kind"], 0.0, data["phi"], data["eta"],
                         TruncationPolicy(**data["trunc"]), data["ordering"])
        quantities = tuple(data["quantities"])
        rows = tuple(SweepRow(r["alpha"], {q: r[q] for q in quantities}, r["error"])
                     for r in data["rows"])
        spec = SweepSpec(base, tuple(r.alpha for r in rows), quantities)
        return cls(spec, rows)

    @classmethod
    def from_json(cls, text: str) -> SweepResult:
        return cls.from_dict(json.loads(text))


def _evaluate_row(base: StateSpec, alpha: float, quantities) -> SweepRow:
    values: dict[str, float | None] = dict.fromkeys(quantities)
    try:
        report = squeezing(build_state(base.with_alpha(alpha)))
    except PhasekitError as exc:
        return SweepRow(alpha, values, type(exc).__name__)
    error = None
    for q in quantities:
        try:
            values[q] = float(getattr(report, _REPORT_ATTR[q]))
        except PhasekitError as exc:
            error = error or type(exc).__name__
    return SweepRow(alpha, values, error)


def run_sweep(spec: SweepSpec, workers: int | None = None) -> SweepResult:
    """Evaluate every alpha in ``spec``; per-row failures are recorded, not raised.

    With ``workers`` > 1 rows are computed on a thread pool; the result is
    ordered by alpha either way.
    """
    def task(alpha):
        return _evaluate_row(spec.base, alpha, spec.quantities)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(task, spec.alpha_values))
    else:
        rows = tuple(task(a) for a in spec.alpha_values)
    return SweepResult(spec, rows)


def alpha_range(alpha_min: float, alpha_max: float, steps: int) -> tuple[float, ...]:
    """``steps`` equal intervals from alpha_min to alpha_max inclusive."""
    if steps < 1:
        raise ValueError("steps must be at least 1")
    if not alpha_max > alpha_min:
        raise ValueError("alpha_max must exceed alpha_min")
    return tuple(float(a) for a in np.linspace(alpha_min, alpha_max, steps + 1))


def find_variance_minimum(result: SweepResult) -> tuple[float, float]:
    """Sampled minimum of var_phi refined by a parabola through its neighbours.

    Raises
    ------
    NoInteriorMinimum
        If the smallest sample is the first or last available row.
    """
    alphas, values = result.column("var_phi")
    if len(alphas) < 3:
        raise ValueError("need var_phi on at least three alphas")
    i = int(np.argmin(values))  # first occurrence: ties go to the smaller alpha
    if i == 0 or i == len(alphas) - 1:
        raise NoInteriorMinimum(f"var_phi is smallest at the sweep edge alpha={alphas[i]}")
    x0, x1, x2 = alphas[i - 1:i + 2]
    y0, y1, y2 = values[i - 1:i + 2]
    denom = (x0 - x1) * (x0 - x2) * (x1 - x2)
    a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom
    b = (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / denom
    c = y1 - a * x1 * x1 - b * x1
    if a <= 0:
        return float(x1), float(y1)
    x_star = min(max(-b / (2 * a), x0), x2)
    return float(x_star), float(a * x_star * x_star + b * x_star + c)
