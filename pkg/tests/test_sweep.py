import math

import numpy as np
import pytest

from phasekit import (
    NoInteriorMinimum,
    StateSpec,
    SweepResult,
    SweepRow,
    SweepSpec,
    alpha_range,
    find_variance_minimum,
    run_sweep,
)

DISP = StateSpec("displacement", 0.0, eta=0.8)


def synthetic(alphas, values):
    spec = SweepSpec(DISP, tuple(alphas), ("var_phi",))
    rows = tuple(SweepRow(a, {"var_phi": v}) for a, v in zip(alphas, values))
    return SweepResult(spec, rows)


def test_vacuum_row():
    result = run_sweep(SweepSpec(DISP, (0.0,), ("var_phi",)))
    assert len(result.rows) == 1
    assert result.rows[0].values["var_phi"] == pytest.approx(math.pi ** 2 / 3, abs=1e-12)
    assert result.rows[0].error is None


def test_vacuum_row_records_degenerate_commutator():
    result = run_sweep(SweepSpec(DISP, (0.0, 0.5), ("s_phi", "var_n")))
    first, second = result.rows
    assert first.error == "DegenerateCommutator"
    assert first.values["s_phi"] is None
    assert first.values["var_n"] == 0.0
    assert second.error is None and second.values["s_phi"] is not None


def test_build_failure_row():
    spec = SweepSpec(StateSpec("eigenstate", 0.0, eta=0.8), (0.5, 1.5), ("var_phi",))
    ok, bad = run_sweep(spec).rows
    assert ok.error is None
    assert bad.error == "TruncationSaturated"
    assert bad.values == {"var_phi": None}


def test_displacement_variance_is_v_shaped():
    result = run_sweep(SweepSpec(DISP, alpha_range(0.05, 2.0, 39), ("var_phi",)))
    alphas, values = result.column("var_phi")
    assert len(alphas) == 40
    i = int(np.argmin(values))
    assert 0 < i < len(values) - 1
    assert np.all(np.diff(values[:i + 1]) < 0)
    assert values[-1] > values[i]


def test_variance_minimum_location():
    result = run_sweep(SweepSpec(DISP, alpha_range(0.05, 2.0, 39), ("var_phi",)))
    alpha_star, var_star = find_variance_minimum(result)
    assert alpha_star == pytest.approx(0.37, abs=0.05)
    assert var_star <= min(result.column("var_phi")[1]) + 1e-12


def test_parabola_minimum():
    alphas = np.linspace(0.0, 2.0, 21)
    result = synthetic(alphas, (alphas - 1.0) ** 2 + 2)
    x, y = find_variance_minimum(result)
    assert x == pytest.approx(1.0, abs=0.1 ** 2)
    assert y == pytest.approx(2.0, abs=1e-12)
    shifted = synthetic(alphas, (alphas - 1.03) ** 2 + 2)
    assert find_variance_minimum(shifted)[0] == pytest.approx(1.03, abs=1e-12)


def test_refinement_stays_in_bracket():
    rng = np.random.default_rng(7)
    alphas = np.linspace(0.0, 1.0, 11)
    for _ in range(200):
        values = rng.normal(size=11)
        try:
            x, _ = find_variance_minimum(synthetic(alphas, values))
        except NoInteriorMinimum:
            continue
        i = int(np.argmin(values))
        assert alphas[i - 1] <= x <= alphas[i + 1]


def test_ties_go_to_smaller_alpha():
    alphas = [0.0, 1.0, 2.0, 3.0, 4.0]
    x, _ = find_variance_minimum(synthetic(alphas, [3.0, 1.0, 2.0, 1.0, 3.0]))
    assert 0.0 <= x <= 2.0


def test_monotone_series_has_no_interior_minimum():
    alphas = np.linspace(0.0, 1.0, 6)
    with pytest.raises(NoInteriorMinimum):
        find_variance_minimum(synthetic(alphas, alphas))
    with pytest.raises(NoInteriorMinimum):
        find_variance_minimum(synthetic(alphas, -alphas))
    with pytest.raises(ValueError):
        find_variance_minimum(synthetic([0.0, 1.0], [1.0, 0.0]))


def test_determinism_and_workers():
    spec = SweepSpec(DISP, alpha_range(0.0, 1.5, 15), ("var_phi", "s_n", "f_gap"))
    serial = run_sweep(spec)
    assert run_sweep(spec).to_json() == serial.to_json()
    threaded = run_sweep(spec, workers=4)
    assert threaded.to_json() == serial.to_json()
    assert [r.alpha for r in threaded.rows] == list(spec.alpha_values)


def test_row_independence():
    alphas = alpha_range(0.1, 1.0, 9)
    full = run_sweep(SweepSpec(DISP, alphas, ("var_phi", "comm")))
    dropped = tuple(a for k, a in enumerate(alphas) if k != 4)
    partial = run_sweep(SweepSpec(DISP, dropped, ("var_phi", "comm")))
    remaining = [r for k, r in enumerate(full.rows) if k != 4]
    assert [r.values for r in partial.rows] == [r.values for r in remaining]


def test_json_round_trip():
    spec = SweepSpec(DISP, (0.0, 0.3, 0.9), ("var_phi", "s_phi", "f_gap"))
    result = run_sweep(spec)
    again = SweepResult.from_json(result.to_json())
    assert again.rows == result.rows
    assert again.spec.base.eta == 0.8
    assert again.to_json() == result.to_json()


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(DISP, (), ("var_phi",))
    with pytest.raises(ValueError):
        SweepSpec(DISP, (0.5, 0.2), ("var_phi",))
    with pytest.raises(ValueError):
        SweepSpec(DISP, (-0.1, 0.2), ("var_phi",))
    with pytest.raises(ValueError):
        SweepSpec(DISP, (0.1,), ("entropy",))
    assert SweepSpec(DISP, (0.1,), ("s_n", "s_n")).quantities == ("s_n",)


def test_alpha_range():
    assert alpha_range(0, 2, 40)[1] == 0.05
    assert len(alpha_range(0, 2, 40)) == 41
    with pytest.raises(ValueError):
        alpha_range(0, 2, 0)
    with pytest.raises(ValueError):
        alpha_range(1, 1, 3)
