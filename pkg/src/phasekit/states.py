"""Truncated Fock-basis amplitudes for nonlinear coherent states.

Three families are supported, all of the form

    |psi> ∝ sum_n g_n |alpha|^n / sqrt(n!) e^{i n phi} |n>

with the ladder ``g_n`` set by the kind:

* ``"displacement"``: g_n = prod f(i), the state generated by the modified
  displacement operator exp(alpha A^dagger - alpha^* B) acting on |0>;
* ``"eigenstate"``:   g_n = prod 1/f(i), the right eigenstate of the deformed
  annihilation operator A;
* ``"canonical"``:    g_n = 1, the ordinary (Glauber) coherent state.

``f`` is the trapped-ion (Lamb-Dicke) nonlinearity.  Which factors enter the
product depends on where f(N) sits relative to the bosonic operator:

* ``ordering="f_a"`` (default): A = f(N) a, product over i = 0 .. n-1;
* ``ordering="a_f"``:           A = a f(N), product over i = 1 .. n.

The global phase ``phi`` is factored out, so every amplitude is a signed real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import DegenerateNonlinearity, TruncationSaturated
from .special import SignedLogValue, laguerre, laguerre_table, log_factorial

Kind = Literal["displacement", "eigenstate", "canonical"]
Ordering = Literal["f_a", "a_f"]

KINDS = ("displacement", "eigenstate", "canonical")
ORDERINGS = ("f_a", "a_f")


@dataclass(frozen=True)
class TruncationPolicy:
    """When to stop summing the Fock series.

    The series is cut at the first N for which the last ``consecutive`` terms
    each carry less than ``rel_tol`` times the largest squared amplitude seen
    so far, provided none of the following look-ahead terms climbs back above
    that floor (eigenstate ladders can dip and recover near Laguerre zeros).
    The look-ahead spans max(N, 64) terms, at most 128 and n_max/4, at least
    ``consecutive``, and must fit below the hard cap ``n_max``.
    """

    rel_tol: float = 1e-16
    consecutive: int = 5
    n_max: int = 512

    def __post_init__(self):
        if not 0 < self.rel_tol < 1:
            raise ValueError("rel_tol must lie in (0, 1)")
        if self.consecutive < 1:
            raise ValueError("consecutive must be a positive integer")
        if self.n_max < 16:
            raise ValueError("n_max must be at least 16")


@dataclass(frozen=True)
class StateSpec:
    kind: Kind
    alpha_mag: float
    alpha_phase: float = 0.0
    eta: float | None = None
    trunc: TruncationPolicy = field(default_factory=TruncationPolicy)
    ordering: Ordering = "f_a"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.ordering not in ORDERINGS:
            raise ValueError(f"unknown ordering {self.ordering!r}; expected one of {ORDERINGS}")
        if not (self.alpha_mag >= 0 and math.isfinite(self.alpha_mag)):
            raise ValueError("alpha_mag must be finite and non-negative")
        if not -math.pi <= self.alpha_phase < math.pi:
            raise ValueError("alpha_phase must lie in [-pi, pi)")
        if self.kind != "canonical" and not (self.eta is not None and self.eta > 0):
            raise ValueError(f"kind {self.kind!r} needs a positive eta")

    def with_alpha(self, alpha_mag: float) -> StateSpec:
        return StateSpec(self.kind, alpha_mag, self.alpha_phase, self.eta,
                         self.trunc, self.ordering)


@dataclass(frozen=True)
class AmplitudeVector:
    """Normalized signed amplitudes a_0..a_{n_cut}; ``phi`` is the global phase."""

    a: np.ndarray
    n_cut: int
    phi: float
    spec: StateSpec | None = None

    def __post_init__(self):
        a = np.array(self.a, dtype=float)
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def norm_residual(self) -> float:
        return abs(math.fsum(self.a * self.a) - 1.0)


@dataclass(frozen=True)
class NumberMoments:
    mean_n: float
    var_n: float


def nonlinearity(n: int, eta: float) -> float:
    """Trapped-ion nonlinearity f(n) = L_n^1(eta^2) / ((n+1) L_n^0(eta^2))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not eta > 0:
        raise ValueError("eta must be positive")
    x = eta * eta
    return _ratio(n, laguerre(n, 1, x), laguerre(n, 0, x), eta)


def _ratio(n: int, l1: float, l0: float, eta: float) -> float:
    if abs(l0) < 1e-12 * abs(l1) / (n + 1) or (l0 == 0.0):
        raise DegenerateNonlinearity(
            f"L_{n}^0(eta^2) = {l0:.3e} vanishes at eta = {eta!r}; f({n}) is undefined")
    return l1 / ((n + 1) * l0)


def _ladder_steps(spec: StateSpec, n_max: int):
    """Yield (sign, log|g_n|) for n = 0 .. n_max, one step at a time.

    Nonlinearity values are only checked when consumed, so a Laguerre zero
    beyond the truncation point never raises.
    """
    sign, log_g = 1, 0.0
    yield sign, log_g
    if spec.kind == "canonical":
        for _ in range(n_max):
            yield 1, 0.0
        return
    x = spec.eta * spec.eta
    l0 = laguerre_table(n_max, 0, x)
    l1 = laguerre_table(n_max, 1, x)
    shift = 1 if spec.ordering == "f_a" else 0
    for n in range(1, n_max + 1):
        i = n - shift
        f = _ratio(i, l1[i], l0[i], spec.eta)
        if f == 0.0:
            if spec.kind == "eigenstate":
                raise DegenerateNonlinearity(f"f({i}) = 0 exactly; d_n is undefined")
            sign = 0
        if sign == 0:
            yield 0, -math.inf
            continue
        sign *= 1 if f > 0 else -1
        log_g += math.log(abs(f)) if spec.kind == "displacement" else -math.log(abs(f))
        yield sign, log_g


def coefficient_ladder(spec: StateSpec, n_max: int) -> list[SignedLogValue]:
    """Ladder g_0..g_{n_max}: prod f for displacement, prod 1/f for eigenstate."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return [SignedLogValue.from_log(s, lg) for s, lg in _ladder_steps(spec, n_max)]


def build_state(spec: StateSpec) -> AmplitudeVector:
    """Normalized truncated amplitude vector for ``spec``.

    Raises
    ------
    TruncationSaturated
        If the tail test has not passed by ``spec.trunc.n_max``.
    DegenerateNonlinearity
        If a consumed f(i) sits on a Laguerre zero.
    """
    if spec.alpha_mag == 0.0:
        return AmplitudeVector(np.array([1.0]), 0, spec.alpha_phase, spec)

    policy = spec.trunc
    log_alpha = math.log(spec.alpha_mag)
    log_floor = math.log(policy.rel_tol)
    signs, logs = [], []
    running_max = -math.inf
    n_cut = None
    confirmed = False
    for n, (s, lg) in enumerate(_ladder_steps(spec, policy.n_max)):
        lu = lg + n * log_alpha - 0.5 * log_factorial(n) if s else -math.inf
        signs.append(s)
        logs.append(lu)
        running_max = max(running_max, 2 * lu)
        if n_cut is not None:
            # look-ahead: a dip in an oscillating ladder is not convergence
            if 2 * lu >= running_max + log_floor:
                n_cut = None
            elif n >= n_cut + window:
                confirmed = True
                break
            continue
        if n + 1 >= policy.consecutive:
            tail = logs[n + 1 - policy.consecutive:]
            if all(2 * t < running_max + log_floor for t in tail):
                n_cut = n
                window = max(policy.consecutive, min(max(n, 64), 128, policy.n_max // 4))
    if not confirmed:
        n_cut = None
    else:
        del signs[n_cut + 1:], logs[n_cut + 1:]
    if n_cut is None:
        raise TruncationSaturated(
            f"series for {spec.kind} state (|alpha|={spec.alpha_mag}, eta={spec.eta}) "
            f"did not converge by n_max={policy.n_max}")

    logs_arr = np.array(logs)
    top = np.max(logs_arr)
    u = np.array(signs, dtype=float) * np.exp(logs_arr - top)
    a = u / math.sqrt(math.fsum(u * u))
    return AmplitudeVector(a, n_cut, spec.alpha_phase, spec)


def number_moments(state: AmplitudeVector) -> NumberMoments:
    p = state.a * state.a
    n = np.arange(len(p), dtype=float)
    mean = math.fsum(n * p)
    var = math.fsum(n * n * p) - mean * mean
    if var < 0:
        # rounding only; anything larger means the state was not normalized
        if var < -1e-12:
            raise ValueError(f"negative number variance {var!r}")
        var = 0.0
    return NumberMoments(mean, var)
