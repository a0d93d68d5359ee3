"""Phase distributions, phase variance and number-phase squeezing.

All distributions are functions of the relative angle theta - phi on the
window [-pi, pi); the Pegg-Barnett reference angle theta_0 maps to the -pi
edge.  Because amplitudes are real after factoring out phi, every
distribution is even in theta.

The double sums over n > k are grouped by lag d = n - k,

    P(theta) = (1/2pi) [1 + 2 sum_d c_d cos(d theta)],
    c_d      = sum_k a_{k+d} a_k F(k+d, k),

with F = 1 for Pegg-Barnett.  The squared-modulus form |sum a_n e^{in theta}|^2
and the finite-s phase-state projection are kept as independent routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np
from scipy.integrate import simpson

from .errors import DegenerateCommutator
from .special import log_factorial, log_gamma
from .states import AmplitudeVector, StateSpec, number_moments

DistKind = Literal["pegg_barnett", "husimi_q", "wigner", "finite_s"]
WignerMode = Literal["gamma", "strict", "exact"]

DEFAULT_GRID = 1024
COMM_THRESHOLD = 1e-10
WIGNER_MODES = ("gamma", "strict", "exact")


@dataclass(frozen=True)
class PhaseDistribution:
    kind: DistKind
    thetas: np.ndarray
    values: np.ndarray
    state_ref: StateSpec | None = None

    def __post_init__(self):
        for name in ("thetas", "values"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def spacing(self) -> float:
        return 2 * math.pi / len(self.thetas)

    def normalization(self) -> float:
        """Periodic trapezoid integral over the window (exact for G > 2 n_cut)."""
        return math.fsum(self.values) * self.spacing

    def symmetry_error(self) -> float:
        g = len(self.values)
        mirror = self.values[(g - np.arange(g)) % g]
        return float(np.max(np.abs(self.values - mirror)))

    def peak_locations(self) -> np.ndarray:
        """Local maxima on [0, pi), highest first.

        theta = 0 counts when it is not below its neighbour; the pi edge of
        the window is excluded.
        """
        v = self.values
        g = len(v)
        idx = np.arange(g)
        is_peak = (v >= v[(idx - 1) % g]) & (v >= v[(idx + 1) % g])
        half = (self.thetas >= 0) & (idx + 1 < g)
        cand = idx[is_peak & half]
        return self.thetas[cand[np.argsort(-v[cand], kind="stable")]]


@dataclass(frozen=True)
class SqueezingReport:
    """Number-phase statistics of one state.

    ``s_n`` and ``s_phi`` raise :class:`DegenerateCommutator` when the
    commutator expectation is below ``COMM_THRESHOLD`` (e.g. the vacuum);
    ``f_gap`` is always defined.
    """

    mean_n: float
    var_n: float
    var_phi: float
    comm_mag: float
    f_gap: float

    def _require_commutator(self):
        if self.comm_mag < COMM_THRESHOLD:
            raise DegenerateCommutator(
                f"|<[N, Phi]>| = {self.comm_mag:.3e} is below {COMM_THRESHOLD:g}")

    @property
    def s_n(self) -> float:
        self._require_commutator()
        return 2 * self.var_n / self.comm_mag - 1

    @property
    def s_phi(self) -> float:
        self._require_commutator()
        return 2 * self.var_phi / self.comm_mag - 1

    @property
    def number_squeezed(self) -> bool:
        return self.s_n < 0

    @property
    def phase_squeezed(self) -> bool:
        return self.s_phi < 0


def theta_grid(grid_size: int) -> np.ndarray:
    """Uniform grid on [-pi, pi) with -pi included."""
    if grid_size < 4:
        raise ValueError("grid_size must be at least 4")
    return -math.pi + 2 * math.pi * np.arange(grid_size) / grid_size


def _lag_sums(a: np.ndarray, weights: np.ndarray | None = None) -> np.ndarray:
    """c_d for d = 1 .. len(a)-1 (index 0 of the result is d = 1)."""
    pair = np.outer(a, a)
    if weights is not None:
        pair = pair * weights
    return np.array([pair.diagonal(-d).sum() for d in range(1, len(a))])


def _cosine_series(lags: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    if len(lags) == 0:
        return np.full(thetas.shape, 1 / (2 * math.pi))
    d = np.arange(1, len(lags) + 1)
    return (1 + 2 * lags @ np.cos(np.outer(d, thetas))) / (2 * math.pi)


def pegg_barnett_at(state: AmplitudeVector, thetas, method: str = "cosine") -> np.ndarray:
    """P_PB at arbitrary relative angles.

    ``method="cosine"`` sums the n > k cosine series; ``method="modulus"``
    evaluates (1/2pi) |sum_n a_n e^{i n theta}|^2 directly.
    """
    thetas = np.asarray(thetas, dtype=float)
    if method == "cosine":
        return _cosine_series(_lag_sums(state.a), thetas)
    if method == "modulus":
        n = np.arange(len(state.a))
        amp = np.exp(1j * np.outer(thetas, n)) @ state.a
        return np.abs(amp) ** 2 / (2 * math.pi)
    raise ValueError(f"unknown method {method!r}")


def pegg_barnett(state: AmplitudeVector, grid_size: int = DEFAULT_GRID,
                 method: str = "cosine") -> PhaseDistribution:
    thetas = theta_grid(grid_size)
    return PhaseDistribution("pegg_barnett", thetas,
                             pegg_barnett_at(state, thetas, method), state.spec)


@lru_cache(maxsize=None)
def _wigner_exact(n: int, k: int) -> float:
    # Radial integral of the |n><k| Wigner kernel, done in exact rationals:
    # F = (-1)^k sqrt(k!/n!) 2^{d/2} sum_j (-1)^j C(n, k-j) 2^j Gamma(d/2+j+1)/j!
    d = n - k
    total = Fraction(0)
    for j in range(k + 1):
        if d % 2 == 0:
            g = Fraction(math.factorial(d // 2 + j))
        else:
            m = (d + 1) // 2 + j  # Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
            g = Fraction(math.factorial(2 * m), 4 ** m * math.factorial(m))
        total += (-1) ** j * math.comb(n, k - j) * 2 ** j * g / math.factorial(j)
    if total == 0:
        return 0.0
    sign = (-1) ** k * (1 if total > 0 else -1)
    log_mag = (math.log(abs(total.numerator)) - math.log(total.denominator)
               + 0.5 * (log_factorial(k) - log_factorial(n)) + 0.5 * d * math.log(2))
    if d % 2:
        log_mag += 0.5 * math.log(math.pi)
    return sign * math.exp(log_mag)


def quasi_coefficient(n: int, k: int, kind: str, wigner_mode: WignerMode = "gamma") -> float:
    """Radial-marginal weight F(n, k) of the |n><k| term, n >= k.

    ``husimi_q``: Gamma((n+k)/2 + 1) / sqrt(n! k!).

    ``wigner``: for same-parity (n, k) all modes agree with
    2^{(n-k)/2} sqrt(k!/n!) Gamma(n/2+1)/(k/2)! (n even) or
    2^{(n-k)/2} sqrt(k!/n!) Gamma((n+1)/2)/((k-1)/2)! (n odd).  Mixed-parity
    pairs differ by mode:

    * ``"gamma"``  evaluates the same closed forms with x! = Gamma(x+1);
    * ``"strict"`` drops the pair (returns 0);
    * ``"exact"``  returns the true radial integral of the Wigner function,
      which for mixed parity is not given by the closed forms above.
    """
    if k < 0 or n < k:
        raise ValueError(f"need n >= k >= 0, got n={n}, k={k}")
    if kind == "husimi_q":
        return math.exp(log_gamma((n + k) / 2 + 1)
                        - 0.5 * (log_factorial(n) + log_factorial(k)))
    if kind != "wigner":
        raise ValueError(f"unknown quasi-distribution kind {kind!r}")
    if wigner_mode not in WIGNER_MODES:
        raise ValueError(f"unknown wigner_mode {wigner_mode!r}")
    if n == k:
        return 1.0
    if (n - k) % 2:
        if wigner_mode == "strict":
            return 0.0
        if wigner_mode == "exact":
            return _wigner_exact(n, k)
    base = 0.5 * (n - k) * math.log(2) + 0.5 * (log_factorial(k) - log_factorial(n))
    if n % 2 == 0:
        return math.exp(base + log_gamma(n / 2 + 1) - log_gamma(k / 2 + 1))
    return math.exp(base + log_gamma((n + 1) / 2) - log_gamma((k - 1) / 2 + 1))


@lru_cache(maxsize=32)
def _coefficient_matrix(size: int, kind: str, wigner_mode: str) -> np.ndarray:
    # vectorized copy of quasi_coefficient over the lower triangle
    n, k = np.tril_indices(size)
    lf_n, lf_k = log_factorial(n), log_factorial(k)
    if kind == "husimi_q":
        logs = log_gamma((n + k) / 2 + 1) - 0.5 * (lf_n + lf_k)
    else:
        base = 0.5 * (n - k) * math.log(2) + 0.5 * (lf_k - lf_n)
        even = n % 2 == 0
        num = np.where(even, log_gamma(n / 2 + 1), log_gamma((n + 1) / 2))
        den = np.where(even, log_gamma(k / 2 + 1), log_gamma((k + 1) / 2))
        logs = base + num - den
    vals = np.exp(logs)
    if kind == "wigner":
        vals[n == k] = 1.0
        mixed = (n - k) % 2 == 1
        if wigner_mode == "strict":
            vals[mixed] = 0.0
        elif wigner_mode == "exact":
            vals[mixed] = [_wigner_exact(int(a), int(b)) for a, b in zip(n[mixed], k[mixed])]
    out = np.zeros((size, size))
    out[n, k] = vals
    out.setflags(write=False)
    return out


def quasi_distribution(state: AmplitudeVector, grid_size: int = DEFAULT_GRID,
                       kind: str = "husimi_q",
                       wigner_mode: WignerMode = "gamma") -> PhaseDistribution:
    """Phase marginal of the Husimi Q or Wigner function."""
    if kind not in ("husimi_q", "wigner"):
        raise ValueError(f"unknown quasi-distribution kind {kind!r}")
    if wigner_mode not in WIGNER_MODES:
        raise ValueError(f"unknown wigner_mode {wigner_mode!r}")
    thetas = theta_grid(grid_size)
    mode = wigner_mode if kind == "wigner" else "gamma"
    weights = _coefficient_matrix(len(state.a), kind, mode)
    values = _cosine_series(_lag_sums(state.a, weights), thetas)
    return PhaseDistribution(kind, thetas, values, state.spec)


def phase_variance(state: AmplitudeVector) -> float:
    """Closed-form <(Delta Phi)^2> = pi^2/3 + 4 sum_{n>k} a_n a_k (-1)^{n-k}/(n-k)^2."""
    lags = _lag_sums(state.a)
    d = np.arange(1, len(lags) + 1)
    return math.pi ** 2 / 3 + 4 * math.fsum(lags * (-1.0) ** d / d ** 2)


def phase_variance_quadrature(dist: PhaseDistribution) -> float:
    """Composite Simpson integral of theta^2 P(theta) over [-pi, pi].

    The grid is closed at +pi using periodicity, P(pi) = P(-pi).
    """
    if not math.isclose(dist.thetas[0], -math.pi, rel_tol=0, abs_tol=1e-12):
        raise ValueError("distribution grid must start at -pi")
    thetas = np.append(dist.thetas, math.pi)
    values = np.append(dist.values, dist.values[0])
    return float(simpson(thetas ** 2 * values, x=thetas))


def commutator_magnitude(state: AmplitudeVector) -> float:
    """|<[N, Phi]>| = |1 - 2 pi P_PB(theta_0)| with theta_0 at the -pi edge."""
    lags = _lag_sums(state.a)
    d = np.arange(1, len(lags) + 1)
    return abs(2 * math.fsum(lags * (-1.0) ** d))


def squeezing(state: AmplitudeVector) -> SqueezingReport:
    moments = number_moments(state)
    var_phi = phase_variance(state)
    comm = commutator_magnitude(state)
    gap = math.sqrt(moments.var_n * var_phi) - 0.5 * comm
    return SqueezingReport(moments.mean_n, moments.var_n, var_phi, comm, gap)


def finite_s_oracle(state: AmplitudeVector, s: int) -> PhaseDistribution:
    """((s+1)/2pi) |<theta_p|psi>|^2 on the s+1 Pegg-Barnett phase states.

    theta_p = theta_0 + 2 pi p/(s+1) with theta_0 = -pi.  For a state supported
    on n <= n_cut <= s this reproduces P_PB at the theta_p exactly.
    """
    if s < state.n_cut:
        raise ValueError(f"s = {s} must be at least n_cut = {state.n_cut}")
    p = np.arange(s + 1)
    thetas = -math.pi + 2 * math.pi * p / (s + 1)
    n = np.arange(len(state.a))
    # <theta_p|n> = exp(-i n theta_p) / sqrt(s+1)
    overlaps = np.exp(-1j * np.outer(thetas, n)) @ state.a / math.sqrt(s + 1)
    values = (s + 1) / (2 * math.pi) * np.abs(overlaps) ** 2
    return PhaseDistribution("finite_s", thetas, values, state.spec)
