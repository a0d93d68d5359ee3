"""Scalar special-function kernels.

Everything that involves factorials or long products of Laguerre ratios is
assembled in log space here and exponentiated as late as possible, since n!
overflows a double past n = 170.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as a sign and a logarithmic magnitude.

    The magnitude is kept as ``2**exp2 * exp(log_frac)`` so that converting a
    float in and back out is exact: the binary exponent never passes through
    a logarithm.  ``log_mag`` gives the natural log of the absolute value.
    """

    sign: int
    exp2: int = 0
    log_frac: float = 0.0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")

    @classmethod
    def from_float(cls, x: float) -> SignedLogValue:
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"cannot represent non-finite value {x!r}")
        if x == 0.0:
            return cls(0)
        mantissa, exponent = math.frexp(abs(x))
        return cls(1 if x > 0 else -1, exponent, math.log(mantissa))

    @classmethod
    def from_log(cls, sign: int, log_mag: float) -> SignedLogValue:
        if sign == 0:
            return cls(0)
        return cls(sign, 0, float(log_mag))

    @property
    def log_mag(self) -> float:
        if self.sign == 0:
            return -math.inf
        return self.exp2 * _LN2 + self.log_frac

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        # keep exp() in range; the binary part is applied exactly by ldexp
        k = math.floor(self.log_frac / _LN2)
        frac = math.exp(self.log_frac - k * _LN2) if k else math.exp(self.log_frac)
        try:
            return self.sign * math.ldexp(frac, self.exp2 + k)
        except OverflowError:
            return self.sign * math.inf

    __float__ = to_float

    def __mul__(self, other: SignedLogValue) -> SignedLogValue:
        if not isinstance(other, SignedLogValue):
            return NotImplemented
        if self.sign == 0 or other.sign == 0:
            return SignedLogValue(0)
        return SignedLogValue(self.sign * other.sign,
                              self.exp2 + other.exp2,
                              self.log_frac + other.log_frac)

    def reciprocal(self) -> SignedLogValue:
        if self.sign == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return SignedLogValue(self.sign, -self.exp2, -self.log_frac)

    def __truediv__(self, other: SignedLogValue) -> SignedLogValue:
        if not isinstance(other, SignedLogValue):
            return NotImplemented
        return self * other.reciprocal()


def log_factorial(n):
    """Natural log of n!, via log-Gamma (never forms n! itself)."""
    n_arr = np.asarray(n)
    if np.any(n_arr < 0):
        raise ValueError("log_factorial requires n >= 0")
    out = gammaln(n_arr + 1.0)
    return float(out) if out.ndim == 0 else out


def log_gamma(x):
    """Natural log of Gamma(x) for x > 0; accepts scalars or arrays."""
    x_arr = np.asarray(x, dtype=float)
    if np.any(~(x_arr > 0)):
        raise ValueError("log_gamma is defined here only for x > 0")
    out = gammaln(x_arr)
    return float(out) if out.ndim == 0 else out


def laguerre_table(n_max: int, m: int, x: float) -> np.ndarray:
    """Return ``[L_0^m(x), ..., L_{n_max}^m(x)]`` by upward recurrence.

    Uses (k+1) L_{k+1} = (2k+1+m-x) L_k - (k+m) L_{k-1}, which is stable for
    the small arguments (x = eta**2 of order one) needed here.
    """
    if n_max < 0 or m < 0:
        raise ValueError("laguerre_table requires n_max >= 0 and m >= 0")
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + m - x
    for k in range(1, n_max):
        out[k + 1] = ((2 * k + 1 + m - x) * out[k] - (k + m) * out[k - 1]) / (k + 1)
    return out


def laguerre(n: int, m: int, x: float) -> float:
    """Generalized Laguerre polynomial L_n^m(x) for integer n, m >= 0."""
    if n < 0 or m < 0:
        raise ValueError("laguerre requires n >= 0 and m >= 0")
    if n == 0:
        return 1.0
    lm1, l = 1.0, 1.0 + m - x
    for k in range(1, n):
        lm1, l = l, ((2 * k + 1 + m - x) * l - (k + m) * lm1) / (k + 1)
    return l
