"""Periodic cross- and autocorrelation.

``theta_{a,b}(tau) = sum_i a_i * conj(b_{(i+tau) mod L})``.

Two routes compute full profiles: a direct O(L^2) sum (the reference) and an
FFT power-spectrum round trip. They are meant to be checked against each
other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .construction import Sequence

#: zero-classification tolerance is this factor times the period
DEFAULT_REL_TOL = 1e-9


class Method(str, enum.Enum):
    DIRECT = "direct"
    TRANSFORM = "transform"


def default_tolerance(period: int) -> float:
    return DEFAULT_REL_TOL * period


@dataclass(frozen=True, eq=False)
class CorrelationProfile:
    values: np.ndarray
    tolerance: float

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128, copy=True)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("profile needs one value per shift")
        if self.tolerance < 0:
            raise ValueError("tolerance must be non-negative")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "tolerance", float(self.tolerance))

    @property
    def period(self) -> int:
        return int(self.values.size)

    def __len__(self):
        return self.period

    def __getitem__(self, shift: int) -> complex:
        return complex(self.values[shift % self.period])

    def is_zero(self) -> np.ndarray:
        """Boolean mask, True where ``|value| < tolerance``."""
        return np.abs(self.values) < self.tolerance

    def nonzero_shifts(self) -> list[int]:
        return [int(t) for t in np.flatnonzero(~self.is_zero())]


def _check_pair(a: Sequence, b: Sequence) -> None:
    if a.period != b.period:
        raise ValueError(f"periods differ: {a.period} != {b.period}")
    if a.modulus != b.modulus:
        raise ValueError(f"moduli differ: {a.modulus} != {b.modulus}")


def _direct(x: np.ndarray, y: np.ndarray, shift: int) -> complex:
    # fixed ascending-i summation; no pairwise/blocked reduction
    prod = x * np.conj(np.roll(y, -shift))
    total = 0j
    for p in prod.tolist():
        total += p
    return total


def cross_correlation(a: Sequence, b: Sequence, shift: int) -> complex:
    _check_pair(a, b)
    L = a.period
    return _direct(a.to_complex(), b.to_complex(), int(shift) % L)


def _direct_profile(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    L = x.size
    # row tau holds y[(i + tau) mod L]; cumsum along i fixes ascending order
    out = np.empty(L, dtype=np.complex128)
    block = max(1, 2**20 // L)
    yc = np.conj(y)
    i = np.arange(L)
    for start in range(0, L, block):
        rows = (np.arange(start, min(start + block, L))[:, None] + i[None, :]) % L
        prods = x[None, :] * yc[rows]
        out[start:start + block] = np.cumsum(prods, axis=1)[:, -1]
    return out


def _transform_profile(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # sum_i x_i conj(y_{i+tau}) = conj(ifft(conj(X) * Y))
    X = np.fft.fft(x)
    Y = np.fft.fft(y)
    return np.conj(np.fft.ifft(np.conj(X) * Y))


def _profile(x, y, method, tol, L) -> CorrelationProfile:
    method = Method(method)
    if method is Method.DIRECT:
        values = _direct_profile(x, y)
    else:
        values = _transform_profile(x, y)
    return CorrelationProfile(values, default_tolerance(L) if tol is None else tol)


def auto_profile(s: Sequence, method: Method | str = Method.DIRECT,
                 tol: float | None = None) -> CorrelationProfile:
    """Autocorrelation at every shift in ``[0, L)``.

    ``tol`` defaults to ``1e-9 * L``.
    """
    x = s.to_complex()
    return _profile(x, x, method, tol, s.period)


def cross_profile(a: Sequence, b: Sequence, method: Method | str = Method.DIRECT,
                  tol: float | None = None) -> CorrelationProfile:
    _check_pair(a, b)
    return _profile(a.to_complex(), b.to_complex(), method, tol, a.period)


def complex_profile(x, y=None, method: Method | str = Method.DIRECT) -> np.ndarray:
    """Profile of raw complex arrays (used for non-root-of-unity inputs)."""
    x = np.asarray(x, dtype=np.complex128)
    y = x if y is None else np.asarray(y, dtype=np.complex128)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("inputs must be 1-d arrays of equal length")
    if Method(method) is Method.DIRECT:
        return _direct_profile(x, y)
    return _transform_profile(x, y)
