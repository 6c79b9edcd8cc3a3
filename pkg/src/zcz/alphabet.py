"""Exact arithmetic over N-th roots of unity.

An element w**e (w = exp(2*pi*i/N)) is stored as its exponent residue e mod N.
Complex values only appear when something needs to be summed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, order=True)
class UnitRootExponent:
    """The root of unity ``exp(2*pi*i * exponent / modulus)``."""

    exponent: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.exponent < self.modulus:
            raise ValueError(
                f"exponent {self.exponent} not a canonical residue mod {self.modulus}"
            )

    def __mul__(self, other: UnitRootExponent) -> UnitRootExponent:
        _check_same_modulus(self.modulus, other.modulus)
        return reduce(self.exponent + other.exponent, self.modulus)

    def conjugate(self) -> UnitRootExponent:
        return reduce(-self.exponent, self.modulus)

    def __complex__(self) -> complex:
        return to_complex(self)


def _check_same_modulus(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"moduli differ: {a} != {b}")


def reduce(raw_exponent: int, modulus: int) -> UnitRootExponent:
    """Canonical residue of ``raw_exponent`` modulo ``modulus``.

    >>> reduce(-1, 6)
    UnitRootExponent(exponent=5, modulus=6)
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    return UnitRootExponent(int(raw_exponent) % modulus, int(modulus))


def to_complex(e: UnitRootExponent) -> complex:
    # exact values on the axes keep trivial cases free of 1e-16 residue
    k = 4 * e.exponent
    if k % e.modulus == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[k // e.modulus]
    return cmath.exp(2j * math.pi * e.exponent / e.modulus)


def exponents_to_complex(exponents, modulus: int) -> np.ndarray:
    """Vectorised :func:`to_complex` over an integer array of residues."""
    exponents = np.asarray(exponents, dtype=np.int64)
    values = np.exp(2j * np.pi * exponents / modulus)
    # snap quarter turns, as in to_complex
    quarter = (4 * exponents) % modulus == 0
    if quarter.any():
        axis = np.array([1 + 0j, 1j, -1 + 0j, -1j])
        values[quarter] = axis[(4 * exponents[quarter]) // modulus]
    return values


def gaussian_sum(q: int, N: int) -> complex:
    """Return ``sum_{k=0}^{N-1} w**(q*k)`` with ``w = exp(2*pi*i/N)``.

    The sum is N when q = 0 mod N and vanishes otherwise; the numeric value is
    computed by direct summation so callers can check that against roundoff.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    k = np.arange(N, dtype=np.int64)
    # reduce q*k exactly before leaving the integer domain
    terms = exponents_to_complex((q % N) * k % N, N)
    total = 0j
    for t in terms:
        total += t
    return complex(total)
