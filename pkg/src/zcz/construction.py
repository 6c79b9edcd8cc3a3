"""Sequence and array constructions.

``build_zcz_sequence`` writes out, row by row, the 12(2n+1) x 2 array with
entries w**floor(i*(i+j)/2) over 6(2n+1)-th roots of unity.
``build_frank_sequence`` is the classic Frank perfect sequence, kept here as
a known-perfect reference for the correlation code.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .alphabet import UnitRootExponent, exponents_to_complex


class RoundingVariant(str, enum.Enum):
    FLOOR = "floor"
    CEILING = "ceiling"


def _frozen(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=np.int64, copy=True)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array of exponents, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


def _check_residues(arr: np.ndarray, modulus: int) -> None:
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    bad = np.flatnonzero((arr < 0) | (arr >= modulus))
    if bad.size:
        idx = int(bad[0])
        raise ValueError(
            f"exponent {int(arr.flat[idx])} at index {idx} outside [0, {modulus})"
        )


@dataclass(frozen=True, eq=False)
class Sequence:
    """A periodic sequence of N-th roots of unity, stored as exponents."""

    exponents: np.ndarray
    modulus: int

    def __post_init__(self):
        arr = _frozen(self.exponents, 1)
        if arr.size == 0:
            raise ValueError("sequence must be non-empty")
        _check_residues(arr, self.modulus)
        object.__setattr__(self, "exponents", arr)
        object.__setattr__(self, "modulus", int(self.modulus))

    @property
    def period(self) -> int:
        return int(self.exponents.size)

    def __len__(self):
        return self.period

    def __getitem__(self, i: int) -> UnitRootExponent:
        return UnitRootExponent(int(self.exponents[i]), self.modulus)

    def __iter__(self):
        return (UnitRootExponent(int(e), self.modulus) for e in self.exponents)

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(
            self.exponents, other.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.exponents.tobytes()))

    def to_complex(self) -> np.ndarray:
        return exponents_to_complex(self.exponents, self.modulus)


@dataclass(frozen=True, eq=False)
class PhaseArray:
    """R x C array of N-th roots of unity (C is the divisor d)."""

    entries: np.ndarray
    modulus: int

    def __post_init__(self):
        arr = _frozen(self.entries, 2)
        if 0 in arr.shape:
            raise ValueError("array must have at least one row and one column")
        _check_residues(arr, self.modulus)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "modulus", int(self.modulus))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def __getitem__(self, ij) -> UnitRootExponent:
        i, j = ij
        return UnitRootExponent(int(self.entries[i, j]), self.modulus)

    def column(self, j: int) -> Sequence:
        return Sequence(self.entries[:, j], self.modulus)

    def __eq__(self, other):
        if not isinstance(other, PhaseArray):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(
            self.entries, other.entries
        )

    def __hash__(self):
        return hash((self.modulus, self.entries.shape, self.entries.tobytes()))


def _max_supported_n() -> int:
    # largest n with (R - 1) * R < 2**63, R = 12(2n+1)
    r = (1 + math.isqrt(1 + 4 * (2**63 - 1))) // 2
    while (r - 1) * r >= 2**63:
        r -= 1
    return (r // 12 - 1) // 2


MAX_N = _max_supported_n()


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the supported maximum {MAX_N} (int64 exponents)")


def build_paper_array(n: int, variant: RoundingVariant | str = RoundingVariant.FLOOR) -> PhaseArray:
    """Build the 12(2n+1) x 2 array ``S[i, j] = w**round(i*(i+j)/2)``.

    ``w`` is a primitive 6(2n+1)-th root of unity and ``round`` is floor or
    ceiling per ``variant``. Supports ``0 <= n <= MAX_N``.
    """
    _check_n(n)
    variant = RoundingVariant(variant)
    rows = 12 * (2 * n + 1)
    modulus = 6 * (2 * n + 1)
    i = np.arange(rows, dtype=np.int64)[:, None]
    j = np.arange(2, dtype=np.int64)[None, :]
    prod = i * (i + j)
    if variant is RoundingVariant.FLOOR:
        half = prod // 2
    else:
        half = -((-prod) // 2)
    return PhaseArray(half % modulus, modulus)


def flatten_row_major(A: PhaseArray) -> Sequence:
    return Sequence(A.entries.reshape(-1), A.modulus)


def build_zcz_sequence(n: int, variant: RoundingVariant | str = RoundingVariant.FLOOR) -> Sequence:
    """ZCZ sequence of length 24(2n+1) over 6(2n+1)-th roots of unity."""
    return flatten_row_major(build_paper_array(n, variant))


def build_frank_array(d: int) -> PhaseArray:
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    i = np.arange(d, dtype=np.int64)
    return PhaseArray(np.outer(i, i) % d, d)


def build_frank_sequence(d: int) -> Sequence:
    """Frank sequence: row-major ``w**(i*j)``, i, j < d, over d-th roots."""
    return flatten_row_major(build_frank_array(d))
