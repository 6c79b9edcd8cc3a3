"""Array orthogonality property (AOP) checks.

A length ``R*d`` sequence written row by row into an R x d array has the AOP
for divisor d when

1. any two distinct columns have zero periodic cross-correlation at every
   shift, and
2. the column autocorrelations sum to zero at every non-zero shift.

Non-zeros of the sequence autocorrelation at ``tau = q'*d + r'`` trace back to
array shift(s) kappa; see :func:`map_shift_to_kappa`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .construction import PhaseArray, Sequence
from .correlation import auto_profile, cross_profile, default_tolerance


class ColumnViolation(NamedTuple):
    columns: tuple[int, int]
    kappa: int
    value: complex


class ShiftValue(NamedTuple):
    kappa: int
    value: complex


class ShiftDecomposition(NamedTuple):
    quotient: int
    remainder: int


class ShiftMapping(NamedTuple):
    condition: int
    kappas: frozenset[int]


@dataclass(frozen=True)
class AopReport:
    divisor: int
    rows: int
    tolerance: float
    condition1_violations: list[ColumnViolation] = field(default_factory=list)
    condition2_exceptions: list[ShiftValue] = field(default_factory=list)

    @property
    def condition1_holds(self) -> bool:
        return not self.condition1_violations

    @property
    def condition2_holds(self) -> bool:
        return not self.condition2_exceptions

    @property
    def exception_shifts(self) -> list[int]:
        return [e.kappa for e in self.condition2_exceptions]

    def to_dict(self) -> dict:
        return {
            "divisor": self.divisor,
            "rows": self.rows,
            "tolerance": self.tolerance,
            "condition1_holds": self.condition1_holds,
            "condition1_violations": [
                {"columns": list(v.columns), "kappa": v.kappa,
                 "re": v.value.real, "im": v.value.imag}
                for v in self.condition1_violations
            ],
            "condition2_exceptions": [
                {"kappa": e.kappa, "re": e.value.real, "im": e.value.imag}
                for e in self.condition2_exceptions
            ],
        }


def associate_array(s: Sequence, d: int) -> PhaseArray:
    """Write ``s`` row by row into an ``(L/d) x d`` array."""
    if d < 1:
        raise ValueError(f"divisor must be positive, got {d}")
    if s.period % d:
        raise ValueError(f"divisor {d} does not divide period {s.period}")
    return PhaseArray(s.exponents.reshape(s.period // d, d), s.modulus)


def _tol(A: PhaseArray, tol: float | None) -> float:
    return default_tolerance(A.rows) if tol is None else float(tol)


def check_condition1(A: PhaseArray, tol: float | None = None) -> list[ColumnViolation]:
    """Cross-correlation of every pair of distinct columns at every shift.

    Returns the (pair, kappa, value) entries with ``|value| >= tol``; an empty
    list means condition 1 holds. ``tol`` defaults to ``1e-9 * R``.
    """
    tol = _tol(A, tol)
    cols = [A.column(j) for j in range(A.cols)]
    out = []
    for a in range(A.cols):
        for b in range(a + 1, A.cols):
            prof = cross_profile(cols[a], cols[b], tol=tol)
            for k in prof.nonzero_shifts():
                out.append(ColumnViolation((a, b), k, prof[k]))
    return out


def column_autocorrelation_sum(A: PhaseArray) -> np.ndarray:
    """``sum_j theta_{column j}(kappa)`` for every kappa in ``[0, R)``."""
    total = np.zeros(A.rows, dtype=np.complex128)
    for j in range(A.cols):
        total = total + auto_profile(A.column(j)).values
    return total


def check_condition2(A: PhaseArray, tol: float | None = None) -> list[ShiftValue]:
    """Non-zero shifts (kappa != 0) of the summed column autocorrelations."""
    tol = _tol(A, tol)
    total = column_autocorrelation_sum(A)
    return [ShiftValue(k, complex(total[k]))
            for k in range(1, A.rows) if abs(total[k]) >= tol]


def check_aop(A: PhaseArray, tol: float | None = None) -> AopReport:
    tol = _tol(A, tol)
    return AopReport(
        divisor=A.cols,
        rows=A.rows,
        tolerance=tol,
        condition1_violations=check_condition1(A, tol),
        condition2_exceptions=check_condition2(A, tol),
    )


def decompose_shift(tau: int, d: int) -> ShiftDecomposition:
    if d < 1:
        raise ValueError(f"divisor must be positive, got {d}")
    if tau < 0:
        raise ValueError(f"shift must be non-negative, got {tau}")
    return ShiftDecomposition(*divmod(tau, d))


def map_shift_to_kappa(tau: int, d: int) -> ShiftMapping:
    """Array shift(s) responsible for a sequence non-zero at ``tau``.

    With ``tau = q'*d + r'``: if ``r' == 0`` the non-zero comes from condition
    2 at ``kappa = q'``; otherwise from condition 1 at some
    ``kappa = q' + (r + r') // d`` with ``0 <= r < d``. All candidates over r
    are returned, which is at most ``{q', q' + 1}``.
    """
    q, rem = decompose_shift(tau, d)
    if rem == 0:
        return ShiftMapping(2, frozenset({q}))
    return ShiftMapping(1, frozenset(q + (r + rem) // d for r in range(d)))
