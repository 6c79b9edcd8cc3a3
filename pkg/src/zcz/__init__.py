"""Periodic zero-correlation-zone sequences over roots of unity."""

__version__ = "0.1.0"

from .alphabet import UnitRootExponent, gaussian_sum, reduce, to_complex
from .analysis import (
    ZczProfile,
    asymptote_report,
    closed_form_offpeak,
    verify_paper_claims,
    zcz_profile,
)
from .aop import (
    AopReport,
    associate_array,
    check_aop,
    check_condition1,
    check_condition2,
    map_shift_to_kappa,
)
from .construction import (
    MAX_N,
    PhaseArray,
    RoundingVariant,
    Sequence,
    build_frank_sequence,
    build_paper_array,
    build_zcz_sequence,
    flatten_row_major,
)
from .correlation import CorrelationProfile, auto_profile, cross_correlation, cross_profile
