import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_profile, unit_values
from zcz.construction import Sequence, build_frank_sequence, build_paper_array, build_zcz_sequence
from zcz.correlation import (
    CorrelationProfile,
    auto_profile,
    complex_profile,
    cross_correlation,
    cross_profile,
    default_tolerance,
)


@st.composite
def sequences(draw, max_len=64, max_mod=24):
    N = draw(st.integers(1, max_mod))
    L = draw(st.integers(1, max_len))
    ex = draw(st.lists(st.integers(0, N - 1), min_size=L, max_size=L))
    return Sequence(ex, N)


def test_all_ones():
    s = Sequence([0] * 4, 6)
    for t in range(-3, 8):
        assert cross_correlation(s, s, t) == 4
    ones3 = Sequence([0] * 3, 2)
    assert cross_profile(ones3, ones3).values.tolist() == [3, 3, 3]


def test_frank2_shift1(oracle):
    f = build_frank_sequence(2)
    # 1*1 + 1*1 + 1*(-1) + (-1)*1
    assert abs(cross_correlation(f, f, 1)) < 1e-12
    assert abs(oracle.correlation([1, 1, 1, -1], [1, 1, 1, -1], 1)) == 0


def test_zcz0_shift6(oracle):
    s = build_zcz_sequence(0)
    expected = oracle.correlation(oracle.values(s.exponents.tolist(), 6),
                                  oracle.values(s.exponents.tolist(), 6), 6)
    assert abs(expected - (-6)) < 1e-12
    assert abs(cross_correlation(s, s, 6) - (-6)) < 1e-12


def test_frank4_profile(oracle):
    f = build_frank_sequence(4)
    brute = oracle.profile(oracle.values(f.exponents.tolist(), 4))
    assert abs(brute[0] - 16) < 1e-12 and max(abs(v) for v in brute[1:]) < 1e-12
    p = auto_profile(f)
    assert p[0] == 16
    assert p.nonzero_shifts() == [0]


def test_zcz0_profile_support():
    assert auto_profile(build_zcz_sequence(0)).nonzero_shifts() == [0, 6, 18]


def test_length_one():
    assert auto_profile(Sequence([0], 7)).values.tolist() == [1]
    p = auto_profile(Sequence([3], 7))
    assert p.period == 1 and abs(p[0] - 1) < 1e-12


def test_paper_columns_cross_zero():
    A = build_paper_array(0)
    p = cross_profile(A.column(0), A.column(1))
    assert p.period == 12
    assert np.all(np.abs(p.values) < 1e-9 * 12)


def test_mismatch_rejected():
    with pytest.raises(ValueError):
        cross_correlation(Sequence([0, 1], 3), Sequence([0, 1, 2], 3), 0)
    with pytest.raises(ValueError):
        cross_profile(Sequence([0, 1], 3), Sequence([0, 1], 4))


def test_shift_normalised():
    s = build_zcz_sequence(0)
    assert cross_correlation(s, s, -18) == cross_correlation(s, s, 6)
    assert cross_correlation(s, s, 30) == cross_correlation(s, s, 6)


def test_default_tolerance():
    assert auto_profile(build_zcz_sequence(1)).tolerance == pytest.approx(72e-9)
    assert default_tolerance(100) == pytest.approx(1e-7)


def test_profile_matches_single_shift_bitwise():
    # ascending-i accumulation on both paths
    s = build_zcz_sequence(2)
    p = auto_profile(s)
    for t in range(s.period):
        assert p[t] == cross_correlation(s, s, t)


@settings(max_examples=60, deadline=None)
@given(sequences(), sequences())
def test_matches_brute_force(a, b):
    if b.period != a.period or b.modulus != a.modulus:
        b = Sequence(np.resize(b.exponents % a.modulus, a.period), a.modulus)
    x = unit_values(a.exponents.tolist(), a.modulus)
    y = unit_values(b.exponents.tolist(), a.modulus)
    brute = brute_profile(x, y)
    for method in ("direct", "transform"):
        p = cross_profile(a, b, method)
        assert np.allclose(p.values, brute, atol=1e-9 * a.period, rtol=0)


@settings(max_examples=60, deadline=None)
@given(sequences(max_len=200))
def test_profile_invariants(s):
    L = s.period
    d = auto_profile(s, "direct")
    t = auto_profile(s, "transform")
    assert np.max(np.abs(d.values - t.values)) < 1e-9 * L
    assert abs(d[0] - L) < 1e-9 * L
    for tau in range(L):
        assert abs(d[tau] - np.conj(d[(L - tau) % L])) < 1e-9 * L
    # power spectrum: L * IDFT(profile) = |DFT(s)|**2, real and non-negative
    spec = L * np.fft.ifft(d.values)
    power = np.abs(np.fft.fft(s.to_complex())) ** 2
    assert np.max(np.abs(spec.imag)) < 1e-6 * L
    assert np.min(spec.real) > -1e-6 * L
    assert np.allclose(spec.real, power, atol=1e-6 * L, rtol=0)


def test_complex_profile_raw_input():
    rng = np.random.default_rng(3)
    x = rng.normal(size=50) + 1j * rng.normal(size=50)
    assert np.allclose(complex_profile(x, method="direct"), complex_profile(x, method="transform"))


def test_profile_rejects_negative_tol():
    with pytest.raises(ValueError):
        CorrelationProfile([1.0], -1)


def test_deterministic():
    s = build_zcz_sequence(3)
    a = auto_profile(s).values
    b = auto_profile(s).values
    assert a.tobytes() == b.tobytes()
