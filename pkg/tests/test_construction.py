import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zcz.aop import associate_array
from zcz.construction import (
    MAX_N,
    PhaseArray,
    RoundingVariant,
    Sequence,
    build_frank_sequence,
    build_paper_array,
    build_zcz_sequence,
    flatten_row_major,
)

# floor(i*(i+j)/2) mod 6 and the ceiling analogue, i < 12, j < 2, row-major
ZCZ0_FLOOR = [0, 0, 0, 1, 2, 3, 4, 0, 2, 4, 0, 3, 0, 3, 0, 4, 2, 0, 4, 3, 2, 1, 0, 0]
ZCZ0_CEIL = [0, 0, 1, 1, 2, 3, 5, 0, 2, 4, 1, 3, 0, 3, 1, 4, 2, 0, 5, 3, 2, 1, 1, 0]


def test_paper_array_n0_rows():
    A = build_paper_array(0)
    assert (A.rows, A.cols, A.modulus) == (12, 2, 6)
    assert A.entries[:4].tolist() == [[0, 0], [0, 1], [2, 3], [4, 0]]


def test_paper_array_ceiling_row1():
    A = build_paper_array(0, "ceiling")
    assert A.entries[1].tolist() == [1, 1]


@pytest.mark.parametrize("variant, expected", [("floor", ZCZ0_FLOOR), ("ceiling", ZCZ0_CEIL)])
def test_zcz_n0_exponents(variant, expected):
    assert build_zcz_sequence(0, variant).exponents.tolist() == expected


@pytest.mark.parametrize("n, L, N", [(0, 24, 6), (1, 72, 18), (2, 120, 30)])
def test_zcz_lengths(n, L, N):
    s = build_zcz_sequence(n)
    assert (s.period, s.modulus) == (L, N)


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("variant", list(RoundingVariant))
def test_zcz_sweep_matches_formula(n, variant):
    s = build_zcz_sequence(n, variant)
    N = 6 * (2 * n + 1)
    assert s.period == 24 * (2 * n + 1)
    assert s.modulus == N
    ex = s.exponents.tolist()
    for i in range(12 * (2 * n + 1)):
        for j in range(2):
            p = i * (i + j)
            want = p // 2 if variant is RoundingVariant.FLOOR else -(-p // 2)
            assert ex[2 * i + j] == want % N


def test_flatten_first_four():
    assert build_zcz_sequence(0).exponents[:4].tolist() == [0, 0, 0, 1]


def test_flatten_1x1():
    s = flatten_row_major(PhaseArray([[3]], 5))
    assert s.exponents.tolist() == [3] and s.period == 1


def test_frank_small():
    assert build_frank_sequence(1).exponents.tolist() == [0]
    f2 = build_frank_sequence(2)
    assert f2.exponents.tolist() == [0, 0, 0, 1]
    assert np.allclose(f2.to_complex(), [1, 1, 1, -1])
    f4 = build_frank_sequence(4)
    assert (f4.period, f4.modulus) == (16, 4)


def test_n_validation():
    with pytest.raises(ValueError):
        build_paper_array(-1)
    with pytest.raises(ValueError):
        build_paper_array(MAX_N + 1)
    with pytest.raises(TypeError):
        build_paper_array(1.5)


def test_max_n_fits_int64():
    R = 12 * (2 * MAX_N + 1)
    assert (R - 1) * R < 2**63
    R_next = 12 * (2 * (MAX_N + 1) + 1)
    assert (R_next - 1) * R_next >= 2**63


def test_immutable():
    s = build_zcz_sequence(0)
    with pytest.raises(ValueError):
        s.exponents[0] = 1
    with pytest.raises(AttributeError):
        s.modulus = 7


def test_sequence_validation():
    with pytest.raises(ValueError):
        Sequence([0, 6], 6)
    with pytest.raises(ValueError):
        Sequence([], 6)


@given(st.integers(1, 8), st.integers(1, 8), st.integers(1, 20), st.data())
def test_flatten_reshape_round_trip(R, C, N, data):
    entries = data.draw(st.lists(st.integers(0, N - 1), min_size=R * C, max_size=R * C))
    A = PhaseArray(np.array(entries).reshape(R, C), N)
    s = flatten_row_major(A)
    assert s.period == R * C
    assert associate_array(s, C) == A
    for i in range(R):
        for j in range(C):
            assert s[i * C + j] == A[i, j]
