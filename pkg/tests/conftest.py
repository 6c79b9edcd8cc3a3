import cmath
import math

import pytest


def brute_correlation(a, b, tau):
    """Pure-Python periodic correlation, independent of the package code."""
    L = len(a)
    return sum(a[i] * b[(i + tau) % L].conjugate() for i in range(L))


def brute_profile(a, b=None):
    b = a if b is None else b
    return [brute_correlation(a, b, t) for t in range(len(a))]


def unit_values(exponents, N):
    return [cmath.exp(2j * math.pi * e / N) for e in exponents]


@pytest.fixture
def oracle():
    class Oracle:
        correlation = staticmethod(brute_correlation)
        profile = staticmethod(brute_profile)
        values = staticmethod(unit_values)
    return Oracle


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in mod.RESULTS.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
