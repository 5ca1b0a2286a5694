import math

import numpy as np

from orlicz_lab.logdomain import log_add, log_diff, log_expm1, log_sum


def test_log_add_matches_linear():
    a, b = math.log(3.0), math.log(5.0)
    assert math.isclose(log_add(a, b), math.log(8.0), rel_tol=1e-15)


def test_log_diff_matches_linear():
    a, b = math.log(5.0), math.log(3.0)
    assert math.isclose(log_diff(a, b), math.log(2.0), rel_tol=1e-14)


def test_log_diff_equal_gives_neg_inf():
    assert log_diff(2.5, 2.5) == -math.inf
    assert log_diff(-math.inf, -math.inf) == -math.inf


def test_log_diff_huge_magnitudes():
    # 1e200 - 1e180, far beyond what could be subtracted after exponentiation
    a, b = 200 * math.log(10.0), 180 * math.log(10.0)
    expect = math.log(1e200 - 1e180) if False else a + math.log1p(-1e-20)
    assert math.isclose(log_diff(a, b), expect, rel_tol=1e-15)


def test_log_sum_tolerates_neg_inf():
    assert log_sum([-math.inf, -math.inf]) == -math.inf
    assert math.isclose(log_sum([-math.inf, 0.0]), 0.0, abs_tol=1e-15)


def test_log_sum_matches_naive():
    vals = np.log([1.0, 2.0, 3.5, 0.5])
    assert math.isclose(log_sum(vals), math.log(7.0), rel_tol=1e-14)


def test_log_expm1_both_tails():
    assert math.isclose(log_expm1(1e-8), math.log(math.expm1(1e-8)), rel_tol=1e-12)
    assert math.isclose(log_expm1(500.0), 500.0, rel_tol=1e-15)
    out = log_expm1(np.array([0.5, 40.0, 800.0]))
    assert math.isclose(out[0], math.log(math.expm1(0.5)), rel_tol=1e-14)
    assert math.isclose(out[2], 800.0, rel_tol=1e-15)
