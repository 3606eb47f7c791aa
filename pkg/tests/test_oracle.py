import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartic_positivity.core import ReducedQuartic
from quartic_positivity.oracle import (
    CubicCoeffs,
    Root,
    brute_positive,
    cauchy_bound,
    cubic_real_roots,
    global_min,
    low_degree_min,
)

coef = st.floats(-10, 10, allow_nan=False)
# zero or not tiny: residual bounds are meaningless once roots leave float range
sized = st.one_of(st.just(0.0), st.floats(1e-6, 10), st.floats(-10, -1e-6))


def values(roots):
    return [r.value for r in roots]


@pytest.mark.parametrize("c, expected", [
    (CubicCoeffs(1, 0, -1, 0), [-1, 0, 1]),
    (CubicCoeffs(-8, 0, 8, 0), [-1, 0, 1]),
    (CubicCoeffs(1, -6, 11, -6), [1, 2, 3]),
    (CubicCoeffs(0, 1, -3, 2), [1, 2]),
    (CubicCoeffs(0, 0, 2, -1), [0.5]),
    (CubicCoeffs(-8, 0, 0, 1), [0.5]),
])
def test_cubic_simple_roots(c, expected):
    got = cubic_real_roots(c)
    assert [r.multiplicity for r in got] == [1] * len(expected)
    np.testing.assert_allclose(values(got), expected, atol=1e-12)


def test_triple_root():
    assert cubic_real_roots(CubicCoeffs(1, 0, 0, 0)) == [Root(0.0, 3)]
    (r,) = cubic_real_roots(CubicCoeffs(2, -6, 6, -2))  # 2(t-1)^3
    assert r.multiplicity == 3 and r.value == pytest.approx(1.0, abs=1e-7)


def test_double_root():
    got = cubic_real_roots(CubicCoeffs(1, -1, 0, 0))  # t^2 (t - 1)
    assert [r.multiplicity for r in got] == [2, 1]
    np.testing.assert_allclose(values(got), [0, 1], atol=1e-12)


def test_tiny_leading_coefficient_does_not_raise():
    for c in (CubicCoeffs(1e-285, 1.0, 0.0, 0.0), CubicCoeffs(1e-285, 0.0, 1.0, 0.0)):
        for r in cubic_real_roots(c):
            assert math.isfinite(r.value)


def test_no_roots_for_zero_polynomial_and_constants():
    assert cubic_real_roots(CubicCoeffs(0, 0, 0, 0)) == []
    assert cubic_real_roots(CubicCoeffs(0, 0, 0, 3)) == []
    assert cubic_real_roots(CubicCoeffs(0, 1, 0, 1)) == []


@settings(max_examples=500, deadline=None)
@given(sized, sized, sized, sized)
def test_root_residuals(c3, c2, c1, c0):
    c = CubicCoeffs(c3, c2, c1, c0)
    for r in cubic_real_roots(c):
        if r.multiplicity == 1:
            assert abs(c(r.value)) <= 1e-8 * c.scale * (1 + abs(r.value) ** 3)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=3, max_size=3))
def test_recovers_constructed_roots(rs):
    a, b, c = sorted(rs)
    # expand (t-a)(t-b)(t-c)
    cubic = CubicCoeffs(1.0, -(a + b + c), a * b + b * c + a * c, -a * b * c)
    got = cubic_real_roots(cubic)
    expanded = [r.value for r in got for _ in range(r.multiplicity)]
    assert len(expanded) == 3
    # a root of multiplicity k is only determined to about eps**(1/k)
    np.testing.assert_allclose(expanded, [a, b, c], atol=1e-4)


@pytest.mark.parametrize("pqr, x_abs, f_min", [
    ((0, 0, 1), 0.0, 1.0),
    ((-2, 0, 1), 1.0, 0.0),
    ((-6, 0, 13), math.sqrt(3), 4.0),
])
def test_global_min_examples(pqr, x_abs, f_min):
    gm = global_min(ReducedQuartic(*pqr))
    assert abs(gm.x_star) == pytest.approx(x_abs, abs=1e-12)
    assert gm.f_min == pytest.approx(f_min, abs=1e-12)


def test_global_min_against_dense_scan(sample_1e3):
    for rq in sample_1e3[:300]:
        B = cauchy_bound(rq)
        xs = np.linspace(-1 - B, 1 + B, 10_001)
        scan = np.min(((xs * xs + rq.p) * xs * xs + rq.q * xs + rq.r))
        gm = global_min(rq)
        assert gm.f_min <= scan + 1e-9
        fprime = 4 * gm.x_star**3 + 2 * rq.p * gm.x_star + rq.q
        assert abs(fprime) <= 1e-8 * (4 + 2 * abs(rq.p) + abs(rq.q)) * (1 + abs(gm.x_star) ** 3)


@pytest.mark.parametrize("pqr, expected", [((0, 0, 1), True), ((0, 1, 0), False), ((2, 0, 1), True)])
def test_brute_positive(pqr, expected):
    assert brute_positive(ReducedQuartic(*pqr)) is expected


@pytest.mark.parametrize("coeffs, expected", [
    ((0, 1, 0, 1), 1.0),
    ((0, 1, 2, 1), 0.0),
    ((0, -1, 0, 5), -math.inf),
    ((1, 0, 0, 5), -math.inf),
    ((0, 0, 3, 1), -math.inf),
    ((0, 0, 0, 2), 2.0),
    ((0, 0, 0, 0), 0.0),
])
def test_low_degree_min(coeffs, expected):
    assert low_degree_min(coeffs) == expected
