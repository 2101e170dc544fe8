import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from convexmeans.errors import DomainError
from convexmeans.scalar import iteration_rate, iteration_rate_excess, mean_quotient, power_mean

from oracles import mp_power_mean

# values computed with mpmath at 40 digits
FROZEN = [
    (2.0, 1.0, 2.0, 1.581138830084189666),
    (-2.0, 1.0, 2.0, 1.2649110640673517328),
    (0.5, 3.0, 7.0, 4.7912878474779200033),
    (-0.5, 3.0, 7.0, 4.3829552029636799308),
    (3.0, 0.25, 4.0, 3.1750604489700022373),
    (1e-6, 2.0, 8.0, 4.0000009609061432539),
    (-1e-6, 2.0, 8.0, 3.9999990390940875812),
    (300.0, 1.0, 2.0, 1.9953843530540466377),
    (-300.0, 1.0, 2.0, 1.0023131618421728416),
    (1.0, 1e-200, 1e200, 4.9999999999999998487e199),
    (2.0, 1e200, 1e-200, 7.07106781186547503e199),
]

positive = st.floats(min_value=1e-6, max_value=1e6)
exponent = st.one_of(st.floats(min_value=-50, max_value=50), st.sampled_from([-math.inf, math.inf, 0.0]))


@pytest.mark.parametrize("p, a, b, expected", FROZEN)
def test_power_mean_frozen(p, a, b, expected):
    assert power_mean(p, a, b) == pytest.approx(expected, rel=4e-15)


def test_harmonic_mean_of_two_and_two_thirds_is_one():
    assert abs(power_mean(-1, 2.0, 2.0 / 3.0) - 1.0) <= 2.3e-16


def test_limits_and_geometric():
    assert power_mean(-math.inf, 3.0, 5.0) == 3.0
    assert power_mean(math.inf, 3.0, 5.0) == 5.0
    assert power_mean(0, 4.0, 9.0) == 6.0
    assert power_mean(7.0, math.inf, math.inf) == math.inf


def test_vectorized_matches_scalar():
    a = np.array([1.0, 2.0, 3.0])
    b = np.array([4.0, 0.5, 3.0])
    out = power_mean(1.5, a, b)
    assert out.shape == (3,)
    for x, y, z in zip(a, b, out):
        assert z == power_mean(1.5, x, y)


@pytest.mark.parametrize("args", [(1.0, 0.0, 1.0), (1.0, -1.0, 2.0), (1.0, math.nan, 1.0),
                                  (math.nan, 1.0, 1.0), (1.0, math.inf, 1.0)])
def test_domain_errors(args):
    with pytest.raises(DomainError):
        power_mean(*args)


@settings(max_examples=300, deadline=None)
@given(exponent, positive, positive)
def test_against_mpmath(p, a, b):
    assert power_mean(p, a, b) == pytest.approx(mp_power_mean(p, a, b), rel=1e-13)


@settings(max_examples=300, deadline=None)
@given(exponent, exponent, positive, positive)
def test_monotone_in_exponent(p, q, a, b):
    lo, hi = sorted((p, q))
    assert power_mean(lo, a, b) <= power_mean(hi, a, b) * (1 + 1e-15)


@settings(max_examples=300, deadline=None)
@given(exponent, positive, positive, st.floats(min_value=1.0, max_value=10.0))
def test_monotone_in_arguments_and_between_extremes(p, a, b, grow):
    m = power_mean(p, a, b)
    assert min(a, b) <= m <= max(a, b)
    assert power_mean(p, a * grow, b) >= m * (1 - 1e-15)


@settings(max_examples=300, deadline=None)
@given(exponent, positive, positive, st.floats(min_value=1e-3, max_value=1e3))
def test_homogeneous_and_symmetric(p, a, b, lam):
    assert power_mean(p, lam * a, lam * b) == pytest.approx(lam * power_mean(p, a, b), rel=1e-13)
    assert power_mean(p, a, b) == power_mean(p, b, a)


@settings(max_examples=300, deadline=None)
@given(exponent, positive, positive)
def test_inversion_identity(p, a, b):
    assert power_mean(-p, 1 / a, 1 / b) == pytest.approx(1 / power_mean(p, a, b), rel=1e-13)


def test_mean_quotient():
    assert mean_quotient(1, 0, 3.0) == pytest.approx(math.sqrt(3) / 2, rel=1e-15)
    with pytest.raises(DomainError):
        mean_quotient(1, 0, 0.0)


# R_p(i) - 1 from mpmath
@pytest.mark.parametrize("p, r, i, expected", [
    (0.0, 3.0, 1, 0.73205080756887729353),
    (0.0, 3.0, 40, 9.9918205584677575483e-13),
    (1.0, 3.0, 1, 1.0),
    (1.0, 3.0, 60, 1.7347234759768070944e-18),
    (0.5, 2.0, 20, 7.9004982792933904565e-7),
    (-0.5, 2.0, 20, 7.9004982792933904565e-7),
    (1.0, 1.0000001, 5, 3.1250000018245849276e-9),
])
def test_iteration_rate_excess(p, r, i, expected):
    assert iteration_rate_excess(p, r, i) == pytest.approx(expected, rel=1e-12)
    assert iteration_rate(p, r, i) == pytest.approx(1 + expected, rel=1e-15)


def test_iteration_rate_domain():
    with pytest.raises(DomainError):
        iteration_rate_excess(math.inf, 2.0, 1)
    with pytest.raises(DomainError):
        iteration_rate_excess(0.0, 0.5, 1)
    with pytest.raises(DomainError):
        iteration_rate_excess(0.0, 2.0, -1)
