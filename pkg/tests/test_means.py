import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from convexmeans.bodies import Polygon, gauge, negate, polar, support
from convexmeans.constructions import b_inf, cross_body, regular_triangle
from convexmeans.errors import DomainError, UnsupportedExactError
from convexmeans.means import (
    MeanSpec,
    common_boundary_predicate,
    cone_ray_directions_2d,
    default_grid,
    lower_mean_2d,
    lower_mean_outer_sampled,
    lower_mean_sampled,
    lower_gauge_oracle,
    mean,
    mean_dispatch,
    upper_mean_2d,
    upper_mean_inner_sampled,
    upper_mean_sampled,
    upper_support_oracle,
)
from convexmeans.polygon_ops import contains, hausdorff_2d

from oracles import lower_mean_ref, random_convex_polygon, upper_mean_ref

seeds = st.integers(min_value=0, max_value=2**32 - 1)
EXACT_UPPER = [-math.inf, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, math.inf]
EXACT_LOWER = [-math.inf, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, math.inf]
S3, S32, S12 = math.sqrt(3), math.sqrt(1.5), math.sqrt(0.5)
# dense definitions cut corners to first order: error about diameter * 2 pi / n
REF_N = 200_000
REF_TOL = 3e-5


def _pair(seed):
    rng = np.random.default_rng(seed)
    return Polygon(random_convex_polygon(rng)), Polygon(random_convex_polygon(rng))


def test_triangle_arithmetic_mean_hexagon():
    # known value: the hexagon drawn for the arithmetic mean of the triangle and its negative
    T = regular_triangle()
    got = upper_mean_2d(T, negate(T), 1.0)
    want = Polygon([(-S3, 0), (-S3 / 2, -1.5), (S3 / 2, -1.5), (S3, 0), (S3 / 2, 1.5), (-S3 / 2, 1.5)])
    assert got.almost_equal(want, tol=1e-9)


def test_triangle_lower_zero_mean_hexagon():
    # known value: the lower 0-mean of the same pair
    T = regular_triangle()
    got = lower_mean_2d(T, negate(T), 0.0)
    want = Polygon([(0, -math.sqrt(2)), (S32, -S12), (S32, S12), (0, math.sqrt(2)), (-S32, S12), (-S32, -S12)])
    assert got.almost_equal(want, tol=1e-9)


def _power_curve_points(p, corners, n=200):
    """Boundary of the upper p-mean of the triangle pair, as drawn for p = 3."""
    lo = 1 / (2 ** (p - 1) + 1)
    t = np.linspace(lo, 1 - lo, n)
    den = 2 ** (1 / p) * (t ** (p / (p - 1)) + (1 - t) ** (p / (p - 1))) ** ((p - 1) / p)
    pieces = []
    for fx, fy in corners:
        pieces.append(np.column_stack([fx(t) / den, fy(t) / den]))
    return np.vstack(pieces)


def test_triangle_upper_three_mean_curve_is_bracketed():
    # known value: parametric boundary of upper_3(T, -T), checked against the one-sided brackets
    T = regular_triangle()
    corners = [
        (lambda t: -S3 * (1 - t), lambda t: -(1 - t) - 2 * t),
        (lambda t: S3 * t, lambda t: -2 * (1 - t) - t),
        (lambda t: S3 + 0 * t, lambda t: 2 * t - 1),
        (lambda t: S3 * (1 - t), lambda t: (1 - t) + 2 * t),
        (lambda t: -S3 * t, lambda t: 2 * (1 - t) + t),
        (lambda t: -S3 + 0 * t, lambda t: -t + (1 - t)),
    ]
    pts = _power_curve_points(3.0, corners)
    outer = upper_mean_sampled(T, negate(T), 3.0)
    inner = upper_mean_inner_sampled(T, negate(T), 3.0)
    assert np.max(gauge(outer, pts)) <= 1 + 1e-12
    assert np.min(gauge(inner, pts)) >= 1 - 1e-5
    assert contains(outer, inner)


def test_cross_body_figure():
    # known value: R = 3, p = 2, q = 1: lower_1 is 2 B_inf, upper_2 has corners (±√5, ±√5)
    K = cross_body(2, 3.0)
    low = lower_mean_2d(K, negate(K), 1.0)
    assert low.almost_equal(Polygon(2.0 * b_inf().vertices), tol=1e-12)
    up = upper_mean_sampled(K, negate(K), 2.0)
    corner = math.sqrt(5.0)
    assert gauge(up, np.array([corner, corner])) == pytest.approx(1.0, abs=1e-12)
    t = np.linspace(0.25, 0.75, 50)
    den = 2 ** 0.5 * (t ** 2 + (1 - t) ** 2) ** 0.5
    curve = np.column_stack([3 / den, (6 * t - 3) / den])
    assert np.max(gauge(up, curve)) <= 1 + 1e-12
    inner = upper_mean_inner_sampled(K, negate(K), 2.0)
    assert np.min(gauge(inner, curve)) >= 1 - 1e-5


@pytest.mark.parametrize("p", EXACT_UPPER)
def test_upper_mean_against_halfspace_definition(p):
    K, L = _pair(11)
    exact = upper_mean_2d(K, L, p)
    ref = Polygon(upper_mean_ref(K.vertices, L.vertices, p, n=REF_N))
    assert contains(ref, exact, tol=1e-12)
    assert hausdorff_2d(exact, ref) <= REF_TOL


@pytest.mark.parametrize("q", EXACT_LOWER)
def test_lower_mean_against_ray_definition(q):
    K, L = _pair(12)
    exact = lower_mean_2d(K, L, q)
    ref = Polygon(lower_mean_ref(K.vertices, L.vertices, q, n=REF_N))
    assert contains(exact, ref, tol=1e-12)
    assert hausdorff_2d(exact, ref) <= REF_TOL


@pytest.mark.parametrize("p", [1.5, 2.0, 4.0])
def test_sampled_means_bracket_the_definition(p):
    K, L = _pair(13)
    grid = default_grid(K, L, n_angles=4096)
    outer = upper_mean_sampled(K, L, p, grid)
    inner = upper_mean_inner_sampled(K, L, p, grid)
    ref = Polygon(upper_mean_ref(K.vertices, L.vertices, p, n=REF_N))
    # both outer approximations contain the mean, which contains the inner one
    assert contains(outer, inner) and contains(ref, inner, tol=1e-12)
    assert hausdorff_2d(outer, inner) <= 1e-5
    assert hausdorff_2d(outer, ref) <= REF_TOL
    low_in = lower_mean_sampled(K, L, -p, grid)
    low_out = lower_mean_outer_sampled(K, L, -p, grid)
    low_ref = Polygon(lower_mean_ref(K.vertices, L.vertices, -p, n=REF_N))
    assert contains(low_out, low_ref, tol=1e-12) and contains(low_out, low_in)
    assert hausdorff_2d(low_in, low_out) <= 1e-5
    assert hausdorff_2d(low_in, low_ref) <= REF_TOL


def test_oracles_exact_at_grid_directions():
    K, L = _pair(14)
    grid = default_grid(K, L, n_angles=256)
    outer = upper_mean_sampled(K, L, 2.0, grid)
    d = grid.directions[::7]
    assert np.allclose(support(outer, d), [upper_support_oracle(K, L, 2.0, u) for u in d], rtol=1e-12)
    inner = lower_mean_sampled(K, L, -2.0, grid)
    assert np.allclose(gauge(inner, d), [lower_gauge_oracle(K, L, -2.0, u) for u in d], rtol=1e-12)


@settings(max_examples=25, deadline=None)
@given(seeds, st.sampled_from([-1.0, -0.5, 0.0, 0.5, 1.0]))
def test_polarity_swaps_upper_and_lower(seed, p):
    K, L = _pair(seed)
    lhs = polar(upper_mean_2d(K, L, p))
    rhs = lower_mean_2d(polar(K), polar(L), -p)
    assert hausdorff_2d(lhs, rhs) <= 1e-9


@settings(max_examples=25, deadline=None)
@given(seeds, st.sampled_from([-1.0, -0.5, 0.0, 0.5, 1.0]))
def test_lower_inside_upper_and_ordering(seed, p):
    K, L = _pair(seed)
    low, up = lower_mean_2d(K, L, p), upper_mean_2d(K, L, p)
    assert contains(up, low)
    assert contains(upper_mean_2d(K, L, 1.0), up)
    assert contains(low, lower_mean_2d(K, L, -1.0))


def test_dilatates_give_equal_means():
    T = regular_triangle()
    T2 = Polygon(2 * T.vertices)
    for p in (0.0, 0.5, -0.5):
        assert hausdorff_2d(upper_mean_2d(T, T2, p), lower_mean_2d(T, T2, p)) <= 1e-12


def test_dispatch_and_errors():
    K, L = _pair(15)
    assert mean_dispatch(K, L, 0.5).almost_equal(upper_mean_2d(K, L, 0.5))
    assert mean_dispatch(K, L, -0.5).almost_equal(lower_mean_2d(K, L, -0.5))
    assert isinstance(mean(K, L, MeanSpec("upper", 2.0)), Polygon)
    with pytest.raises(DomainError):
        MeanSpec.dispatch(0.0)
    with pytest.raises(DomainError):
        MeanSpec("middle", 1.0)
    with pytest.raises(UnsupportedExactError):
        upper_mean_2d(K, L, 2.0)
    with pytest.raises(UnsupportedExactError):
        lower_mean_2d(K, L, -2.0)
    with pytest.raises(DomainError):
        upper_support_oracle(K, L, 0.5, np.array([1.0, 0.0]))


def test_cone_rays():
    rays = cone_ray_directions_2d(((1, -1), (1, 1)), ((1, 0), (0, 1)))
    assert len(rays) == 2
    assert np.allclose(rays[0], [1, 0]) and np.allclose(rays[1], [S12, S12])
    assert cone_ray_directions_2d(((1, -1), (1, 1)), ((-1, 1), (-1, -1))) == []


def test_common_boundary_predicate():
    T = regular_triangle()
    # along the x-axis both hit edge interiors with normals at +30 and -30 degrees
    flag, w = common_boundary_predicate(T, negate(T), 0.0, np.array([1.0, 0.0]))
    assert not flag and w is None
    # the top vertex of T has (0, 1) in its normal cone, the top edge of -T has normal (0, 1)
    flag, w = common_boundary_predicate(T, negate(T), 0.0, np.array([0.0, 1.0]))
    assert flag and np.allclose(w, [0.0, 1.0])
    flag, w = common_boundary_predicate(T, Polygon(2 * T.vertices), 0.0, np.array([0.3, 1.0]))
    assert flag
