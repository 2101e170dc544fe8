import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from convexmeans.bodies import Polygon, scale, validate
from convexmeans.constructions import b1, b_inf, regular_triangle
from convexmeans.errors import ContainmentError, InvalidBodyError
from convexmeans.polygon_ops import (
    area_2d,
    contains,
    conv_union,
    convex_hull_2d,
    halfspace_intersection_2d,
    hausdorff_2d,
    intersect,
    minkowski_sum,
    tight_containment,
)

from oracles import area_ref, circle, hausdorff_ref, hull_ccw, random_convex_polygon

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _pair(seed):
    rng = np.random.default_rng(seed)
    return random_convex_polygon(rng), random_convex_polygon(rng)


def _same(P, V, tol=1e-9):
    return P.almost_equal(Polygon(V), tol=tol)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_hull_matches_scipy(seed):
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(40, 2))
    pts -= pts.mean(axis=0)
    assert _same(convex_hull_2d(pts), hull_ccw(pts))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_minkowski_sum_matches_pairwise_hull(seed):
    A, B = _pair(seed)
    sums = (A[:, None, :] + B[None, :, :]).reshape(-1, 2)
    assert _same(minkowski_sum(Polygon(A), Polygon(B)), hull_ccw(sums))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_intersection_union_and_area(seed):
    A, B = _pair(seed)
    PA, PB = Polygon(A), Polygon(B)
    I = intersect(PA, PB)
    U = conv_union(PA, PB)
    assert _same(U, hull_ccw(np.vstack([A, B])))
    assert area_2d(U) == pytest.approx(area_ref(np.vstack([A, B])), rel=1e-12)
    # the intersection's vertices lie in both, and both contain it tightly
    assert contains(PA, I) and contains(PB, I)
    assert area_2d(I) <= min(area_2d(PA), area_2d(PB)) + 1e-12
    shrunk = scale(I, 1.0 + 1e-6)
    assert not (contains(PA, shrunk, tol=0) and contains(PB, shrunk, tol=0))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_hausdorff_against_dense_support(seed):
    A, B = _pair(seed)
    exact = hausdorff_2d(Polygon(A), Polygon(B))
    sampled = hausdorff_ref(A, B)
    assert sampled <= exact + 1e-12
    assert exact - sampled <= 1e-9


def test_hausdorff_known_values():
    assert hausdorff_2d(b_inf(), scale(b_inf(), 2.0)) == pytest.approx(math.sqrt(2))
    assert hausdorff_2d(b1(), b_inf()) == pytest.approx(math.sqrt(0.5))
    T = regular_triangle()
    assert hausdorff_2d(T, T) == 0.0


def test_halfspace_intersection():
    a = circle(8, offset=0.0)
    P = halfspace_intersection_2d((a, np.ones(8)))
    assert len(P) == 8
    assert area_2d(P) == pytest.approx(8 * math.tan(math.pi / 8), rel=1e-14)
    with pytest.raises(InvalidBodyError):
        halfspace_intersection_2d((np.array([[1.0, 0.0], [-1.0, 0.0]]), np.ones(2)))
    with pytest.raises(InvalidBodyError):
        halfspace_intersection_2d((np.array([[1.0, 0.0]]), np.array([-1.0])))


def test_hull_errors():
    with pytest.raises(InvalidBodyError):
        convex_hull_2d([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(InvalidBodyError):
        convex_hull_2d([(1, 1), (2, 1), (2, 2)])
    assert validate(convex_hull_2d([(1, 1), (2, 1), (2, 2)], require_origin=False)) != []


def test_tight_containment():
    assert tight_containment(b1(), b_inf())
    assert not tight_containment(scale(b1(), 0.5), b_inf())
    with pytest.raises(ContainmentError):
        tight_containment(b_inf(), b1())
