import math

import numpy as np
import pytest

from convexmeans.bodies import HVBody, Polygon, gauge, negate, scale, support, validate
from convexmeans.constructions import (
    b1,
    b2_approx,
    b2_approx_error,
    b_inf,
    ball_poly,
    bm_pentagon,
    cross_body,
    nonstrict_lower_pair,
    regular_triangle,
    shifted_boxes,
    shifted_cube,
    triangle_family,
)
from convexmeans.containment import minkowski_asymmetry, optimal_containment_certificate, r0_max
from convexmeans.errors import DomainError
from convexmeans.means import lower_mean_2d
from convexmeans.polygon_ops import area_2d

from oracles import area_ref, facets


def test_regular_triangle():
    T = regular_triangle()
    assert minkowski_asymmetry(T).s == pytest.approx(2.0)
    assert np.allclose(minkowski_asymmetry(T).center, 0, atol=1e-12)
    assert support(T, np.array([0.0, 1.0])) == 2.0
    assert area_2d(T) == pytest.approx(3 * math.sqrt(3))


@pytest.mark.parametrize("R", [1.0, 1.5, 3.0, 10.0])
def test_cross_body(R):
    K = cross_body(2, R)
    assert K.almost_equal(Polygon([(1, 1), (-1, 1), (-R, -R), (R, -R)]))
    assert r0_max(K, negate(K)) == pytest.approx(R)
    C = cross_body(3, R)
    assert isinstance(C, HVBody) and validate(C) == []
    assert len(C.vertices) == 8
    # the listed facets agree with scipy's hull of the vertices
    if R > 1:
        a, b = facets(C.vertices)
        mine = C.normals / C.offsets[:, None]
        # scipy splits facets into triangles, so its rows repeat
        ref = np.unique(np.round(a / b[:, None], 12), axis=0)
        assert len(mine) == len(ref)
        for row in ref:
            assert np.min(np.linalg.norm(mine - row, axis=1)) <= 1e-12
    with pytest.raises(DomainError):
        cross_body(2, 0.5)


@pytest.mark.parametrize("R", [1.0, 2.0, 5.0])
def test_shifted_cube(R):
    K = shifted_cube(2, R)
    if R == 1.0:
        assert K.almost_equal(b_inf())
    assert r0_max(K, negate(K)) == pytest.approx(R)
    u1 = np.array([1.0, 0.0])
    assert gauge(negate(K), u1) == pytest.approx(1.0) and gauge(K, u1) == pytest.approx(1.0)
    C = shifted_cube(3, R)
    assert validate(C) == [] and r0_max(C, negate(C)) == pytest.approx(R)


def test_nonstrict_lower_pair():
    g = 16 / 9
    K, Kp = nonstrict_lower_pair(2, g)
    assert gauge(K, np.array([g, 1.0])) == pytest.approx(g + 1)
    assert area_2d(Kp) < area_2d(K)
    assert lower_mean_2d(Kp, negate(Kp), 0.0).almost_equal(lower_mean_2d(K, negate(K), 0.0), tol=1e-12)
    K3, Kp3 = nonstrict_lower_pair(3, g)
    assert validate(K3) == [] and validate(Kp3) == []
    assert np.max(gauge(K3, Kp3.vertices)) <= 1 + 1e-12
    with pytest.raises(DomainError):
        nonstrict_lower_pair(2, 2.5)
    with pytest.raises(DomainError):
        nonstrict_lower_pair(2, 0.5, p=-5.0)


def test_pentagon():
    P = bm_pentagon()
    assert np.max(np.linalg.norm(negate(P).vertices, axis=1)) == pytest.approx(6.0)
    res = minkowski_asymmetry(P)
    assert res.s == pytest.approx(1.5) and np.allclose(res.center, 0, atol=1e-12)
    assert optimal_containment_certificate(negate(P), scale(P, 1.5)) is not None


def test_shifted_boxes_are_symmetric_about_the_same_point():
    K, L = shifted_boxes()
    c = np.array([0.0, 2.0])
    for B in (K, L):
        assert Polygon(2 * c - B.vertices).almost_equal(B)


@pytest.mark.parametrize("r", [1.0, 1.3, 1.5, 1.7, 2.0])
def test_triangle_family(r):
    K = triangle_family(r)
    assert minkowski_asymmetry(K).s == pytest.approx(r, abs=1e-9)
    assert len(K) == (3 if r == 2.0 else 6)
    if r == 2.0:
        assert K.almost_equal(regular_triangle())
    with pytest.raises(DomainError):
        triangle_family(2.5)


def test_balls():
    assert sorted(map(tuple, b1().vertices.tolist())) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert sorted(map(tuple, b_inf().vertices.tolist())) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert b2_approx_error(4096) <= 3e-7
    D = b2_approx(4096)
    assert area_2d(D) == pytest.approx(area_ref(D.vertices), rel=1e-13)
    assert ball_poly("B1").almost_equal(b1()) and len(ball_poly("b2", 128)) == 128
    with pytest.raises(DomainError):
        b2_approx(10)
    with pytest.raises(DomainError):
        ball_poly("b3")
