"""Reference computations that share no code with the package.

Hulls, halfspace intersections and LPs come from scipy, power means from
mpmath; the means are built straight from their defining formulas on dense
direction sets.
"""

import math

import mpmath
import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection


def mp_power_mean(p, a, b, dps=40):
    if p not in (0, math.inf, -math.inf):
        dps += int(max(0.0, -math.log10(abs(p))))  # a^p - 1 is of size p
    with mpmath.workdps(dps):
        a, b = mpmath.mpf(a), mpmath.mpf(b)
        if p == -math.inf:
            return float(min(a, b))
        if p == math.inf:
            return float(max(a, b))
        if p == 0:
            return float(mpmath.sqrt(a * b))
        p = mpmath.mpf(p)
        return float(((a ** p + b ** p) / 2) ** (1 / p))


def hull_ccw(points):
    pts = np.asarray(points, dtype=float)
    return pts[ConvexHull(pts).vertices]  # scipy returns 2d hulls counterclockwise


def facets(vertices):
    """Outer facet normals and offsets (a . x <= b) of the hull of ``vertices``."""
    eq = ConvexHull(np.asarray(vertices, dtype=float)).equations
    return eq[:, :-1], -eq[:, -1]


def gauge_ref(vertices, x):
    a, b = facets(vertices)
    return np.maximum((np.atleast_2d(x) @ a.T / b).max(axis=1), 0.0)


def support_ref(vertices, u):
    return (np.atleast_2d(u) @ np.asarray(vertices, dtype=float).T).max(axis=1)


def circle(n, offset=0.5):
    t = (np.arange(n) + offset) * (2 * math.pi / n)
    return np.column_stack([np.cos(t), np.sin(t)])


def hausdorff_ref(A, B, n=200_000):
    """Sampled sup |h_A - h_B| on the circle plus all facet normals.

    h_A - h_B is smooth between facet normals, so with those directions included
    the sample maximum is a lower bound accurate to O(size / n^2).
    """
    normals = np.vstack([facets(A)[0], facets(B)[0]])
    u = np.vstack([circle(n), normals / np.linalg.norm(normals, axis=1)[:, None]])
    return float(np.max(np.abs(support_ref(A, u) - support_ref(B, u))))


def power_means_ref(p, a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if p == 0:
        return np.sqrt(a * b)
    if p == math.inf:
        return np.maximum(a, b)
    if p == -math.inf:
        return np.minimum(a, b)
    return ((a ** p + b ** p) / 2) ** (1 / p)


def lower_mean_ref(K, L, q, n=20_000):
    """Inner approximation: hull of directions rescaled to the lower q-mean boundary."""
    u = circle(n)
    r = power_means_ref(-q, gauge_ref(K, u), gauge_ref(L, u))
    return hull_ccw(u / r[:, None])


def upper_mean_ref(K, L, p, n=20_000):
    """Outer approximation: the halfspaces u . x <= m_p(h_K(u), h_L(u))."""
    u = circle(n)
    h = power_means_ref(p, support_ref(K, u), support_ref(L, u))
    hs = HalfspaceIntersection(np.column_stack([u, -h]), np.zeros(2))
    return hull_ccw(hs.intersections)


def area_ref(vertices):
    return float(ConvexHull(np.asarray(vertices, dtype=float)).volume)


def lp_ref(c, G, h):
    """min c . z subject to G z <= h with free z."""
    res = linprog(c, A_ub=G, b_ub=h, bounds=[(None, None)] * len(c), method="highs")
    return res


def random_convex_polygon(rng, k=None):
    """Hull of points in an annulus around the origin; origin well inside."""
    while True:
        k = k or int(rng.integers(5, 13))
        r = rng.uniform(0.5, 1.5, k)
        t = rng.uniform(0, 2 * math.pi, k)
        pts = np.column_stack([r * np.cos(t), r * np.sin(t)])
        hull = ConvexHull(pts)
        eq = hull.equations
        if np.all(-eq[:, -1] > 0.1):
            return pts[hull.vertices]
