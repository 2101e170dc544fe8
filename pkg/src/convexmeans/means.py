"""Upper and lower p-means of planar convex bodies.

The exact constructions work on polygons.  The lower q-mean for
``q in {-inf} ∪ [-1, inf]`` is the hull of the vertices of both operands, each
rescaled onto the mean's boundary through the (-q)-mean of its two gauges.  The
upper p-mean for ``p in [-inf, 1] ∪ {inf}`` follows by polarity.  Outside those
ranges only one-sided grid approximations are offered.
"""

from dataclasses import dataclass
import math

import numpy as np

from .bodies import TAU_GEOM, Polygon, gauge, polar, support
from .errors import DomainError, UnsupportedExactError
from .polygon_ops import conv_union, convex_hull_2d, halfspace_intersection_2d, intersect
from .scalar import check_exponent, power_mean

__all__ = [
    "UPPER",
    "LOWER",
    "MeanSpec",
    "DirectionGrid",
    "default_grid",
    "cone_ray_directions_2d",
    "lower_mean_2d",
    "upper_mean_2d",
    "upper_support_oracle",
    "lower_gauge_oracle",
    "upper_mean_sampled",
    "lower_mean_sampled",
    "upper_mean_inner_sampled",
    "lower_mean_outer_sampled",
    "mean_dispatch",
    "mean",
    "common_boundary_predicate",
    "normal_cone_2d",
]

UPPER = "upper"
LOWER = "lower"

_TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class MeanSpec:
    """A mean kind together with its exponent."""

    kind: str
    p: float

    def __post_init__(self):
        if self.kind not in (UPPER, LOWER):
            raise DomainError(f"unknown mean kind {self.kind!r}")
        object.__setattr__(self, "p", check_exponent(self.p))

    @classmethod
    def dispatch(cls, p):
        p = check_exponent(p)
        if p == 0:
            raise DomainError("p = 0 is ambiguous; choose the upper or lower 0-mean")
        return cls(UPPER if p > 0 else LOWER, p)


@dataclass(frozen=True)
class DirectionGrid:
    """Unit directions used to discretize 'for all directions'."""

    dim: int
    directions: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.directions, dtype=float).reshape(-1, self.dim)
        d = d / np.linalg.norm(d, axis=1)[:, None]
        d.setflags(write=False)
        object.__setattr__(self, "directions", d)

    def __len__(self):
        return len(self.directions)


def _unique_angles(dirs):
    ang = np.mod(np.arctan2(dirs[:, 1], dirs[:, 0]), _TWO_PI)
    ang = np.sort(np.concatenate([ang, np.mod(ang + math.pi, _TWO_PI)]))
    keep = np.concatenate([[True], np.diff(ang) > 1e-13])
    return ang[keep]


def default_grid(*bodies, n_angles=2048):
    """Equally spaced angles plus the bodies' vertex directions and edge normals.

    The grid is antipodally symmetric and contains the standard basis.
    """
    t = np.arange(n_angles) * (_TWO_PI / n_angles)
    parts = [np.column_stack([np.cos(t), np.sin(t)]), np.eye(2)]
    for body in bodies:
        parts.append(body.vertices)
        parts.append(body.normals)
    ang = _unique_angles(np.vstack(parts))
    return DirectionGrid(2, np.column_stack([np.cos(ang), np.sin(ang)]))


def _as_grid(grid, K, L):
    if grid is None:
        return default_grid(K, L)
    if isinstance(grid, DirectionGrid):
        return grid
    if isinstance(grid, (int, np.integer)):
        return default_grid(K, L, n_angles=int(grid))
    return DirectionGrid(2, grid)


def _arc(u, v):
    """Counterclockwise arc from direction ``u`` to ``v`` as (start, width)."""
    s = math.atan2(u[1], u[0]) % _TWO_PI
    w = (math.atan2(v[1], v[0]) - s) % _TWO_PI
    return s, w


def _arc_overlap(a, b, slack=0.0):
    """Intersection of two arcs of width < pi; (start, width) or None."""
    s1, w1 = a
    s2, w2 = b
    for d in ((s2 - s1) % _TWO_PI, (s2 - s1) % _TWO_PI - _TWO_PI):
        lo = max(0.0, d)
        hi = min(w1, d + w2)
        if hi >= lo - slack:
            return (s1 + lo) % _TWO_PI, max(hi - lo, 0.0)
    return None


def _unit(theta):
    return np.array([math.cos(theta), math.sin(theta)])


def cone_ray_directions_2d(f_edge, e_edge):
    """Extreme-ray directions of pos(F) ∩ pos(E) for two edges not through 0.

    Each edge is a pair of points listed counterclockwise about the origin.
    Returns 0, 1 or 2 unit vectors.
    """
    arcs = []
    for p0, p1 in (f_edge, e_edge):
        p0 = np.asarray(p0, dtype=float)
        p1 = np.asarray(p1, dtype=float)
        if p0[0] * p1[1] - p0[1] * p1[0] < 0:
            p0, p1 = p1, p0
        arcs.append(_arc(p0, p1))
    hit = _arc_overlap(arcs[0], arcs[1])
    if hit is None:
        return []
    start, width = hit
    if width <= 1e-15:
        return [_unit(start)]
    return [_unit(start), _unit(start + width)]


def _check_polygons(K, L):
    if not (isinstance(K, Polygon) and isinstance(L, Polygon)):
        raise DomainError("exact planar means need Polygon operands")


def lower_mean_2d(K, L, q):
    """Exact lower q-mean of two polygons for q = -inf or q >= -1."""
    _check_polygons(K, L)
    q = check_exponent(q)
    if q == -math.inf:
        return intersect(K, L)
    if q < -1:
        raise UnsupportedExactError(
            f"lower mean with q = {q} < -1 is not polytopal; use lower_mean_sampled")
    pts = np.vstack([K.vertices, L.vertices])
    scale = power_mean(-q, gauge(K, pts), gauge(L, pts))
    return convex_hull_2d(pts / scale[:, None])


def upper_mean_2d(K, L, p):
    """Exact upper p-mean of two polygons for p <= 1 or p = inf."""
    _check_polygons(K, L)
    p = check_exponent(p)
    if p == math.inf:
        return conv_union(K, L)
    if p == -math.inf:
        return intersect(K, L)
    if p > 1:
        raise UnsupportedExactError(
            f"upper mean with p = {p} > 1 is not polytopal in general; use upper_mean_sampled")
    return polar(lower_mean_2d(polar(K), polar(L), -p))


def upper_support_oracle(K, L, p, a):
    """Support value of the upper p-mean in direction ``a`` (exact for p >= 1)."""
    p = check_exponent(p)
    if p < 1:
        raise DomainError("the support oracle is exact only for p >= 1")
    a = np.asarray(a, dtype=float)
    if not np.any(a):
        return 0.0
    return power_mean(p, support(K, a), support(L, a))


def lower_gauge_oracle(K, L, q, x):
    """Gauge value of the lower q-mean at ``x`` (exact for q <= -1)."""
    q = check_exponent(q)
    if q > -1:
        raise DomainError("the gauge oracle is exact only for q <= -1")
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        return 0.0
    return power_mean(-q, gauge(K, x), gauge(L, x))


def upper_mean_sampled(K, L, p, grid=None, with_exact=False):
    """Outer approximation of the upper p-mean from grid halfspaces.

    For p >= 1 every halfspace is a true supporting halfspace, so the result
    contains the mean and matches the oracle at every grid direction.  For
    p < 1 the offsets overestimate the support and the result is a superset.
    With ``with_exact`` a pair ``(approx, exact)`` is returned, where ``exact``
    is the exact body when available and None otherwise.
    """
    _check_polygons(K, L)
    p = check_exponent(p)
    g = _as_grid(grid, K, L)
    d = g.directions
    offsets = power_mean(p, support(K, d), support(L, d))
    body = halfspace_intersection_2d((d, offsets))
    if not with_exact:
        return body
    exact = upper_mean_2d(K, L, p) if (p <= 1 or p == math.inf) else None
    return body, exact


def lower_mean_sampled(K, L, q, grid=None):
    """Inner approximation of the lower q-mean: hull of rescaled grid directions."""
    _check_polygons(K, L)
    q = check_exponent(q)
    g = _as_grid(grid, K, L)
    d = g.directions
    scale = power_mean(-q, gauge(K, d), gauge(L, d))
    return convex_hull_2d(d / scale[:, None])


def _mean_weights(r, s, t):
    """Partial derivatives of m_r at (s, t) for finite r != 0."""
    m = power_mean(r, s, t)
    return 0.5 * (s / m) ** (r - 1.0), 0.5 * (t / m) ** (r - 1.0)


def _finite_nonzero(r, what):
    if math.isinf(r) or r == 0:
        raise DomainError(f"{what} needs a finite nonzero exponent")


def upper_mean_inner_sampled(K, L, p, grid=None):
    """Inner approximation of the upper p-mean for p >= 1: hull of boundary points.

    For p >= 1 the support function is m_p(h_K, h_L), and its gradient at a
    grid direction, a weighted sum of the touching vertices of K and L, is a
    point of the mean on its boundary.
    """
    _check_polygons(K, L)
    p = check_exponent(p)
    _finite_nonzero(p, "upper_mean_inner_sampled")
    if p < 1:
        raise DomainError("boundary points of the upper mean are known only for p >= 1")
    d = _as_grid(grid, K, L).directions
    xk = K.vertices[np.argmax(d @ K.vertices.T, axis=1)]
    xl = L.vertices[np.argmax(d @ L.vertices.T, axis=1)]
    wk, wl = _mean_weights(p, np.einsum("ij,ij->i", d, xk), np.einsum("ij,ij->i", d, xl))
    return convex_hull_2d(wk[:, None] * xk + wl[:, None] * xl)


def lower_mean_outer_sampled(K, L, q, grid=None):
    """Outer approximation of the lower q-mean for q <= -1 from supporting lines.

    The gauge is m_{-q}(g_K, g_L), a convex function; its gradient at a
    boundary point gives a halfspace containing the whole mean.
    """
    _check_polygons(K, L)
    q = check_exponent(q)
    _finite_nonzero(q, "lower_mean_outer_sampled")
    if q > -1:
        raise DomainError("supporting lines of the lower mean are known only for q <= -1")
    d = _as_grid(grid, K, L).directions
    gk, gl = gauge(K, d), gauge(L, d)
    y = d / power_mean(-q, gk, gl)[:, None]
    ak = K.normals / K.offsets[:, None]
    al = L.normals / L.offsets[:, None]
    fk = ak[np.argmax(y @ ak.T, axis=1)]
    fl = al[np.argmax(y @ al.T, axis=1)]
    wk, wl = _mean_weights(-q, gk, gl)
    grad = wk[:, None] * fk + wl[:, None] * fl
    return halfspace_intersection_2d((grad, np.ones(len(grad))))


def mean(K, L, spec, grid=None):
    """Evaluate a :class:`MeanSpec`, exactly where possible and sampled otherwise."""
    p = spec.p
    if spec.kind == UPPER:
        if p <= 1 or p == math.inf:
            return upper_mean_2d(K, L, p)
        return upper_mean_sampled(K, L, p, grid)
    if p >= -1 or p == -math.inf:
        return lower_mean_2d(K, L, p)
    return lower_mean_sampled(K, L, p, grid)


def mean_dispatch(K, L, p, grid=None):
    """Upper mean for p > 0, lower mean for p < 0; p = 0 is refused."""
    return mean(K, L, MeanSpec.dispatch(p), grid)


def normal_cone_2d(P, y, tol=TAU_GEOM):
    """Normal cone of polygon ``P`` at boundary point ``y`` as an arc (start, width)."""
    y = np.asarray(y, dtype=float)
    vals = (P.normals @ y) / P.offsets
    active = np.flatnonzero(vals >= np.max(vals) - tol)
    n = P.normals[active]
    if len(active) == 1:
        return _arc(n[0], n[0])
    ang = np.sort(np.mod(np.arctan2(n[:, 1], n[:, 0]), _TWO_PI))
    gaps = np.diff(np.append(ang, ang[0] + _TWO_PI))
    k = int(np.argmax(gaps))
    start = ang[(k + 1) % len(ang)]
    width = _TWO_PI - gaps[k]
    return float(start), float(width)


def common_boundary_predicate(K, L, p, x, tol=TAU_GEOM):
    """Do the normal cones of K and L at their boundary points along ``x`` meet?

    Returns ``(flag, witness)`` where ``witness`` is a shared unit outer normal
    (or None).  For finite p this is exactly the condition under which the
    lower and upper p-means have the same gauge at ``x``.
    """
    _check_polygons(K, L)
    p = check_exponent(p)
    if math.isinf(p):
        raise DomainError("the predicate is stated for finite p")
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        raise DomainError("direction must be nonzero")
    yk = x / gauge(K, x)
    yl = x / gauge(L, x)
    hit = _arc_overlap(normal_cone_2d(K, yk, tol), normal_cone_2d(L, yl, tol), slack=tol)
    if hit is None:
        return False, None
    start, width = hit
    return True, _unit(start + width / 2)
