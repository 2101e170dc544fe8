"""Planar polytope algebra on :class:`~convexmeans.bodies.Polygon`."""

import math

import numpy as np

from .bodies import TAU_GEOM, Halfspace, Polygon, gauge, polar, validate
from .errors import ContainmentError, InvalidBodyError

__all__ = [
    "convex_hull_2d",
    "halfspace_intersection_2d",
    "minkowski_sum",
    "intersect",
    "conv_union",
    "hausdorff_2d",
    "area_2d",
    "tight_containment",
    "contains",
]


def _monotone_chain(pts):
    """Andrew's monotone chain on unique sorted points; strict hull, ccw."""
    pts = [tuple(p) for p in pts]

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2:
                o, a = chain[-2], chain[-1]
                if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) <= 0:
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return np.array(lower[:-1] + upper[:-1], dtype=float).reshape(-1, 2)


# below this size the plain monotone chain is fastest
_SMALL_HULL = 256


def _star_prune(pts):
    """Hull by repeatedly discarding reflex vertices of the star polygon about the centroid.

    A reflex vertex whose neighbours span less than a half-turn lies in the
    triangle of the centroid and those neighbours, so it is not extreme; all
    such vertices can be discarded at once.  Returns None when it stalls.
    """
    c = pts.mean(axis=0)
    rel = pts - c
    ang = np.arctan2(rel[:, 1], rel[:, 0])
    rad = np.hypot(rel[:, 0], rel[:, 1])
    order = np.lexsort((-rad, ang))
    rel, ang = rel[order], ang[order]
    # on a shared ray only the farthest point can be extreme
    keep = np.concatenate([[True], np.diff(ang) > 0])
    rel = rel[keep]
    for _ in range(200):
        if len(rel) < 3:
            return None
        prev = np.roll(rel, 1, axis=0)
        nxt = np.roll(rel, -1, axis=0)
        turn = (rel[:, 0] - prev[:, 0]) * (nxt[:, 1] - rel[:, 1]) \
            - (rel[:, 1] - prev[:, 1]) * (nxt[:, 0] - rel[:, 0])
        narrow = prev[:, 0] * nxt[:, 1] - prev[:, 1] * nxt[:, 0] > 0
        drop = (turn <= 0) & narrow
        if not np.any(drop):
            if np.any(turn <= 0):
                return None
            return rel + c
        rel = rel[~drop]
    return None


def _hull_vertices(points):
    """Strict convex hull vertices, counterclockwise."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) > _SMALL_HULL:
        # exact duplicates share a ray and are discarded by the pruning
        hull = _star_prune(pts)
        if hull is not None:
            return hull
    pts = np.unique(pts, axis=0)
    if len(pts) < 3:
        return pts
    return _monotone_chain(pts)


def convex_hull_2d(points, require_origin=True):
    """Convex hull of a planar point set as a canonical polygon.

    Raises :class:`InvalidBodyError` on (near-)collinear input and, unless
    ``require_origin`` is false, when the origin is not interior to the hull.
    """
    hull = Polygon(_hull_vertices(points))
    if len(hull) < 3:
        raise InvalidBodyError("points are collinear; hull is not two-dimensional")
    if require_origin:
        dist = hull.offsets / np.linalg.norm(hull.normals, axis=1)
        if np.any(dist <= 0):
            raise InvalidBodyError("origin not interior to the hull")
    return hull


def halfspace_intersection_2d(halfspaces):
    """Intersection of halfspaces ``a . x <= b`` (all ``b > 0``) via polarity."""
    normals, offsets = _split_halfspaces(halfspaces)
    if np.any(offsets <= 0):
        raise InvalidBodyError("halfspace offsets must be positive")
    pts = normals / offsets[:, None]
    try:
        dual = convex_hull_2d(pts, require_origin=True)
    except InvalidBodyError as exc:
        raise InvalidBodyError(f"halfspace intersection is unbounded: {exc}") from exc
    return polar(dual)


def _split_halfspaces(halfspaces):
    if isinstance(halfspaces, tuple) and len(halfspaces) == 2 and not isinstance(halfspaces[0], Halfspace):
        normals, offsets = halfspaces
        return np.asarray(normals, dtype=float).reshape(-1, 2), np.asarray(offsets, dtype=float)
    normals = np.array([h.a for h in halfspaces], dtype=float).reshape(-1, 2)
    offsets = np.array([h.b for h in halfspaces], dtype=float)
    return normals, offsets


def minkowski_sum(A, B):
    """Minkowski sum by merging the two edge sequences in angular order."""
    parts = []
    starts = []
    for P in (A, B):
        v = P.vertices
        k = int(np.lexsort((v[:, 0], v[:, 1]))[0])  # lowest, then leftmost
        v = np.roll(v, -k, axis=0)
        starts.append(v[0])
        edges = np.roll(v, -1, axis=0) - v
        parts.append(edges)
    edges = np.vstack(parts)
    ang = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), 2 * math.pi)
    # edges leaving the lowest vertex have angles in [0, 2pi); keep stable ordering
    order = np.argsort(ang, kind="stable")
    steps = edges[order]
    verts = starts[0] + starts[1] + np.vstack([np.zeros(2), np.cumsum(steps, axis=0)[:-1]])
    return Polygon(verts)


def intersect(A, B):
    """A ∩ B from the union of both edge lists."""
    normals = np.vstack([A.normals, B.normals])
    offsets = np.concatenate([A.offsets, B.offsets])
    try:
        return halfspace_intersection_2d((normals, offsets))
    except InvalidBodyError as exc:
        raise InvalidBodyError(f"intersection has empty interior: {exc}") from exc


def conv_union(A, B):
    return convex_hull_2d(np.vstack([A.vertices, B.vertices]), require_origin=False)


def _normal_fan(P):
    """Edge-normal angles (sorted) and the vertex maximizing each angular sector."""
    n = P.normals
    ang = np.mod(np.arctan2(n[:, 1], n[:, 0]), 2 * math.pi)
    order = np.argsort(ang)
    ang = ang[order]
    # sector [ang_k, ang_{k+1}] is supported by the end vertex of edge order[k]
    end_vertex = P.vertices[(order + 1) % len(P.vertices)]
    return ang, end_vertex


def _maximizers(ang, end_vertex, theta):
    idx = np.searchsorted(ang, theta, side="right") - 1
    return end_vertex[idx % len(end_vertex)]


def support_gap(A, B):
    """max over unit u of h_A(u) - h_B(u), computed exactly on the merged normal fan."""
    angA, vA = _normal_fan(A)
    angB, vB = _normal_fan(B)
    breaks = np.unique(np.concatenate([angA, angB]))
    lo = breaks
    hi = np.append(breaks[1:], breaks[0] + 2 * math.pi)
    mid = np.mod(0.5 * (lo + hi), 2 * math.pi)
    d = _maximizers(angA, vA, mid) - _maximizers(angB, vB, mid)
    best = -np.inf
    for t in (lo, hi):
        u = np.column_stack([np.cos(t), np.sin(t)])
        best = max(best, float(np.max(np.einsum("ij,ij->i", d, u))))
    # interior maximum where u points along d
    phi = np.arctan2(d[:, 1], d[:, 0])
    phi = lo + np.mod(phi - lo, 2 * math.pi)
    inside = phi < hi
    if np.any(inside):
        best = max(best, float(np.max(np.linalg.norm(d[inside], axis=1))))
    return best


def hausdorff_2d(A, B):
    """Hausdorff distance, as the sup-norm of h_A - h_B on the unit circle."""
    return max(0.0, support_gap(A, B), support_gap(B, A))


def area_2d(P):
    v = P.vertices
    nxt = np.roll(v, -1, axis=0)
    return 0.5 * float(np.sum(v[:, 0] * nxt[:, 1] - v[:, 1] * nxt[:, 0]))


def contains(outer, inner, tol=TAU_GEOM):
    """Vertexwise containment test ``inner ⊂ outer`` up to ``tol`` in gauge."""
    return bool(np.max(gauge(outer, inner.vertices)) <= 1.0 + tol)


def tight_containment(A, B, tol=TAU_GEOM):
    """True iff ``A ⊂ B`` and the two share a boundary point."""
    top = float(np.max(gauge(B, A.vertices)))
    if top > 1.0 + tol:
        raise ContainmentError(f"A is not contained in B (max gauge {top:.12g})")
    return top >= 1.0 - tol


def is_valid(P):
    return not validate(P)
