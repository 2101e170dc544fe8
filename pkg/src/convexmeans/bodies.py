"""Convex bodies with the origin in their interior.

Two representations are provided.  :class:`Polygon` is an exact planar body
stored as a canonical counterclockwise vertex list; its edge halfspaces are
derived.  :class:`HVBody` carries a vertex list and a halfspace list side by
side and only checks that they agree, which is how higher-dimensional
constructions enter the library.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError, InvalidBodyError

__all__ = [
    "TAU_GEOM",
    "TAU_INT",
    "TAU_REG",
    "Halfspace",
    "Polygon",
    "HVBody",
    "LinearMap",
    "support",
    "gauge",
    "polar",
    "transform",
    "negate",
    "scale",
    "validate",
]

TAU_GEOM = 1e-9
TAU_INT = 1e-7
TAU_REG = 1e-10

# canonicalization thresholds (relative to the polygon's scale)
_MERGE_TOL = 1e-10
_TURN_TOL = 1e-10


@dataclass(frozen=True)
class Halfspace:
    """The set ``{x : a . x <= b}``; ``a`` is not normalized."""

    a: tuple
    b: float

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        if not any(a):
            raise DomainError("halfspace normal must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", float(self.b))

    @property
    def normal(self):
        return np.array(self.a)

    def unit(self):
        """Return the same halfspace with a unit normal."""
        norm = float(np.linalg.norm(self.a))
        return Halfspace(tuple(np.array(self.a) / norm), self.b / norm)

    def contains(self, x, tol=TAU_GEOM):
        a = np.array(self.a)
        return float(a @ np.asarray(x, dtype=float)) <= self.b + tol * np.linalg.norm(a)


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


def _cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _canonical_vertices(vertices):
    v = np.asarray(vertices, dtype=float).reshape(-1, 2)
    if len(v) == 0:
        return v
    scale = max(1.0, float(np.max(np.abs(v))))
    # merge near-duplicates with their successor (cyclically)
    while len(v) > 1:
        gap = np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)
        dup = gap <= _MERGE_TOL * scale
        if not np.any(dup):
            break
        if np.all(dup):
            v = v[:1]
            break
        v = v[~dup]
    # drop vertices where the boundary goes straight on; remove a vertex only if
    # its predecessor stays, so runs shrink safely over a few passes
    while len(v) >= 3:
        e1 = v - np.roll(v, 1, axis=0)
        e2 = np.roll(v, -1, axis=0) - v
        cr = _cross(e1, e2)
        dot = np.einsum("ij,ij->i", e1, e2)
        straight = (dot > 0) & (np.abs(cr) <= _TURN_TOL * np.linalg.norm(e1, axis=1)
                                * np.linalg.norm(e2, axis=1))
        if not np.any(straight):
            break
        drop = straight & ~np.roll(straight, 1)
        if not np.any(drop):
            drop = np.zeros(len(v), dtype=bool)
            drop[np.flatnonzero(straight)[0]] = True
        v = v[~drop]
    if len(v):
        xmin = v[:, 0].min()
        cand = np.flatnonzero(v[:, 0] <= xmin + TAU_GEOM * scale)
        start = cand[np.argmin(v[cand, 1])]
        v = np.roll(v, -start, axis=0)
    return v


class Polygon:
    """A planar convex body given by its counterclockwise vertices.

    The vertex list is canonicalized on construction: near-duplicate vertices
    are merged, vertices on straight runs are dropped and the list starts at
    the lexicographically smallest vertex.  Construction does not reject
    invalid input; use :func:`validate` (or :meth:`checked`) for that.
    """

    __slots__ = ("vertices", "_normals", "_offsets", "_fans")
    dim = 2

    def __init__(self, vertices, canonical=True):
        v = _canonical_vertices(vertices) if canonical else np.asarray(vertices, dtype=float)
        self.vertices = _frozen(v)
        nxt = np.roll(self.vertices, -1, axis=0)
        d = nxt - self.vertices
        normals = np.column_stack([d[:, 1], -d[:, 0]])
        self._normals = _frozen(normals)
        self._offsets = _frozen(np.einsum("ij,ij->i", normals, self.vertices))
        self._fans = None

    @classmethod
    def checked(cls, vertices):
        """Build a polygon and raise :class:`InvalidBodyError` if it is invalid."""
        poly = cls(vertices)
        problems = validate(poly)
        if problems:
            raise InvalidBodyError("; ".join(problems))
        return poly

    @property
    def normals(self):
        """Outer edge normals; row ``i`` belongs to edge ``(v_i, v_{i+1})``."""
        return self._normals

    @property
    def offsets(self):
        return self._offsets

    @property
    def edges(self):
        """Vertex pairs ``(v_i, v_{i+1})`` in counterclockwise order."""
        v = self.vertices
        return list(zip(v, np.roll(v, -1, axis=0)))

    @property
    def halfspaces(self):
        return [Halfspace(tuple(a), b) for a, b in zip(self._normals, self._offsets)]

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Polygon({len(self.vertices)} vertices)"

    def almost_equal(self, other, tol=TAU_GEOM):
        """Vertex lists agree up to a cyclic shift within ``tol``."""
        a, b = self.vertices, other.vertices
        if a.shape != b.shape:
            return False
        for k in range(len(b)):
            if np.max(np.abs(a - np.roll(b, -k, axis=0))) <= tol:
                return True
        return False

    def __neg__(self):
        return negate(self)

    def __mul__(self, lam):
        return scale(self, lam)

    __rmul__ = __mul__


class HVBody:
    """An n-dimensional body given by both a vertex and a halfspace list."""

    __slots__ = ("vertices", "normals", "offsets", "name")

    def __init__(self, vertices, normals, offsets, name=None):
        self.vertices = _frozen(np.atleast_2d(np.asarray(vertices, dtype=float)))
        self.normals = _frozen(np.atleast_2d(np.asarray(normals, dtype=float)))
        self.offsets = _frozen(np.asarray(offsets, dtype=float).reshape(-1))
        self.name = name
        if self.vertices.shape[1] != self.normals.shape[1]:
            raise InvalidBodyError("vertex and normal dimensions differ")
        if len(self.normals) != len(self.offsets):
            raise InvalidBodyError("one offset per normal is required")

    @classmethod
    def from_halfspaces(cls, vertices, halfspaces, name=None):
        normals = [h.a for h in halfspaces]
        offsets = [h.b for h in halfspaces]
        return cls(vertices, normals, offsets, name=name)

    @property
    def dim(self):
        return self.vertices.shape[1]

    @property
    def halfspaces(self):
        return [Halfspace(tuple(a), b) for a, b in zip(self.normals, self.offsets)]

    def __repr__(self):
        return f"HVBody(dim={self.dim}, {len(self.vertices)} vertices, {len(self.offsets)} facets)"

    def __neg__(self):
        return negate(self)

    def __mul__(self, lam):
        return scale(self, lam)

    __rmul__ = __mul__


class LinearMap:
    """A regular square matrix acting on bodies."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = np.atleast_2d(np.asarray(matrix, dtype=float))
        if m.shape[0] != m.shape[1]:
            raise DomainError("linear map must be square")
        if abs(np.linalg.det(m)) < TAU_REG:
            raise DomainError("linear map is singular")
        self.matrix = _frozen(m)

    @property
    def is_regular(self):
        return abs(np.linalg.det(self.matrix)) >= TAU_REG

    @property
    def det(self):
        return float(np.linalg.det(self.matrix))


def _normals_offsets(body):
    if isinstance(body, Polygon):
        return body.normals, body.offsets
    return body.normals, body.offsets


# above this many vertices, support and gauge use angular binary search
_FAST_MIN = 48


def _unwrapped_angles(vecs):
    ang = np.arctan2(vecs[:, 1], vecs[:, 0])
    steps = np.mod(np.diff(ang), 2 * math.pi)
    return ang[0] + np.concatenate([[0.0], np.cumsum(steps)])


def _fans(poly):
    """Cached unwrapped vertex and edge-normal angles (both increase ccw)."""
    if poly._fans is None:
        poly._fans = (_unwrapped_angles(poly.vertices), _unwrapped_angles(poly.normals))
    return poly._fans


def _sector(fan, dirs):
    base = fan[0]
    theta = base + np.mod(np.arctan2(dirs[:, 1], dirs[:, 0]) - base, 2 * math.pi)
    return np.searchsorted(fan, theta, side="right") - 1


def _fast_ok(body, x):
    return isinstance(body, Polygon) and x.ndim == 2 and len(body.vertices) > _FAST_MIN \
        and len(x) > 8


def support(body, a):
    """Support function h(a) = max over vertices of a . v.

    ``a`` may be a single vector or an array of row vectors.
    """
    a = np.asarray(a, dtype=float)
    if _fast_ok(body, a):
        m = len(body.vertices)
        k = _sector(_fans(body)[1], a)
        best = np.full(len(a), -np.inf)
        for shift in (0, 1, 2):
            v = body.vertices[(k + shift) % m]
            best = np.maximum(best, np.einsum("ij,ij->i", v, a))
        return best
    if a.ndim == 1:
        return float(np.max(body.vertices @ a))
    return np.concatenate([np.max(body.vertices @ part.T, axis=0)
                           for part in _chunks(a, len(body.vertices))])


def gauge(body, x):
    """Gauge function: max over facets of (a . x) / b, clamped below at 0."""
    x = np.asarray(x, dtype=float)
    normals, offsets = _normals_offsets(body)
    if _fast_ok(body, x) and np.all(offsets > 0):
        m = len(offsets)
        k = _sector(_fans(body)[0], x)
        best = np.zeros(len(x))
        for shift in (-1, 0, 1):
            j = (k + shift) % m
            best = np.maximum(best, np.einsum("ij,ij->i", normals[j], x) / offsets[j])
        return best
    if x.ndim == 1:
        return max(0.0, float(np.max((normals @ x) / offsets)))
    vals = [np.max((part @ normals.T) / offsets, axis=-1) for part in _chunks(x, len(offsets))]
    return np.maximum(np.concatenate(vals) if vals else np.zeros(0), 0.0)


def _chunks(rows, width, budget=1 << 22):
    """Split ``rows`` so that each block times ``width`` stays within ``budget`` entries."""
    step = max(1, budget // max(1, width))
    return [rows[i:i + step] for i in range(0, len(rows), step)] or [rows]


def _drop_reflex(v):
    """Remove vertices where a star-shaped ccw vertex list turns clockwise."""
    while len(v) > 3:
        cr = _cross(v - np.roll(v, 1, axis=0), np.roll(v, -1, axis=0) - v)
        bad = cr < 0
        if not np.any(bad):
            break
        drop = bad & ~np.roll(bad, 1)
        if not np.any(drop):
            drop = np.zeros(len(v), dtype=bool)
            drop[np.flatnonzero(bad)[0]] = True
        v = v[~drop]
    return v


def polar(body):
    """Polar body: vertices become facets ``v . x <= 1`` and facets ``a . x <= b`` vertices ``a / b``."""
    normals, offsets = _normals_offsets(body)
    if np.any(offsets <= 0):
        raise InvalidBodyError("polar requires the origin in the interior")
    new_vertices = normals / offsets[:, None]
    if isinstance(body, Polygon):
        # the exact polar is convex; roundoff in a / b can leave tiny reflex turns
        out = Polygon(_drop_reflex(new_vertices))
        if len(out) < 3:
            raise InvalidBodyError("polar is degenerate")
        return out
    return HVBody(new_vertices, body.vertices, np.ones(len(body.vertices)), name=None)


def _as_matrix(map_):
    if isinstance(map_, LinearMap):
        return np.asarray(map_.matrix)
    return LinearMap(map_).matrix


def transform(body, map_):
    """Image of ``body`` under a regular linear map."""
    m = _as_matrix(map_)
    if isinstance(body, Polygon):
        v = body.vertices @ m.T
        if np.linalg.det(m) < 0:
            v = v[::-1]
        return Polygon(v)
    inv = np.linalg.inv(m)
    # a . x <= b on the body becomes (A^{-T} a) . y <= b on the image
    return HVBody(body.vertices @ m.T, body.normals @ inv, body.offsets, name=body.name)


def negate(body):
    if isinstance(body, Polygon):
        return Polygon(-body.vertices)
    return HVBody(-body.vertices, -body.normals, body.offsets, name=body.name)


def scale(body, lam):
    lam = float(lam)
    if not lam > 0:
        raise DomainError("scale factor must be positive")
    if isinstance(body, Polygon):
        return Polygon(lam * body.vertices)
    return HVBody(lam * body.vertices, body.normals, lam * body.offsets, name=body.name)


def validate(body):
    """Return a list of human-readable invariant violations (empty if valid)."""
    if isinstance(body, Polygon):
        return _validate_polygon(body)
    return _validate_hv(body)


def _validate_polygon(poly):
    problems = []
    v = poly.vertices
    if not np.all(np.isfinite(v)):
        return ["non-finite vertex coordinates"]
    if len(v) < 3:
        return [f"polygon needs at least 3 vertices, got {len(v)}"]
    prev = np.roll(v, 1, axis=0)
    nxt = np.roll(v, -1, axis=0)
    e1 = v - prev
    e2 = nxt - v
    turns = _cross(e1, e2) / (np.linalg.norm(e1, axis=1) * np.linalg.norm(e2, axis=1))
    if np.any(turns <= TAU_GEOM):
        problems.append("not convex/ccw: reflex or degenerate turn at vertex "
                        f"{int(np.argmin(turns))}")
    else:
        winding = np.sum(np.arctan2(_cross(e1, e2), np.einsum("ij,ij->i", e1, e2)))
        if abs(winding - 2 * math.pi) > 1e-6:
            problems.append("not convex/ccw: boundary winds more than once")
    if not problems:
        dist = poly.offsets / np.linalg.norm(poly.normals, axis=1)
        if np.any(dist < TAU_INT):
            problems.append("origin not interior")
    return problems


def _validate_hv(body):
    problems = []
    n = body.dim
    if n < 2:
        problems.append("dimension must be at least 2")
    if len(body.vertices) < n + 1:
        problems.append("too few vertices for a full-dimensional body")
    norms = np.linalg.norm(body.normals, axis=1)
    if np.any(norms == 0):
        return problems + ["zero halfspace normal"]
    if np.any(body.offsets / norms < TAU_INT):
        problems.append("origin not interior")
    slack = (body.vertices @ body.normals.T - body.offsets) / norms
    if np.any(slack > TAU_GEOM):
        i, j = np.unravel_index(np.argmax(slack), slack.shape)
        problems.append(f"vertex {i} violates halfspace {j} by {slack[i, j]:.3g}")
    tight = np.max(slack, axis=0)
    if np.any(tight < -TAU_GEOM):
        j = int(np.argmin(tight))
        problems.append(f"halfspace {j} does not support the vertex set")
    return problems
