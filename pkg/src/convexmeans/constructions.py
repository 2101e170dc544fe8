"""Fixed bodies used as examples, tightness instances and counterexamples.

Every n-dimensional constructor returns an :class:`HVBody` with both
representations written out by hand; in the plane a :class:`Polygon` is
returned instead.
"""

import itertools
import math

import numpy as np

from .bodies import HVBody, Polygon, validate
from .errors import DomainError, InvalidBodyError
from .polygon_ops import intersect
from .scalar import power_mean

__all__ = [
    "regular_triangle",
    "cross_body",
    "shifted_cube",
    "nonstrict_lower_pair",
    "bm_pentagon",
    "shifted_boxes",
    "triangle_family",
    "ball_poly",
    "b1",
    "b_inf",
    "b2_approx",
    "b2_approx_error",
]

SQRT3 = math.sqrt(3.0)


def _checked(body, name):
    problems = validate(body)
    if problems:
        raise InvalidBodyError(f"{name}: " + "; ".join(problems))
    return body


def _signs(k):
    return [np.array(s, dtype=float) for s in itertools.product((-1.0, 1.0), repeat=k)]


def _unit(n, i):
    e = np.zeros(n)
    e[i] = 1.0
    return e


def regular_triangle():
    """Regular triangle (0, 2), (±√3, -1); Minkowski centered at 0 with s = 2."""
    return Polygon([(0.0, 2.0), (-SQRT3, -1.0), (SQRT3, -1.0)])


def cross_body(n, R):
    """conv{v, -R v : v in {±1}^(n-1) x {1}}, a frustum with R_0^max(K, -K) = R."""
    n = int(n)
    R = float(R)
    if n < 2:
        raise DomainError("cross_body needs n >= 2")
    if not R >= 1.0:
        raise DomainError("cross_body needs R >= 1")
    tops = [np.append(s, 1.0) for s in _signs(n - 1)]
    vertices = tops + [-R * v for v in tops]
    if n == 2:
        return _checked(Polygon([(-R, -R), (R, -R), (1, 1), (-1, 1)]), "cross body")
    last = _unit(n, n - 1)
    normals = [last, -last]
    offsets = [1.0, R]
    # side facets: sigma x_i <= 1 at x_n = 1 and <= R at x_n = -R
    for i in range(n - 1):
        for sigma in (-1.0, 1.0):
            normals.append(sigma * (R + 1) / (2 * R) * _unit(n, i) + (R - 1) / (2 * R) * last)
            offsets.append(1.0)
    return _checked(HVBody(vertices, normals, offsets, name=f"cross({n},{R:g})"), "cross body")


def shifted_cube(n, R):
    """Unit cube shifted by (R-1)/(R+1) along the last axis."""
    n = int(n)
    R = float(R)
    if n < 2 or not R >= 1.0:
        raise DomainError("shifted_cube needs n >= 2 and R >= 1")
    top, bottom = 2 * R / (R + 1), -2 / (R + 1)
    vertices = [np.append(s, h) for s in _signs(n - 1) for h in (top, bottom)]
    if n == 2:
        return _checked(Polygon([(-1, bottom), (1, bottom), (1, top), (-1, top)]), "shifted box")
    normals, offsets = [], []
    for i in range(n - 1):
        normals += [_unit(n, i), -_unit(n, i)]
        offsets += [1.0, 1.0]
    normals += [_unit(n, n - 1), -_unit(n, n - 1)]
    offsets += [top, -bottom]
    return _checked(HVBody(vertices, normals, offsets, name=f"box({n},{R:g})"), "shifted box")


def nonstrict_lower_pair(n, gamma, p=None):
    """The pair (K, K') with K' strictly inside K but equal lower means against their negatives.

    ``p`` optionally checks the side condition m_p(gamma, gamma/(gamma+1)) > 1.
    """
    n = int(n)
    g = float(gamma)
    if n < 2 or not 0.0 < g < 2.0:
        raise DomainError("nonstrict_lower_pair needs n >= 2 and gamma in (0, 2)")
    if p is not None and not power_mean(p, g, g / (g + 1)) > 1.0:
        raise DomainError(f"m_p(gamma, gamma/(gamma+1)) <= 1 for p = {p}")
    last = _unit(n, n - 1)
    if n == 2:
        K = Polygon([(-g, -1), (g, -1), (1, 0), (0, 1), (-1, 0)])
        Kp = Polygon([(-g, -1), (g, -1), (g / (g + 1), 1 / (g + 1)), (0, 1),
                      (-g / (g + 1), 1 / (g + 1))])
        return _checked(K, "K"), _checked(Kp, "K'")
    axes = [_unit(n, i) for i in range(n - 1)]
    vk = [last] + [s * e for e in axes for s in (1, -1)] + \
        [s * g * e - last for e in axes for s in (1, -1)]
    vkp = [last] + [s * g * e - last for e in axes for s in (1, -1)] + \
        [(s * g * e + last) / (g + 1) for e in axes for s in (1, -1)]
    nk, ok, nkp, okp = [], [], [], []
    for sigma in _signs(n - 1):
        nk += [np.append(sigma, 1.0), np.append(sigma, g - 1.0)]
        ok += [1.0, 1.0]
        nkp += [np.append(sigma, 1.0), np.append((g + 2) * sigma, g * g)]
        okp += [1.0, 2 * g]
    nk.append(-last)
    ok.append(1.0)
    nkp.append(-last)
    okp.append(1.0)
    K = HVBody(vk, nk, ok, name=f"example K({n},{g:g})")
    Kp = HVBody(vkp, nkp, okp, name=f"example K'({n},{g:g})")
    return _checked(K, "K"), _checked(Kp, "K'")


def bm_pentagon():
    """Pentagon with s = 3/2 whose negative sits in the disc of radius 6."""
    r = 2 * math.sqrt(5.0)
    return _checked(Polygon([(0, 6), (-r, 1), (-r, -4), (r, -4), (r, 1)]), "pentagon")


def shifted_boxes():
    """Two bodies symmetric about (0, 2) whose geometric mean is not symmetric."""
    K = Polygon([(0, 20), (-18, 2), (0, -16), (18, 2)])
    L = Polygon([(0, 5), (-18, 2), (0, -1), (18, 2)])
    return _checked(K, "K"), _checked(L, "L")


def triangle_family(r):
    """T ∩ (-r T) for the regular triangle T; Minkowski centered with asymmetry r."""
    r = float(r)
    if not 1.0 <= r <= 2.0:
        raise DomainError("triangle_family needs r in [1, 2]")
    T = regular_triangle()
    return intersect(T, Polygon(-r * T.vertices))


def b1():
    return Polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


def b_inf():
    return Polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])


def b2_approx(m=4096):
    """Regular m-gon inscribed in the unit disc."""
    m = int(m)
    if m < 64:
        raise DomainError("the disc proxy needs at least 64 vertices")
    t = np.arange(m) * (2 * math.pi / m)
    return Polygon(np.column_stack([np.cos(t), np.sin(t)]))


def b2_approx_error(m=4096):
    """Hausdorff distance between the inscribed regular m-gon and the unit disc."""
    return 1.0 - math.cos(math.pi / m)


def ball_poly(kind, m=4096):
    kind = kind.lower()
    if kind == "b1":
        return b1()
    if kind in ("binf", "b_inf"):
        return b_inf()
    if kind in ("b2", "b2_approx"):
        return b2_approx(m)
    raise DomainError(f"unknown ball kind {kind!r}")
