"""Executable checks of the structural results about p-means and G_p.

Each ``check_*`` function builds its own instances, measures the relevant
quantities and returns a :class:`CheckResult`.  A check passes when every
recorded error is within its allowed limit.  Failing checks keep the bodies of
the first offending instance so they can be written out as body files.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import itertools
import math
import time
import traceback

import numpy as np

from . import bodyfile
from .bodies import TAU_GEOM, Polygon, gauge, negate, polar, scale, support, transform
from .constructions import (
    b1,
    b2_approx,
    b2_approx_error,
    b_inf,
    bm_pentagon,
    cross_body,
    nonstrict_lower_pair,
    regular_triangle,
    shifted_boxes,
    triangle_family,
)
from .containment import (
    bm_distance_upper_bound,
    circumradius_with_center,
    covering_bound_mixed,
    covering_radius,
    covering_radius_into_lower,
    covering_radius_of_upper,
    minkowski_asymmetry,
    optimal_containment_certificate,
    r0_max,
    solve_min_max_lp,
)
from .errors import ContainmentError
from .gmean import gmean_iterate, gmean_scaling_check, hausdorff_gap_series, monotone_violation
from .means import (
    common_boundary_predicate,
    cone_ray_directions_2d,
    default_grid,
    lower_mean_2d,
    lower_mean_outer_sampled,
    lower_mean_sampled,
    upper_mean_2d,
    upper_mean_inner_sampled,
    upper_mean_sampled,
)
from .polygon_ops import (
    area_2d,
    conv_union,
    convex_hull_2d,
    hausdorff_2d,
    intersect,
    minkowski_sum,
    tight_containment,
)
from .scalar import power_mean

__all__ = [
    "CheckResult",
    "SAMPLE_P",
    "random_polygon",
    "random_pairs",
    "symmetry_residual",
    "CHECKS",
    "run_check",
    "run_suite",
    "format_report",
]

INF = math.inf
SAMPLE_P = (-INF, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, INF)
UPPER_EXACT = tuple(p for p in SAMPLE_P if p <= 1 or p == INF)
LOWER_EXACT = tuple(q for q in SAMPLE_P if q >= -1 or q == -INF)
BOTH_EXACT = tuple(p for p in SAMPLE_P if p in UPPER_EXACT and p in LOWER_EXACT)

# slack for relations involving grid-sampled means (relative to body size)
SAMPLED_TOL = 1e-5
# minimal separation used to call two bodies different
STRICT_GAP = 1e-6
# G_p tolerance inside the property battery
BATTERY_TOL = 1e-7


@dataclass
class CheckResult:
    id: str
    status: str
    measured: list
    tolerance: float
    detail: str = ""
    statement: str = ""
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {
            "id": self.id,
            "status": self.status,
            "statement": self.statement,
            "tolerance": self.tolerance,
            "measured": [list(m) for m in self.measured],
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "witness": {k: bodyfile.body_to_dict(b, k) for k, b in self.witness.items()},
        }


class _Recorder:
    """Collects (label, worst error, limit) triples; any excess marks a failure."""

    def __init__(self, check_id, statement, tolerance):
        self.id = check_id
        self.statement = statement
        self.tolerance = tolerance
        self.rows = {}
        self.failures = []
        self.witness = {}
        self.notes = []

    def error(self, label, value, limit=None, **bodies):
        limit = self.tolerance if limit is None else limit
        value = float(value)
        worst, lim, count = self.rows.get(label, (-INF, limit, 0))
        self.rows[label] = (max(worst, value), lim, count + 1)
        if not value <= limit:
            self.failures.append(f"{label}: {value:.6g} > {limit:.3g}")
            if not self.witness:
                self.witness = dict(bodies)
        return value <= limit

    def require(self, label, ok, **bodies):
        return self.error(label, 0.0 if ok else 1.0, 0.0, **bodies)

    def note(self, text):
        self.notes.append(text)

    def result(self):
        measured = [(label, worst, lim, n) for label, (worst, lim, n) in self.rows.items()]
        status = "pass" if not self.failures else "fail"
        detail = "; ".join(self.failures[:5] + self.notes)
        return CheckResult(self.id, status, measured, self.tolerance, detail,
                           self.statement, self.witness)


# ---------------------------------------------------------------- instances

def random_polygon(rng, k_range=(5, 12), margin=0.1):
    """Hull of k points uniform in the annulus 0.5 <= |x| <= 1.5, recentered.

    The hull is shifted by its vertex centroid and redrawn until the origin
    is at distance at least ``margin`` from every edge.
    """
    for _ in range(1000):
        k = int(rng.integers(k_range[0], k_range[1] + 1))
        radius = np.sqrt(rng.uniform(0.25, 2.25, size=k))
        theta = rng.uniform(0.0, 2 * math.pi, size=k)
        pts = np.column_stack([radius * np.cos(theta), radius * np.sin(theta)])
        try:
            hull = convex_hull_2d(pts, require_origin=False)
        except ValueError:
            continue
        P = Polygon(hull.vertices - hull.vertices.mean(axis=0))
        dist = P.offsets / np.linalg.norm(P.normals, axis=1)
        if len(P) >= 3 and np.min(dist) >= margin:
            return P
    raise RuntimeError("could not draw a well-centered polygon")


def random_symmetric_polygon(rng):
    P = random_polygon(rng)
    return conv_union(P, negate(P))


def random_pairs(seed, n):
    rng = np.random.default_rng(seed)
    return [(random_polygon(rng), random_polygon(rng)) for _ in range(n)]


def random_map(rng, max_cond=10.0):
    while True:
        A = rng.normal(size=(2, 2))
        if abs(np.linalg.det(A)) > 0.2 and np.linalg.cond(A) < max_cond:
            return A


def minkowski_centered(P):
    """Translate P so that its Minkowski center sits at the origin."""
    return Polygon(P.vertices - minkowski_asymmetry(P).center)


def _size(*bodies):
    return max(float(np.max(np.linalg.norm(b.vertices, axis=1))) for b in bodies)


def _pname(p):
    return {INF: "inf", -INF: "-inf"}.get(p, f"{p:g}")


# ------------------------------------------------- brackets for sampled means

class _MeanBody:
    """A mean of (K, L) with an exact polygon or a sampled inner/outer bracket."""

    def __init__(self, K, L, kind, p, grid):
        self.K, self.L, self.kind, self.p = K, L, kind, p
        exact_range = (p <= 1 or p == INF) if kind == "upper" else (p >= -1 or p == -INF)
        if exact_range:
            body = upper_mean_2d(K, L, p) if kind == "upper" else lower_mean_2d(K, L, p)
            self.exact = self.inner = self.outer = body
        else:
            self.exact = None
            if kind == "upper":
                self.inner = upper_mean_inner_sampled(K, L, p, grid)
                self.outer = upper_mean_sampled(K, L, p, grid)
            else:
                self.inner = lower_mean_sampled(K, L, p, grid)
                self.outer = lower_mean_outer_sampled(K, L, p, grid)

    def gauge_bounds(self, x):
        """(lower, upper) bounds for the gauge at the rows of x."""
        if self.exact is not None:
            g = gauge(self.exact, x)
            return g, g
        if self.kind == "lower":
            g = power_mean(-self.p, gauge(self.K, x), gauge(self.L, x))
            return g, g
        return gauge(self.outer, x), gauge(self.inner, x)


def radius_bounds(A, B):
    """Bounds (lo, hi) on R_0(A, B) for polygons or :class:`_MeanBody` operands."""
    a_exact = A if isinstance(A, Polygon) else A.exact
    b_exact = B if isinstance(B, Polygon) else B.exact
    if a_exact is not None and b_exact is not None:
        r = covering_radius(a_exact, b_exact)
        return r, r
    if b_exact is not None and A.kind == "upper":
        r = covering_radius_of_upper(A.K, A.L, A.p, b_exact)
        return r, r
    if a_exact is not None and B.kind == "lower":
        r = covering_radius_into_lower(a_exact, B.K, B.L, B.p)
        return r, r
    inner = a_exact if a_exact is not None else A.inner
    outer = a_exact if a_exact is not None else A.outer
    if isinstance(B, Polygon):
        lo, hi = float(np.max(gauge(B, inner.vertices))), float(np.max(gauge(B, outer.vertices)))
    else:
        lo = float(np.max(B.gauge_bounds(inner.vertices)[0]))
        hi = float(np.max(B.gauge_bounds(outer.vertices)[1]))
    return lo, hi


def _is_sampled(*terms):
    return any(isinstance(t, _MeanBody) and t.exact is None for t in terms)


# --------------------------------------------------------------- the checks

def check_firey_ordering(seed=0, n_pairs=20):
    rec = _Recorder("firey-ordering",
                    "intersection inside harmonic mean inside arithmetic mean inside hull of the union",
                    TAU_GEOM)
    for K, L in random_pairs(seed, n_pairs):
        s = _size(K, L)
        inter, hull = intersect(K, L), conv_union(K, L)
        harmonic = polar(scale(minkowski_sum(polar(K), polar(L)), 0.5))
        arithmetic = scale(minkowski_sum(K, L), 0.5)
        chain = [inter, harmonic, arithmetic, hull]
        for a, b in zip(chain, chain[1:]):
            rec.error("R_0(step, next step) - 1", covering_radius(a, b) - 1.0, K=K, L=L)
        rec.error("harmonic vs lower_-1 (hausdorff / size)",
                  hausdorff_2d(harmonic, lower_mean_2d(K, L, -1)) / s, K=K, L=L)
        rec.error("arithmetic vs upper_1 (hausdorff / size)",
                  hausdorff_2d(arithmetic, upper_mean_2d(K, L, 1)) / s, K=K, L=L)
    return rec.result()


def check_duality(seed=1, n_pairs=15):
    rec = _Recorder("polar-duality",
                    "polar of the upper p-mean is the lower (-p)-mean of the polars, and vice versa",
                    TAU_GEOM)
    for K, L in random_pairs(seed, n_pairs):
        Ko, Lo = polar(K), polar(L)
        s = max(_size(K, L), _size(Ko, Lo))
        for p in BOTH_EXACT:
            d1 = hausdorff_2d(polar(upper_mean_2d(K, L, p)), lower_mean_2d(Ko, Lo, -p))
            d2 = hausdorff_2d(polar(lower_mean_2d(K, L, p)), upper_mean_2d(Ko, Lo, -p))
            rec.error("upper side (hausdorff / size)", d1 / s, K=K, L=L)
            rec.error("lower side (hausdorff / size)", d2 / s, K=K, L=L)
    return rec.result()


def check_lower_in_upper(seed=2, n_pairs=15):
    rec = _Recorder("lower-inside-upper", "lower p-mean inside upper p-mean for every p", TAU_GEOM)
    for K, L in random_pairs(seed, n_pairs):
        grid = default_grid(K, L)
        for p in SAMPLE_P:
            lo_body = _MeanBody(K, L, "lower", p, grid)
            up_body = _MeanBody(K, L, "upper", p, grid)
            hi = radius_bounds(lo_body, up_body)[1]
            if _is_sampled(lo_body, up_body):
                rec.error("R_0(lower, upper) - 1, sampled", hi - 1.0, SAMPLED_TOL, K=K, L=L)
            else:
                rec.error("R_0(lower, upper) - 1", hi - 1.0, K=K, L=L)
    return rec.result()


def check_monotone_in_p_and_args(seed=3, n_pairs=10):
    rec = _Recorder("monotone-in-p-and-arguments",
                    "means grow with p and with both arguments", TAU_GEOM)
    rng = np.random.default_rng(seed + 1000)
    for K, L in random_pairs(seed, n_pairs):
        K2 = conv_union(K, scale(random_polygon(rng), 0.9))
        L2 = conv_union(L, scale(random_polygon(rng), 0.9))
        grid = default_grid(K, L, K2, L2)
        for kind in ("upper", "lower"):
            small = {p: _MeanBody(K, L, kind, p, grid) for p in SAMPLE_P}
            big = {p: _MeanBody(K2, L2, kind, p, grid) for p in SAMPLE_P}
            for i, p in enumerate(SAMPLE_P):
                for q in SAMPLE_P[i:]:
                    for target, tag in ((small[q], "same args"), (big[q], "larger args")):
                        hi = radius_bounds(small[p], target)[1]
                        if _is_sampled(small[p], target):
                            rec.error(f"{kind}: R_0 - 1, {tag}, sampled", hi - 1.0, SAMPLED_TOL,
                                      K=K, L=L, K2=K2, L2=L2)
                        else:
                            rec.error(f"{kind}: R_0 - 1, {tag}", hi - 1.0, K=K, L=L, K2=K2, L2=L2)
    return rec.result()


def check_linear_equivariance(seed=4, n_pairs=10):
    rec = _Recorder("linear-equivariance", "means commute with regular linear maps", TAU_GEOM)
    rng = np.random.default_rng(seed + 1000)
    for K, L in random_pairs(seed, n_pairs):
        A = random_map(rng)
        AK, AL = transform(K, A), transform(L, A)
        s = _size(AK, AL)
        for p in UPPER_EXACT:
            d = hausdorff_2d(upper_mean_2d(AK, AL, p), transform(upper_mean_2d(K, L, p), A))
            rec.error("upper (hausdorff / size)", d / s, K=K, L=L)
        for p in LOWER_EXACT:
            d = hausdorff_2d(lower_mean_2d(AK, AL, p), transform(lower_mean_2d(K, L, p), A))
            rec.error("lower (hausdorff / size)", d / s, K=K, L=L)
    return rec.result()


def check_common_boundary_points(seed=5, n_pairs=4, n_dirs=10_000, ps=(0.0, 0.5, -0.5)):
    rec = _Recorder("common-boundary-points",
                    "lower and upper p-means share the boundary point along x exactly when "
                    "the normal cones of K and L there meet; some such x always exists",
                    TAU_GEOM)
    rng = np.random.default_rng(seed + 1000)
    pairs = random_pairs(seed, n_pairs) + [(regular_triangle(), negate(regular_triangle()))]
    for K, L in pairs:
        t = rng.uniform(0, 2 * math.pi, n_dirs)
        dirs = np.vstack([np.column_stack([np.cos(t), np.sin(t)]), K.vertices, L.vertices])
        for p in ps:
            low, up = lower_mean_2d(K, L, p), upper_mean_2d(K, L, p)
            gl, gu = gauge(low, dirs), gauge(up, dirs)
            mismatch = 0
            for x, a, b in zip(dirs, gl, gu):
                flag, _ = common_boundary_predicate(K, L, p, x)
                same = abs(a - b) <= 1e-9 * max(a, 1.0)
                mismatch += flag != same
            rec.error("predicate vs gauge comparison mismatches", mismatch, 0, K=K, L=L)
        # a vertex of K touching R L gives a direction where the predicate holds
        v = K.vertices[int(np.argmax(gauge(L, K.vertices)))]
        flag, _ = common_boundary_predicate(K, L, 0.0, v)
        rec.require("touching direction of K in R_0(K, L) L satisfies predicate", flag, K=K, L=L)
    return rec.result()


def _dilatate_pairs(seed, n):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        K = random_polygon(rng)
        out.append((K, scale(K, float(rng.uniform(0.3, 3.0)))))
    return out


def check_eq_upper_lower(seed=6, n_pairs=8):
    rec = _Recorder("upper-equals-lower",
                    "upper and lower p-means agree iff p is infinite or K, L are dilatates",
                    TAU_GEOM)
    finite = tuple(p for p in BOTH_EXACT if math.isfinite(p))
    for K, L in _dilatate_pairs(seed, n_pairs):
        s = _size(K, L)
        for p in finite:
            d = hausdorff_2d(lower_mean_2d(K, L, p), upper_mean_2d(K, L, p))
            rec.error("dilatates: hausdorff / size", d / s, K=K, L=L)
    for K, L in random_pairs(seed + 1, n_pairs):
        s = _size(K, L)
        for p in (-INF, INF):
            d = hausdorff_2d(lower_mean_2d(K, L, p), upper_mean_2d(K, L, p))
            rec.error("infinite p: hausdorff / size", d / s, K=K, L=L)
        for p in finite:
            d = hausdorff_2d(lower_mean_2d(K, L, p), upper_mean_2d(K, L, p))
            rec.error("generic pair: separation shortfall", STRICT_GAP - d / s, 0.0, K=K, L=L)
    return rec.result()


def check_eq_p_q(seed=7, n_pairs=8):
    rec = _Recorder("p-mean-equals-q-mean",
                    "for p < q any two of lower_p, lower_q, upper_p, upper_q coincide only when K = L",
                    TAU_GEOM)
    rng = np.random.default_rng(seed + 1000)
    for K, L in random_pairs(seed, n_pairs):
        s = _size(K, L)
        lows = {p: lower_mean_2d(K, L, p) for p in LOWER_EXACT}
        ups = {p: upper_mean_2d(K, L, p) for p in UPPER_EXACT}
        for p in SAMPLE_P:
            for q in SAMPLE_P:
                if not p < q:
                    continue
                pairs = []
                if p in lows and q in lows:
                    pairs.append(("lower_p vs lower_q", lows[p], lows[q]))
                if p in ups and q in ups:
                    pairs.append(("upper_p vs upper_q", ups[p], ups[q]))
                if p in lows and q in ups:
                    pairs.append(("lower_p vs upper_q", lows[p], ups[q]))
                for label, A, B in pairs:
                    d = hausdorff_2d(A, B) / s
                    rec.error(f"{label}: separation shortfall", STRICT_GAP - d, 0.0, K=K, L=L)
    for _ in range(n_pairs):
        K = random_polygon(rng)
        s = _size(K)
        for p in LOWER_EXACT:
            rec.error("K = L: lower mean vs K", hausdorff_2d(lower_mean_2d(K, K, p), K) / s, K=K)
        for p in UPPER_EXACT:
            rec.error("K = L: upper mean vs K", hausdorff_2d(upper_mean_2d(K, K, p), K) / s, K=K)
    return rec.result()


def _shrunk(K, rng):
    """A polygon strictly inside K: one vertex pulled 20% toward the origin."""
    v = K.vertices.copy()
    i = int(rng.integers(len(v)))
    v[i] *= 0.8
    return convex_hull_2d(v)


def check_strict_monotonicity_p_ge_1(seed=8, n_pairs=8):
    rec = _Recorder("strict-monotonicity",
                    "for p >= 1 shrinking an argument strictly shrinks upper_p and lower_-p; "
                    "lower means for p in (-1, inf] and p = -inf are not strictly monotone",
                    TAU_GEOM)
    rng = np.random.default_rng(seed + 1000)
    dirs = default_grid(n_angles=4096).directions
    for K, L in random_pairs(seed, n_pairs):
        Ks = _shrunk(K, rng)
        s = _size(K, L)
        d = hausdorff_2d(upper_mean_2d(Ks, L, 1), upper_mean_2d(K, L, 1)) / s
        rec.error("p = 1 upper: separation shortfall", STRICT_GAP - d, 0.0, K=K, Ks=Ks, L=L)
        d = hausdorff_2d(lower_mean_2d(Ks, L, -1), lower_mean_2d(K, L, -1)) / s
        rec.error("p = 1 lower: separation shortfall", STRICT_GAP - d, 0.0, K=K, Ks=Ks, L=L)
        # p = 2 through the exact support and gauge formulas on a grid
        hs = power_mean(2.0, support(Ks, dirs), support(L, dirs))
        h = power_mean(2.0, support(K, dirs), support(L, dirs))
        rec.error("p = 2 upper support: separation shortfall",
                  STRICT_GAP - float(np.max(h - hs)) / s, 0.0, K=K, Ks=Ks, L=L)
        gs = power_mean(2.0, gauge(Ks, dirs), gauge(L, dirs))
        g = power_mean(2.0, gauge(K, dirs), gauge(L, dirs))
        rec.error("p = 2 lower gauge: separation shortfall",
                  STRICT_GAP - float(np.max(gs - g)), 0.0, K=K, Ks=Ks, L=L)
        inter = intersect(K, L)
        d = hausdorff_2d(lower_mean_2d(inter, inter, -INF), lower_mean_2d(K, L, -INF)) / s
        rec.error("p = -inf: replacing both by the intersection changes nothing", d, K=K, L=L)
    K, Kp = nonstrict_lower_pair(2, 16.0 / 9.0)
    rec.error("pair differs: separation shortfall", STRICT_GAP - hausdorff_2d(K, Kp), 0.0)
    for p in (0.0, 0.5, 1.0, INF):
        nonstrict_lower_pair(2, 16.0 / 9.0, p=p)
        d = hausdorff_2d(lower_mean_2d(Kp, negate(Kp), p), lower_mean_2d(K, negate(K), p))
        rec.error(f"lower_{_pname(p)}(K', -K') vs lower_{_pname(p)}(K, -K)", d, K=K, Kp=Kp)
        Ko, Kpo = polar(K), polar(Kp)
        d = hausdorff_2d(upper_mean_2d(Kpo, negate(Kpo), -p), upper_mean_2d(Ko, negate(Ko), -p))
        rec.error("polar pair, upper means", d, K=K, Kp=Kp)
    return rec.result()


def check_polytopality(seed=9, n_pairs=10):
    rec = _Recorder("polytopal-means",
                    "exact means of polygons are polygons built from vertex rays and edge normals "
                    "of the operands",
                    TAU_GEOM)
    for K, L in random_pairs(seed, n_pairs):
        grid = default_grid(K, L).directions
        ray_dirs = np.vstack([K.vertices, L.vertices])
        ray_dirs = ray_dirs / np.linalg.norm(ray_dirs, axis=1)[:, None]
        fan = np.vstack([K.normals, L.normals])
        fan = fan / np.linalg.norm(fan, axis=1)[:, None]
        # extreme rays of pos(F) ∩ pos(E) over all edge pairs are the vertex rays
        rays = []
        for F in K.edges:
            for E in L.edges:
                rays.extend(cone_ray_directions_2d(F, E))
        rays = np.array(rays)
        rec.error("cone rays off vertex rays (1 - cos)", float(np.max(1 - np.max(rays @ ray_dirs.T, axis=1))),
                  K=K, L=L)
        rec.error("vertex rays missing from cone rays (1 - cos)",
                  float(np.max(1 - np.max(ray_dirs @ rays.T, axis=1))), K=K, L=L)
        for q in LOWER_EXACT:
            if math.isinf(q):
                continue
            M = lower_mean_2d(K, L, q)
            u = M.vertices / np.linalg.norm(M.vertices, axis=1)[:, None]
            rec.error("lower vertex off a vertex ray (1 - cos)",
                      float(np.max(1 - np.max(u @ ray_dirs.T, axis=1))), K=K, L=L)
            on = power_mean(-q, gauge(K, M.vertices), gauge(L, M.vertices))
            rec.error("lower vertex gauge formula - 1", float(np.max(np.abs(on - 1))), K=K, L=L)
            pts = grid / power_mean(-q, gauge(K, grid), gauge(L, grid))[:, None]
            rec.error("sampled boundary points outside lower mean",
                      float(np.max(gauge(M, pts))) - 1.0, K=K, L=L)
        for p in UPPER_EXACT:
            if math.isinf(p):
                continue
            M = upper_mean_2d(K, L, p)
            a = M.normals / np.linalg.norm(M.normals, axis=1)[:, None]
            b = M.offsets / np.linalg.norm(M.normals, axis=1)
            rec.error("upper normal off an operand normal (1 - cos)",
                      float(np.max(1 - np.max(a @ fan.T, axis=1))), K=K, L=L)
            rec.error("upper facet offset vs support formula",
                      float(np.max(np.abs(b - power_mean(p, support(K, a), support(L, a))))), K=K, L=L)
            rec.error("support above formula on grid",
                      float(np.max(support(M, grid) - power_mean(p, support(K, grid), support(L, grid)))),
                      K=K, L=L)
    return rec.result()


def _touching_pairs(seed, n):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        L = random_polygon(rng)
        K0 = random_polygon(rng)
        out.append((scale(K0, 1.0 / covering_radius(K0, L)), L))
    return out


def _has_cert(A, B):
    try:
        return optimal_containment_certificate(A, B) is not None
    except ContainmentError:
        return None


def check_optimal_containment(seed=10, n_pairs=6):
    rec = _Recorder("optimal-containment",
                    "optimality of containments between means reduces to the extreme means; "
                    "lower_p is optimally contained in upper_p when both are 0-symmetric",
                    0.0)
    rng = np.random.default_rng(seed + 1000)
    corpus = random_pairs(seed, n_pairs) + _touching_pairs(seed + 1, n_pairs)
    for _ in range(n_pairs):
        K = random_polygon(rng)
        corpus.append((K, negate(K)))
    positives = 0
    for K, L in corpus:
        lows = {p: lower_mean_2d(K, L, p) for p in BOTH_EXACT}
        ups = {p: upper_mean_2d(K, L, p) for p in BOTH_EXACT}
        inter, hull = lows[-INF], ups[INF]
        base_low = {q: _has_cert(inter, lows[q]) for q in BOTH_EXACT}
        base_up = {p: _has_cert(ups[p], hull) for p in BOTH_EXACT}
        base_mixed = _has_cert(inter, hull)
        for i, p in enumerate(BOTH_EXACT):
            for q in BOTH_EXACT[i + 1:]:
                for label, lhs, rhs in (
                        ("lower_p in lower_q vs intersection in lower_q",
                         _has_cert(lows[p], lows[q]), base_low[q]),
                        ("upper_p in upper_q vs upper_p in hull",
                         _has_cert(ups[p], ups[q]), base_up[p]),
                        ("lower_p in upper_q vs intersection in hull",
                         _has_cert(lows[p], ups[q]), base_mixed)):
                    if lhs is None or rhs is None:
                        rec.require(f"{label}: containment holds", False, K=K, L=L)
                        continue
                    positives += lhs
                    rec.require(f"{label}: certificates agree", lhs == rhs, K=K, L=L)
    sym = [(K, negate(K)) for K, _ in corpus[:n_pairs]]
    sym += [(random_symmetric_polygon(rng), random_symmetric_polygon(rng)) for _ in range(n_pairs)]
    for K, L in sym:
        for p in BOTH_EXACT:
            ok = _has_cert(lower_mean_2d(K, L, p), upper_mean_2d(K, L, p))
            rec.require("0-symmetric means: lower_p optimally inside upper_p", bool(ok), K=K, L=L)
    rec.note(f"{positives} optimal instances among the comparisons")
    return rec.result()


def _chain_bodies(K, L, p, q, R):
    return {
        "hull": conv_union(K, L),
        "upper_q": scale(upper_mean_2d(K, L, q), power_mean(-q, R, 1.0)),
        "upper_p": scale(upper_mean_2d(K, L, p), power_mean(-p, R, 1.0)),
        "lower_q": scale(lower_mean_2d(K, L, q), power_mean(-q, R, 1.0)),
        "lower_p": scale(lower_mean_2d(K, L, p), power_mean(-p, R, 1.0)),
        "outer": scale(intersect(K, L), R),
    }


def check_covering_equalities(seed=11, n_pairs=10, tol=1e-7):
    rec = _Recorder("covering-radii-between-means",
                    "R_0 between two means of the same pair is m_p(R,1)/m_q(R,1) for p >= q and "
                    "lies between that quotient and 1 for p <= q; the scaled means form "
                    "containment chains with a common boundary point",
                    tol)
    for K, L in random_pairs(seed, n_pairs):
        R = r0_max(K, L)
        ups = {p: upper_mean_2d(K, L, p) for p in UPPER_EXACT}
        lows = {p: lower_mean_2d(K, L, p) for p in LOWER_EXACT}
        combos = [("upper/upper", ups, ups), ("lower/lower", lows, lows), ("lower/upper", lows, ups)]
        for label, first, second in combos:
            for p, q in itertools.product(first, second):
                quot = power_mean(p, R, 1.0) / power_mean(q, R, 1.0)
                r = covering_radius(first[p], second[q])
                if p >= q:
                    rec.error(f"{label}, p >= q: |R_0 - quotient|", abs(r - quot), K=K, L=L)
                if p <= q:
                    rec.error(f"{label}, p <= q: quotient - R_0", quot - r, K=K, L=L)
                    rec.error(f"{label}, p <= q: R_0 - 1", r - 1.0, K=K, L=L)
        for i, p in enumerate(BOTH_EXACT):
            for q in BOTH_EXACT[i:]:
                c = _chain_bodies(K, L, p, q, R)
                links = [("hull", "upper_q"), ("upper_q", "upper_p"), ("upper_p", "outer"),
                         ("hull", "lower_q"), ("lower_q", "lower_p"), ("lower_p", "outer")]
                for a, b in links:
                    rec.error("chain link R_0 - 1", covering_radius(c[a], c[b]) - 1.0, K=K, L=L)
                try:
                    common = tight_containment(c["hull"], c["outer"], tol)
                except ContainmentError:
                    common = False
                rec.require("hull and R (K ∩ L) share a boundary point", common, K=K, L=L)
    return rec.result()


def check_mixed_bounds_and_tightness(seed=12, n_pairs=10, tol=1e-7,
                                     radii=(1.5, 3.0, 10.0), ps=(1.0, 2.0), qs=(-1.0, 0.0, 1.0)):
    rec = _Recorder("upper-in-lower-radius-bounds",
                    "m_p/m_q <= R_0(upper_p, lower_q) <= min(m_p, m_-q); the upper bound is "
                    "attained by the cross body against its negative",
                    tol)
    for K, L in random_pairs(seed, n_pairs):
        R = r0_max(K, L)
        grid = default_grid(K, L)
        ups = {p: _MeanBody(K, L, "upper", p, grid) for p in SAMPLE_P}
        lows = {q: _MeanBody(K, L, "lower", q, grid) for q in SAMPLE_P}
        for p in SAMPLE_P:
            for q in SAMPLE_P:
                lo, hi = radius_bounds(ups[p], lows[q])
                floor = power_mean(p, R, 1.0) / power_mean(q, R, 1.0)
                ceil = min(power_mean(p, R, 1.0), power_mean(-q, R, 1.0))
                slack = SAMPLED_TOL * R if _is_sampled(ups[p], lows[q]) else tol
                tag = ", sampled" if _is_sampled(ups[p], lows[q]) else ""
                rec.error(f"floor - R_0{tag}", floor - hi, slack, K=K, L=L)
                rec.error(f"R_0 - min(m_p, m_-q){tag}", lo - ceil, slack, K=K, L=L)
    for R in radii:
        K = cross_body(2, R)
        nK = negate(K)
        for q in qs:
            low = lower_mean_2d(K, nK, q)
            box = scale(b_inf(), power_mean(q, R, 1.0))
            rec.error("cross body: lower_q vs m_q(R,1) B_inf", hausdorff_2d(low, box), 1e-9 * R, K=K)
            for p in ps:
                if p <= 1:
                    r = covering_radius(upper_mean_2d(K, nK, p), low)
                else:
                    r = covering_radius_of_upper(K, nK, p, low)
                rec.error("cross body: |R_0(upper_p, lower_q) - m_-q(R,1)|",
                          abs(r - power_mean(-q, R, 1.0)), K=K)
    return rec.result()


def check_mixed_refined(seed=13, n_pairs=6):
    rec = _Recorder("refined-upper-in-lower-bound",
                    "for p > 1 > -1 > q the radius obeys the two-dimensional norm bound, which is "
                    "(R+1)/2 when q >= -p/(p-1), strictly below min(m_p, m_-q) otherwise, "
                    "and attained by the cross body",
                    1e-9)
    rec.error("bound(2, -3/2, 3) - 2", abs(covering_bound_mixed(2.0, -1.5, 3.0) - 2.0), 1e-12)
    for p, q in ((2.0, -4.0), (2.0, -10.0), (3.0, -5.0), (1.5, -4.0)):
        if not q < -p / (p - 1):
            continue
        for R in (1.5, 3.0, 10.0):
            b = covering_bound_mixed(p, q, R)
            margin = min(power_mean(-q, R, 1.0), power_mean(p, R, 1.0)) - b
            rec.error("1e-4 - gap below min(m_p, m_-q)", 1e-4 - margin, 0.0)
            rec.error("(R+1)/2 - bound", (R + 1) / 2 - b, 1e-12)
    cases = ((2.0, -1.5), (2.0, -4.0), (3.0, -2.0))
    for K, L in random_pairs(seed, n_pairs):
        R = r0_max(K, L)
        grid = default_grid(K, L)
        for p, q in cases:
            lo, _ = radius_bounds(_MeanBody(K, L, "upper", p, grid), _MeanBody(K, L, "lower", q, grid))
            rec.error("sampled R_0 - bound", lo - covering_bound_mixed(p, q, R), 1e-9, K=K, L=L)
    for R in (1.5, 3.0):
        K = cross_body(2, R)
        nK = negate(K)
        grid = default_grid(K, nK, n_angles=8192)
        for p, q in cases:
            lo, hi = radius_bounds(_MeanBody(K, nK, "upper", p, grid), _MeanBody(K, nK, "lower", q, grid))
            b = covering_bound_mixed(p, q, R)
            rec.error("cross body: bound - sampled R_0 (attainment)", b - lo, SAMPLED_TOL * R, K=K)
            rec.error("cross body: sampled R_0 - bound", lo - b, 1e-9, K=K)
    return rec.result()


def check_strictness_2d(seed=14, n_pairs=10, cases=((0.0, 0.0), (0.5, 0.5), (0.0, 1.0))):
    rec = _Recorder("planar-strictness",
                    "in the plane R_0(upper_p, lower_q) stays strictly below min(m_p, m_-q) "
                    "for p < 1, q > -1 and non-dilatate pairs",
                    0.0)
    for K, L in random_pairs(seed, n_pairs):
        R = r0_max(K, L)
        for p, q in cases:
            r = covering_radius(upper_mean_2d(K, L, p), lower_mean_2d(K, L, q))
            ceil = min(power_mean(p, R, 1.0), power_mean(-q, R, 1.0))
            rec.error(f"(p, q) = ({p:g}, {q:g}): R_0 - ceiling + 1e-6 (R - 1)",
                      r - ceil + 1e-6 * (R - 1.0), 0.0, K=K, L=L)
    return rec.result()


def check_banach_mazur_bound(seed=15, n_random=4):
    rec = _Recorder("banach-mazur-bound",
                    "a body sandwiched between lower_p and upper_p of (K, L) is within R_0^max "
                    "of K; for Minkowski-centered K and L = -K the bound equals s(K)",
                    TAU_GEOM)
    rng = np.random.default_rng(seed)
    bodies = [regular_triangle(), triangle_family(1.5), bm_pentagon()]
    bodies += [minkowski_centered(random_polygon(rng)) for _ in range(n_random)]
    for K in bodies:
        s = minkowski_asymmetry(K).s
        nK = negate(K)
        cands = []
        for p in BOTH_EXACT:
            cands.append((p, "lower", lower_mean_2d(K, nK, p)))
            cands.append((p, "upper", upper_mean_2d(K, nK, p)))
        G, _ = gmean_iterate(K, nK, 0.0, tol=BATTERY_TOL)
        cands.append((0.0, "G_0", G))
        for p, kind, C in cands:
            b = bm_distance_upper_bound(K, nK, C, p, tol=1e-7)
            if b is None:
                rec.require(f"sandwich holds for {kind}", False, K=K, C=C)
                continue
            rec.error("|bound - s(K)|", abs(b - s), 1e-7, K=K, C=C)
            rec.error("C symmetric (hausdorff(C, -C) / size)", hausdorff_2d(C, negate(C)) / _size(C), K=K, C=C)
    for K, L in random_pairs(seed + 1, n_random):
        b = bm_distance_upper_bound(K, L, lower_mean_2d(K, L, 0.5), 0.5)
        rec.error("generic pair: |bound - R_0^max|", abs(b - r0_max(K, L)) if b is not None else INF,
                  K=K, L=L)
        far = bm_distance_upper_bound(K, L, scale(conv_union(K, L), 3.0), 0.5)
        rec.require("3 conv(K ∪ L) leaves the sandwich", far is None, K=K, L=L)
    return rec.result()


def _g(K, L, p=0.0, tol=BATTERY_TOL):
    B, trace = gmean_iterate(K, L, p, tol=tol)
    return B, trace.last.upper_body, trace.last.gap


def symmetry_residual(P, center=None, n_dirs=720):
    """Lower bound on min over c of hausdorff(P, 2c - P), and the minimizing c.

    hausdorff(P, 2c - P) = max over unit u of |h(u) - h(-u) - 2 c.u|; taking
    the max over finitely many u can only lower it.  With ``center`` given the
    reflection through that point alone is measured.
    """
    t = np.arange(n_dirs) * (2 * math.pi / n_dirs)
    u = np.column_stack([np.cos(t), np.sin(t)])
    d = support(P, u) - support(P, -u)
    if center is not None:
        c = np.asarray(center, dtype=float)
        return float(np.max(np.abs(d - 2 * u @ c))), c
    # minimize t subject to |d - 2 u.c| <= t over (c, t)
    G = np.vstack([np.hstack([-2 * u, -np.ones((len(u), 1))]),
                   np.hstack([2 * u, -np.ones((len(u), 1))])])
    h = np.concatenate([-d, d])
    sol = solve_min_max_lp(np.array([0.0, 0.0, 1.0]), G, h, "symmetry residual")
    return float(sol.z[2]), sol.z[:2]


def check_g_properties(seed=16, n_random=2, tol=BATTERY_TOL):
    rec = _Recorder("geometric-mean-properties",
                    "G_p is a self-mean, symmetric, monotone, linearly equivariant, sends (K, K°) "
                    "to the disc, commutes with polarity, sits strictly between the 0-means, "
                    "scales geometrically, symmetrizes (K, -K), keeps the Banach-Mazur distance "
                    "and asymmetry of Minkowski-centered inputs",
                    TAU_GEOM)
    rng = np.random.default_rng(seed)
    T = regular_triangle()
    corpus = [(T, negate(T)), (cross_body(2, 3.0), negate(cross_body(2, 3.0))),
              (triangle_family(1.3), triangle_family(1.7))]
    corpus += [(random_polygon(rng), random_polygon(rng)) for _ in range(n_random)]

    for K, L in corpus:
        s = _size(K, L)
        B, A, gap = _g(K, L, tol=tol)
        rec.error("self-mean (hausdorff / size)", hausdorff_2d(_g(K, K, tol=tol)[0], K) / s, K=K)
        B2 = _g(L, K, tol=tol)[0]
        rec.error("argument swap (hausdorff / size)", hausdorff_2d(B, B2) / s, K=K, L=L)
        # the inner iterate for (K, L) must lie in the outer iterate for larger bodies
        K2 = conv_union(K, scale(random_polygon(rng), 0.9))
        L2 = conv_union(L, scale(random_polygon(rng), 0.9))
        _, A_big, _ = _g(K2, L2, tol=tol)
        rec.error("monotone: R_0(G(K,L) inner, G(K',L') outer) - 1",
                  covering_radius(B, A_big) - 1.0, K=K, L=L, K2=K2, L2=L2)
        M = random_map(rng)
        BM, _, gapM = _g(transform(K, M), transform(L, M), tol=tol)
        allowed = gapM + np.linalg.norm(M, 2) * gap + TAU_GEOM * s
        rec.error("linear map: hausdorff - iteration slack",
                  hausdorff_2d(BM, transform(B, M)) - allowed, 0.0, K=K, L=L)
        Bp, Ap, gapp = _g(polar(K), polar(L), tol=tol)
        slack = gapp + hausdorff_2d(polar(A), polar(B)) + TAU_GEOM * _size(Bp)
        rec.error("polarity: hausdorff - iteration slack", hausdorff_2d(polar(B), Bp) - slack, 0.0,
                  K=K, L=L)
        low0, up0 = lower_mean_2d(K, L, 0), upper_mean_2d(K, L, 0)
        rec.error("lower_0 inside G: R_0 - 1", covering_radius(low0, B) - 1.0, K=K, L=L)
        rec.error("G inside upper_0: R_0 - 1", covering_radius(B, up0) - 1.0, K=K, L=L)
        # G differs from both 0-means (inner iterate outside lower_0, upper_0 outside outer iterate)
        rec.error("G beyond lower_0: 1e-6 - (R_0(inner, lower_0) - 1)",
                  STRICT_GAP - (covering_radius(B, low0) - 1.0), 0.0, K=K, L=L)
        rec.error("upper_0 beyond G: 1e-6 - (R_0(upper_0, outer) - 1)",
                  STRICT_GAP - (covering_radius(up0, A) - 1.0), 0.0, K=K, L=L)
        rec.require("per-step scaling (4, 1), 3 steps", gmean_scaling_check(K, L, 4.0, 1.0, 3), K=K, L=L)
        rec.require("per-step scaling (0.5, 3), 3 steps", gmean_scaling_check(K, L, 0.5, 3.0, 3), K=K, L=L)
        trace = gmean_iterate(K, L, 0.0, tol=tol)[1]
        rec.error("nested iterates: largest excess gauge", monotone_violation(trace), K=K, L=L)
        for p in (-0.5, 0.5):
            Gp = _g(K, L, p, tol=tol)[0]
            Gq = _g(K, L, p + 1e-3, tol=tol)[0]
            rec.error("continuity in p: hausdorff for |dp| = 1e-3", hausdorff_2d(Gp, Gq), 1e-2, K=K, L=L)

    # scaling fails for p = 1 on the triangle pair
    rec.require("p = 1 does not scale geometrically",
                not gmean_scaling_check(T, negate(T), 4.0, 1.0, 3, p=1.0))
    # dilatates give the scaled body
    K = corpus[-1][0]
    B, A, gap = _g(K, scale(K, 2.0), tol=tol)
    rec.error("dilatates: G vs sqrt(2) K", hausdorff_2d(B, scale(K, math.sqrt(2.0))), gap + TAU_GEOM)

    # (P K, polar K) converges to the ellipse sqrt(P) B2
    disc_err = b2_approx_error(4096)
    P = np.array([[2.0, 0.5], [0.5, 1.0]])
    w, V = np.linalg.eigh(P)
    root = V @ np.diag(np.sqrt(w)) @ V.T
    for K, Pm in ((b_inf(), np.eye(2)), (b_inf(), P), (corpus[-1][0], np.eye(2)), (T, P)):
        B, A, gap = _g(transform(K, Pm), polar(K), tol=tol)
        ell = transform(b2_approx(4096), root if Pm is P else np.eye(2))
        bound = gap + np.linalg.norm(Pm if Pm is P else np.eye(2), 2) ** 0.5 * disc_err + TAU_GEOM
        rec.error("ellipse: hausdorff - slack", hausdorff_2d(B, ell) - bound, 0.0, K=K)

    # symmetrization, Banach-Mazur distance and asymmetry
    for K in (T, triangle_family(1.5), bm_pentagon(), minkowski_centered(random_polygon(rng))):
        nK = negate(K)
        B, A, gap = _g(K, nK, tol=tol)
        rec.error("G(K, -K) symmetric (hausdorff / size)", hausdorff_2d(B, negate(B)) / _size(B), K=K)
        b = bm_distance_upper_bound(K, nK, B, 0.0, tol=1e-7)
        sK = minkowski_asymmetry(K).s
        rec.error("Banach-Mazur bound vs s(K)", abs(b - sK) if b is not None else INF, 1e-7, K=K)
    sym = [(random_symmetric_polygon(rng), random_symmetric_polygon(rng))]
    mc = [(triangle_family(1.3), triangle_family(1.7)), (T, triangle_family(1.2)),
          (minkowski_centered(random_polygon(rng)), minkowski_centered(random_polygon(rng)))]
    for K, L in mc + sym:
        B, A, gap = _g(K, L, tol=1e-9)
        sG = minkowski_asymmetry(B).s
        top = max(minkowski_asymmetry(K).s, minkowski_asymmetry(L).s)
        inrad = float(np.min(B.offsets / np.linalg.norm(B.normals, axis=1)))
        rec.error("s(G) - max(s(K), s(L))", sG - top, TAU_GEOM + 4 * gap / inrad, K=K, L=L)
    for K, L in sym:
        B = _g(K, L, tol=tol)[0]
        rec.error("0-symmetric inputs give symmetric G", hausdorff_2d(B, negate(B)) / _size(B), K=K, L=L)

    # strong asymmetry on the triangle family
    worst = 0.0
    for s_ in (1.0, 1.3, 1.7, 2.0):
        for t_ in (1.0, 1.3, 1.7, 2.0):
            B = _g(triangle_family(s_), triangle_family(t_), tol=tol)[0]
            err = abs(minkowski_asymmetry(B).s - math.sqrt(s_ * t_))
            worst = max(worst, err)
            rec.error("s(G_0(K_s, K_t)) vs sqrt(st)", err, 1e-4,
                      K=triangle_family(s_), L=triangle_family(t_))
    return rec.result()


def check_g_convergence(pairs=None, ps=(0.0, 0.5, 1.0), tol=1e-9, max_iter=40):
    rec = _Recorder("geometric-mean-convergence",
                    "the iteration gap stays below its certified bound, reaches the tolerance, "
                    "and the bound contracts with ratio tending to 1/2",
                    tol)
    if pairs is None:
        T = regular_triangle()
        C = cross_body(2, 3.0)
        pairs = [(T, negate(T)), (C, negate(C))]
    for K, L in pairs:
        for p in ps:
            _, trace = gmean_iterate(K, L, p, tol=tol, max_iter=max_iter, raise_on_failure=False)
            excess = max(s.gap - s.bound for s in trace.steps)
            rec.error("gap - bound", excess, 1e-12, K=K, L=L)
            rec.error("final gap", trace.last.gap, tol, K=K, L=L)
            rows = hausdorff_gap_series(trace, extend_to=40)
            ratios = [r for i, _, _, r in rows if i >= 20]
            rec.error("|bound ratio - 1/2| for i >= 20", max(abs(r - 0.5) for r in ratios), 0.05, K=K, L=L)
            if 0 <= p <= 1:
                rec.error("nested iterates: excess gauge", monotone_violation(trace), 1e-9, K=K, L=L)
    return rec.result()


def check_asymmetry_lp():
    rec = _Recorder("asymmetry-lp",
                    "the linear program returns the known Minkowski asymmetries with valid "
                    "optimal-containment certificates",
                    1e-7)
    cases = [("triangle", regular_triangle(), 2.0), ("pentagon", bm_pentagon(), 1.5)]
    cases += [(f"K_{r:g}", triangle_family(r), r) for r in (1.0, 1.3, 1.7, 2.0)]
    for _, K, s in cases:
        res = minkowski_asymmetry(K)
        rec.error("|s - expected|", abs(res.s - s), K=K)
        Kc = Polygon(K.vertices - res.center)
        outer = scale(Kc, res.s)
        inner = negate(Kc)
        rec.error("R_0(-(K-c), s (K-c)) - 1", covering_radius(inner, outer) - 1.0, 1e-9, K=K)
        cert = optimal_containment_certificate(inner, outer)
        rec.require("certificate exists", cert is not None, K=K)
        if cert is not None:
            rec.require("certificate size in [2, 3]", 2 <= len(cert) <= 3, K=K)
            dots = np.einsum("ij,ij->i", cert.normals, cert.points)
            rec.error("|a.x - 1| at contacts", float(np.max(np.abs(dots - 1))), 1e-9, K=K)
            rec.error("|sum w a|", float(np.linalg.norm(cert.weights @ cert.normals)), 1e-9, K=K)
    lam, c = circumradius_with_center(negate(bm_pentagon()), bm_pentagon())
    rec.error("R(-pentagon, pentagon) vs 3/2", abs(lam - 1.5), K=bm_pentagon())
    return rec.result()


def check_dual_logbm(seed=17, n_pairs=100):
    rec = _Recorder("lower-zero-mean-area",
                    "the area of lower_0 is at most the geometric mean of the two areas", 1e-9)
    pairs = random_pairs(seed, n_pairs) + [(b_inf(), b1())]
    for K, L in pairs:
        a = area_2d(lower_mean_2d(K, L, 0))
        rec.error("area(lower_0)^2 / (area K area L) - 1", a * a / (area_2d(K) * area_2d(L)) - 1.0,
                  K=K, L=L)
    return rec.result()


def check_shifted_boxes(tol=1e-9):
    rec = _Recorder("translated-symmetric-pair",
                    "two bodies symmetric about the same off-origin point have 0-means through the "
                    "predicted points but a non-symmetric geometric mean",
                    tol)
    K, L = shifted_boxes()
    low, up = lower_mean_2d(K, L, 0), upper_mean_2d(K, L, 0)
    pts = np.array([[0.0, 10.0], [0.0, -4.0], [18.0, 2.0], [-18.0, 2.0]])
    for name, M in (("lower_0", low), ("upper_0", up)):
        rec.error(f"|gauge - 1| on {name}", float(np.max(np.abs(gauge(M, pts) - 1.0))), K=K, L=L)
    rec.error("K symmetric about (0, 2)", symmetry_residual(K, (0.0, 2.0))[0], 1e-9)
    rec.error("L symmetric about (0, 2)", symmetry_residual(L, (0.0, 2.0))[0], 1e-9)
    B, trace = gmean_iterate(K, L, 0.0, tol=1e-9)
    best, center = symmetry_residual(B)
    at_mid = symmetry_residual(B, (0.0, 2.0))[0]
    rec.error("0.5 - reflection residual (best center)", 0.5 - best, 0.0, K=K, L=L)
    rec.error("0.5 - reflection residual through (0, 2)", 0.5 - at_mid, 0.0, K=K, L=L)
    rec.note(f"best residual {best:.4f} at center ({center[0]:.4f}, {center[1]:.4f})")
    return rec.result()


CHECKS = {
    "firey-ordering": check_firey_ordering,
    "polar-duality": check_duality,
    "lower-inside-upper": check_lower_in_upper,
    "monotone-in-p-and-arguments": check_monotone_in_p_and_args,
    "linear-equivariance": check_linear_equivariance,
    "common-boundary-points": check_common_boundary_points,
    "upper-equals-lower": check_eq_upper_lower,
    "p-mean-equals-q-mean": check_eq_p_q,
    "strict-monotonicity": check_strict_monotonicity_p_ge_1,
    "polytopal-means": check_polytopality,
    "optimal-containment": check_optimal_containment,
    "covering-radii-between-means": check_covering_equalities,
    "upper-in-lower-radius-bounds": check_mixed_bounds_and_tightness,
    "refined-upper-in-lower-bound": check_mixed_refined,
    "planar-strictness": check_strictness_2d,
    "banach-mazur-bound": check_banach_mazur_bound,
    "geometric-mean-properties": check_g_properties,
    "geometric-mean-convergence": check_g_convergence,
    "asymmetry-lp": check_asymmetry_lp,
    "lower-zero-mean-area": check_dual_logbm,
    "translated-symmetric-pair": check_shifted_boxes,
}

_SEEDED = {name for name, fn in CHECKS.items() if "seed" in fn.__code__.co_varnames}


def run_check(name, seed=None):
    """Run one named check; crashes become failed results."""
    fn = CHECKS[name]
    start = time.perf_counter()
    try:
        if seed is not None and name in _SEEDED:
            res = fn(seed=seed)
        else:
            res = fn()
    except Exception as exc:  # a crash is reported as a failure, never swallowed silently
        res = CheckResult(name, "fail", [], 0.0,
                          f"{type(exc).__name__}: {exc}\n{traceback.format_exc(limit=4)}",
                          (fn.__doc__ or "").strip())
    res.seconds = time.perf_counter() - start
    return res


def _run_named(args):
    return run_check(*args)


def run_suite(seed=None, filter=None, jobs=1):
    """Run every check whose id contains ``filter`` (all when None)."""
    names = [n for n in CHECKS if filter is None or filter in n]
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_named, [(n, seed) for n in names]))
    return [run_check(n, seed) for n in names]


def format_report(results):
    """Plain-text report; failing checks include their witness body files."""
    lines = []
    for r in results:
        lines.append(f"[{r.status.upper()}] {r.id} ({r.seconds:.2f} s) - {r.statement}")
        for label, worst, limit, n in r.measured:
            lines.append(f"    {label}: worst {worst:.3e} (limit {limit:.1e}, {n} cases)")
        if r.detail:
            lines.append("    " + r.detail.replace("\n", "\n    "))
        if not r.passed:
            for name, body in r.witness.items():
                lines.append(f"    witness {name}:")
                lines.append("      " + bodyfile.dumps(body, name).rstrip().replace("\n", "\n      "))
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
