"""Covering radii, circumradii, Minkowski asymmetry and optimal containment."""

from dataclasses import dataclass
import math

import numpy as np

from .bodies import TAU_GEOM, gauge, support
from .errors import ContainmentError, DomainError, LPError
from .lp import TAU_LP, UNBOUNDED, LPProblem, lp_solve
from .means import lower_mean_2d, upper_mean_2d
from .scalar import check_exponent, power_mean

__all__ = [
    "CONTACT_TOL",
    "AsymmetryResult",
    "ContainmentCertificate",
    "covering_radius",
    "covering_radius_of_upper",
    "covering_radius_into_lower",
    "r0_max",
    "solve_min_max_lp",
    "circumradius_with_center",
    "minkowski_asymmetry",
    "optimal_containment_certificate",
    "origin_in_hull",
    "covering_bound_mixed",
    "bm_distance_upper_bound",
]

CONTACT_TOL = 1e-6


@dataclass(frozen=True)
class AsymmetryResult:
    s: float
    center: np.ndarray


@dataclass(frozen=True)
class ContainmentCertificate:
    """Contact points ``x`` with outer normals ``a`` (scaled so ``a . x = 1``)."""

    contacts: tuple
    weights: np.ndarray

    @property
    def points(self):
        return np.array([x for x, _ in self.contacts])

    @property
    def normals(self):
        return np.array([a for _, a in self.contacts])

    def __len__(self):
        return len(self.contacts)


def covering_radius(K, L):
    """Smallest lambda >= 0 with K inside lambda L (no translation)."""
    return float(np.max(gauge(L, K.vertices)))


def r0_max(K, L):
    return max(covering_radius(K, L), covering_radius(L, K))


def covering_radius_of_upper(K, L, p, C):
    """R_0(upper_p(K, L), C) for p >= 1 and a polytope C, exactly.

    The support function of the upper mean is m_p(h_K, h_L) for p >= 1, so
    the radius is the largest ratio of that support to the facet offsets of C.
    """
    p = check_exponent(p)
    if p < 1:
        raise DomainError("covering_radius_of_upper needs p >= 1")
    a, b = C.normals, C.offsets
    return float(np.max(power_mean(p, support(K, a), support(L, a)) / b))


def covering_radius_into_lower(C, K, L, q):
    """R_0(C, lower_q(K, L)) for q <= -1 and a polytope C, exactly (gauge oracle)."""
    q = check_exponent(q)
    if q > -1:
        raise DomainError("covering_radius_into_lower needs q <= -1")
    v = C.vertices
    return float(np.max(power_mean(-q, gauge(K, v), gauge(L, v))))


# constraint generation kicks in above this many rows
_DIRECT_ROWS = 300


def solve_min_max_lp(cost, G, h, what="LP"):
    """Minimize ``cost . z`` s.t. ``G z <= h`` with z free, adding rows on demand.

    Small problems go straight to the simplex kernel.  Large ones start from
    an evenly spread subset of rows and repeatedly add the most violated ones,
    which keeps every tableau small when few rows are binding.
    """
    G = np.asarray(G, dtype=float)
    h = np.asarray(h, dtype=float)
    # unit rows keep short polygon edges above the pivot tolerance
    norms = np.linalg.norm(G, axis=1)
    norms[norms == 0] = 1.0
    G = G / norms[:, None]
    h = h / norms
    m = len(G)
    if m <= _DIRECT_ROWS:
        return _solved(LPProblem(cost, G, h), what)
    scale = 1.0 + float(np.max(np.abs(h)))
    active = np.zeros(m, dtype=bool)
    active[np.linspace(0, m - 1, 64).astype(int)] = True
    for _ in range(200):
        idx = np.flatnonzero(active)
        sol = lp_solve(LPProblem(cost, G[idx], h[idx]))
        if sol.status == UNBOUNDED:
            spare = np.flatnonzero(~active)
            active[spare[np.linspace(0, len(spare) - 1, min(len(spare), 64)).astype(int)]] = True
            continue
        if not sol.ok:
            raise LPError(f"{what}: LP status {sol.status}", sol)
        viol = G @ sol.z - h
        # nearly parallel rows leave a residual on the active set itself;
        # violations below it cannot be resolved by adding more rows
        floor = max(TAU_LP * scale, 2.0 * float(np.max(viol[active])))
        viol[active] = -np.inf
        worst = np.argsort(viol)[::-1][:32]
        worst = worst[viol[worst] > floor]
        if len(worst) == 0:
            return sol
        active[worst] = True
    raise LPError(f"{what}: constraint generation did not settle")


def _solved(problem, what):
    sol = lp_solve(problem)
    if not sol.ok:
        raise LPError(f"{what}: LP status {sol.status}", sol)
    return sol


def circumradius_with_center(K, C):
    """Smallest lambda with K inside lambda C + c over all translations c.

    Returns ``(lambda, c)``.  Only one constraint per facet of C is needed:
    the vertex of K maximizing ``a_i . v`` is the binding one.
    """
    a, b = C.normals, C.offsets
    n = a.shape[1]
    hk = support(K, a)
    # variables (c, lam): h_K(a_i) - a_i . c <= lam b_i
    G = np.hstack([-a, -b[:, None]])
    cost = np.zeros(n + 1)
    cost[-1] = 1.0
    sol = solve_min_max_lp(cost, G, -hk, "circumradius")
    c = sol.z[:n]
    # the radius for this center, evaluated directly
    return float(np.max((hk - a @ c) / b)), c


def minkowski_asymmetry(K):
    """Minkowski asymmetry s(K) = R(K, -K) and a Minkowski center.

    K - c inside -rho (K - c) means K inside -rho K + (1 + rho) c.  Writing
    t = (1 + rho) c makes this linear in (t, rho): a facet a . x <= b of K
    gives a . t + h_K(-a) <= rho b.  The center is t / (1 + rho).
    """
    a, b = K.normals, K.offsets
    n = a.shape[1]
    h_neg = support(K, -a)
    G = np.hstack([a, -b[:, None]])
    cost = np.zeros(n + 1)
    cost[-1] = 1.0
    sol = solve_min_max_lp(cost, G, -h_neg, "minkowski asymmetry")
    c = sol.z[:n] / (1.0 + float(sol.z[-1]))
    # the asymmetry for this center, evaluated directly
    rho = float(np.max((h_neg + a @ c) / (b - a @ c)))
    return AsymmetryResult(rho, c)


def origin_in_hull(points, tol=1e-9):
    """Weights ``w >= 0`` summing to 1 with ``sum w_i p_i = 0``, or None.

    A vertex solution is returned, so at most dim + 1 weights are nonzero.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    k, n = pts.shape
    A = np.vstack([pts.T, np.ones((1, k))])
    rhs = np.concatenate([np.zeros(n), [1.0]])
    sol = lp_solve(LPProblem(np.zeros(k), A=A, b=rhs, nonneg=np.ones(k, dtype=bool)), tol=tol)
    if not sol.ok:
        return None
    return np.clip(sol.z, 0.0, None)


def optimal_containment_certificate(K, C, tol=CONTACT_TOL):
    """Certificate that K inside C is optimal (R(K, C) = 1), or None.

    Contacts are vertices of K on the boundary of C, paired with every facet
    of C active there; optimality holds iff 0 is in the hull of those normals.
    """
    g = gauge(C, K.vertices)
    top = float(np.max(g))
    if top > 1.0 + tol:
        raise ContainmentError(f"inner body not contained (max gauge {top:.12g})")
    pairs = []
    for x, gx in zip(K.vertices, g):
        if gx < 1.0 - tol:
            continue
        vals = (C.normals @ x) / C.offsets
        for j in np.flatnonzero(vals >= gx - tol):
            pairs.append((x.copy(), C.normals[j] / C.offsets[j]))
    if len(pairs) < 2:
        return None
    w = origin_in_hull([a for _, a in pairs])
    if w is None:
        return None
    used = np.flatnonzero(w > 1e-12)
    return ContainmentCertificate(tuple(pairs[i] for i in used), w[used])


def _conjugate(p):
    return p / (p - 1.0)


def covering_bound_mixed(p, q, r0max):
    """Upper bound on R_0(upper_p, lower_q) for p > 1, q < -1 in terms of R_0^max.

    Equals 2^(1/q - 1/p) times the maximum over lambda in [0, 1] of
    ||M (1-lambda, lambda)||_{-q} / ||(1-lambda, lambda)||_{p/(p-1)} with
    M = [[R, 1], [1, R]].  When q >= -p/(p-1) this is (R + 1) / 2.
    """
    p = check_exponent(p)
    q = check_exponent(q)
    r = float(r0max)
    if not (p > 1 and q < -1):
        raise DomainError("covering_bound_mixed needs p > 1 and q < -1")
    if not r >= 1.0 or math.isinf(r):
        raise DomainError("r0max must be a finite number >= 1")
    if math.isinf(p) or math.isinf(q):
        raise DomainError("covering_bound_mixed needs finite exponents")
    pc = _conjugate(p)
    if q >= -pc:
        return (r + 1.0) / 2.0
    M = np.array([[r, 1.0], [1.0, r]])

    def ratio(lam):
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        v = np.stack([1.0 - lam, lam])
        num = np.linalg.norm(M @ v, ord=-q, axis=0)
        den = np.linalg.norm(v, ord=pc, axis=0)
        return num / den

    grid = np.linspace(0.0, 1.0, 10001)
    vals = ratio(grid)
    k = int(np.argmax(vals))
    lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
    invphi = (math.sqrt(5) - 1) / 2
    c, d = hi - invphi * (hi - lo), lo + invphi * (hi - lo)
    fc, fd = ratio(c)[0], ratio(d)[0]
    for _ in range(80):
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = ratio(c)[0]
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = ratio(d)[0]
    best = max(float(vals[k]), fc, fd)
    return 2.0 ** (1.0 / q - 1.0 / p) * best


def bm_distance_upper_bound(K, L, C, p, tol=TAU_GEOM):
    """R_0^max(K, L) when lower_p(K, L) inside C inside upper_p(K, L), else None.

    In that case the bound dominates the Banach-Mazur distance d_BM(K, C).
    """
    p = check_exponent(p)
    lower = lower_mean_2d(K, L, p)
    upper = upper_mean_2d(K, L, p)
    if covering_radius(lower, C) > 1.0 + tol or covering_radius(C, upper) > 1.0 + tol:
        return None
    return r0_max(K, L)
