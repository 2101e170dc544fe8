"""The iterated geometric mean G_p of two planar bodies.

Starting from the upper p-mean and lower (-p)-mean of (K, L), both means are
applied again to the current pair until the two bodies agree within a
tolerance.  The Hausdorff gap after i steps is bounded by
``max|v| * (R_p(i) - 1)`` with ``max|v|`` the largest vertex norm of K and L
and R_p(i) the iteration rate started at R_0^max(K, L).
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .bodies import TAU_GEOM, scale
from .containment import covering_radius, r0_max
from .errors import ConvergenceError, DomainError, UnsupportedExactError
from .means import (
    DirectionGrid,
    lower_mean_2d,
    lower_mean_sampled,
    upper_mean_2d,
    upper_mean_sampled,
)
from .polygon_ops import hausdorff_2d
from .scalar import check_exponent, iteration_rate_excess

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
    "StepRecord",
    "IterationTrace",
    "gmean_iterate",
    "gmean",
    "gap_bound",
    "hausdorff_gap_series",
    "monotone_violation",
    "gmean_scaling_check",
]

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 60


@dataclass(frozen=True)
class StepRecord:
    i: int
    upper_body: object
    lower_body: object
    gap: float
    bound: float


@dataclass
class IterationTrace:
    p: float
    r0max: float
    max_norm: float
    steps: list = field(default_factory=list)
    approximate: bool = False

    def bound(self, i):
        return gap_bound(self.p, self.r0max, self.max_norm, i)

    @property
    def last(self):
        return self.steps[-1]

    @property
    def gaps(self):
        return np.array([s.gap for s in self.steps])

    @property
    def bounds(self):
        return np.array([s.bound for s in self.steps])

    def __len__(self):
        return len(self.steps)


def gap_bound(p, r0max, max_norm, i):
    """Certified Hausdorff gap after i steps."""
    return max_norm * iteration_rate_excess(p, r0max, i)


def _max_norm(*bodies):
    return max(float(np.max(np.linalg.norm(b.vertices, axis=1))) for b in bodies)


def _fixed_grid(n_angles):
    t = np.arange(n_angles) * (2 * math.pi / n_angles)
    return DirectionGrid(2, np.column_stack([np.cos(t), np.sin(t)]))


def gmean_iterate(K, L, p=0.0, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER,
                  approximate=False, grid_size=4096, raise_on_failure=True):
    """Iterate the upper p / lower (-p) means until their Hausdorff gap is <= tol.

    Returns ``(lower_iterate, trace)``.  Exponents outside [-1, 1] need
    ``approximate=True``, which replaces the exact means by grid
    approximations on ``grid_size`` equally spaced directions; their gap
    levels off at the grid resolution, so ``tol`` has to stay above it.
    """
    p = check_exponent(p)
    if math.isinf(p):
        raise DomainError("G_p needs a finite exponent")
    if not tol > 0:
        raise DomainError("tol must be positive")
    exact = -1.0 <= p <= 1.0
    if not exact and not approximate:
        raise UnsupportedExactError(
            f"exact G_p iteration needs p in [-1, 1], got {p}; pass approximate=True")
    if exact:
        def step(A, B):
            return upper_mean_2d(A, B, p), lower_mean_2d(A, B, -p)
    else:
        grid = _fixed_grid(grid_size)

        def step(A, B):
            return upper_mean_sampled(A, B, p, grid), lower_mean_sampled(A, B, -p, grid)

    trace = IterationTrace(p, r0_max(K, L), _max_norm(K, L), approximate=not exact)
    A, B = step(K, L)
    for i in range(1, max_iter + 1):
        gap = hausdorff_2d(A, B)
        trace.steps.append(StepRecord(i, A, B, gap, trace.bound(i)))
        if gap <= tol:
            return B, trace
        if i < max_iter:
            A, B = step(A, B)
    if raise_on_failure:
        raise ConvergenceError(
            f"gap {trace.last.gap:.3g} above tol {tol:.3g} after {max_iter} steps", trace)
    return B, trace


def gmean(K, L, p=0.0, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, **kwargs):
    """G_p(K, L) represented by the inner iterate at the stopping step."""
    return gmean_iterate(K, L, p, tol, max_iter, **kwargs)[0]


def hausdorff_gap_series(trace, extend_to=None):
    """Rows ``(i, gap, bound, ratio)`` with ratio = bound_i / bound_{i-1}.

    With ``extend_to`` the bound is continued analytically beyond the last
    recorded step (gap None there), which shows the limiting ratio 1/2.
    """
    if not trace.steps:
        raise DomainError("empty trace")
    rows = []
    prev = gap_bound(trace.p, trace.r0max, trace.max_norm, 0)
    last = trace.steps[-1].i
    stop = max(last, extend_to or 0)
    recorded = {s.i: s for s in trace.steps}
    for i in range(1, stop + 1):
        bound = trace.bound(i)
        gap = recorded[i].gap if i in recorded else None
        ratio = bound / prev if prev > 0 else None
        rows.append((i, gap, bound, ratio))
        prev = bound
    return rows


def monotone_violation(trace):
    """Largest excess gauge over 1 in the chain B_i ⊂ B_{i+1} ⊂ A_{i+1} ⊂ A_i."""
    worst = 0.0
    steps = trace.steps
    for s in steps:
        worst = max(worst, covering_radius(s.lower_body, s.upper_body) - 1.0)
    for s, t in zip(steps, steps[1:]):
        worst = max(worst, covering_radius(s.lower_body, t.lower_body) - 1.0)
        worst = max(worst, covering_radius(t.upper_body, s.upper_body) - 1.0)
    return worst


def _iterates(K, L, p, n):
    A, B = upper_mean_2d(K, L, p), lower_mean_2d(K, L, -p)
    out = [(A, B)]
    for _ in range(n - 1):
        A, B = upper_mean_2d(A, B, p), lower_mean_2d(A, B, -p)
        out.append((A, B))
    return out


def gmean_scaling_check(K, L, alpha, beta, i, p=0.0, tol=TAU_GEOM):
    """Do i steps on (alpha K, beta L) equal sqrt(alpha beta) times those on (K, L)?

    The identity holds for p = 0; other exponents are accepted to show that it fails.
    """
    if not (alpha > 0 and beta > 0):
        raise DomainError("scaling factors must be positive")
    factor = math.sqrt(alpha * beta)
    base = _iterates(K, L, p, i)
    scaled = _iterates(scale(K, alpha), scale(L, beta), p, i)
    ref = max(1.0, factor * _max_norm(K, L))
    for (A, B), (A2, B2) in zip(base, scaled):
        if hausdorff_2d(scale(A, factor), A2) > tol * ref:
            return False
        if hausdorff_2d(scale(B, factor), B2) > tol * ref:
            return False
    return True
