"""A dense two-phase simplex method for the small programs used here."""

from dataclasses import dataclass, field

import numpy as np

__all__ = ["TAU_LP", "OPTIMAL", "INFEASIBLE", "UNBOUNDED", "STUCK", "LPProblem", "LPSolution", "lp_solve"]

TAU_LP = 1e-9

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
STUCK = "numerically-stuck"


@dataclass
class LPProblem:
    """Minimize ``c . z`` subject to ``G z <= h`` and ``A z = b``.

    Variables are free unless flagged in ``nonneg``.
    """

    c: np.ndarray
    G: np.ndarray = None
    h: np.ndarray = None
    A: np.ndarray = None
    b: np.ndarray = None
    nonneg: np.ndarray = None

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float).reshape(-1)
        n = len(self.c)
        self.G = np.zeros((0, n)) if self.G is None else np.asarray(self.G, dtype=float).reshape(-1, n)
        self.h = np.zeros(0) if self.h is None else np.asarray(self.h, dtype=float).reshape(-1)
        self.A = np.zeros((0, n)) if self.A is None else np.asarray(self.A, dtype=float).reshape(-1, n)
        self.b = np.zeros(0) if self.b is None else np.asarray(self.b, dtype=float).reshape(-1)
        if self.nonneg is None:
            self.nonneg = np.zeros(n, dtype=bool)
        self.nonneg = np.asarray(self.nonneg, dtype=bool).reshape(-1)
        if len(self.G) != len(self.h) or len(self.A) != len(self.b) or len(self.nonneg) != n:
            raise ValueError("inconsistent LP dimensions")
        if len(self.G) + len(self.A) == 0:
            raise ValueError("an LP needs at least one constraint")
        for arr in (self.c, self.G, self.h, self.A, self.b):
            if not np.all(np.isfinite(arr)):
                raise ValueError("LP data must be finite")

    @property
    def n_vars(self):
        return len(self.c)


@dataclass
class LPSolution:
    status: str
    z: np.ndarray = None
    value: float = float("nan")
    pivots: int = 0
    detail: str = field(default="")

    @property
    def ok(self):
        return self.status == OPTIMAL


def _pivot(T, row, col):
    T[row] /= T[row, col]
    col_vals = T[:, col].copy()
    col_vals[row] = 0.0
    T -= np.outer(col_vals, T[row])


def _run_simplex(T, basis, n_cols, max_pivots, tol):
    """Bland's rule on tableau ``T`` whose last row is the reduced-cost row.

    Only the first ``n_cols`` columns may enter.  Returns (status, pivots).
    """
    m = len(basis)
    for it in range(max_pivots):
        reduced = T[-1, :n_cols]
        candidates = np.flatnonzero(reduced < -tol)
        if len(candidates) == 0:
            return OPTIMAL, it
        col = int(candidates[0])
        column = T[:m, col]
        pos = column > tol
        if not np.any(pos):
            return UNBOUNDED, it
        ratios = np.full(m, np.inf)
        ratios[pos] = T[:m, -1][pos] / column[pos]
        best = np.min(ratios)
        ties = np.flatnonzero(ratios <= best + tol * max(1.0, abs(best)))
        row = int(ties[np.argmin(np.asarray(basis)[ties])])
        _pivot(T, row, col)
        basis[row] = col
    return STUCK, max_pivots


def lp_solve(problem, tol=TAU_LP, max_pivots=None):
    """Solve ``problem`` and return an :class:`LPSolution` (never raises on LP status).

    Ties in the ratio test are broken within ``tol``, which on near-parallel
    rows can leave phase 1 with a spurious positive residual.  An infeasible
    or stuck verdict is therefore confirmed with two finer tolerances.
    """
    sol = _solve_once(problem, tol, max_pivots)
    for finer in (tol * 1e-1, tol * 1e-2):
        if sol.status not in (INFEASIBLE, STUCK):
            break
        sol = _solve_once(problem, finer, max_pivots)
    return sol


def _solve_once(problem, tol, max_pivots):
    c = problem.c
    n = problem.n_vars
    free = np.flatnonzero(~problem.nonneg)
    # columns: original variables (free ones taken as z+), then z- for free ones
    G = np.hstack([problem.G, -problem.G[:, free]])
    A = np.hstack([problem.A, -problem.A[:, free]])
    cost = np.concatenate([c, -c[free]])
    n_x = n + len(free)
    n_ub, n_eq = len(G), len(A)
    rows = n_ub + n_eq
    # standard form: [G I; A 0] [x; s] = [h; b], x, s >= 0
    M = np.zeros((rows, n_x + n_ub))
    M[:n_ub, :n_x] = G
    M[:n_ub, n_x:] = np.eye(n_ub)
    M[n_ub:, :n_x] = A
    rhs = np.concatenate([problem.h, problem.b])
    flip = rhs < 0
    M[flip] *= -1
    rhs = np.where(flip, -rhs, rhs)
    n_std = n_x + n_ub
    if max_pivots is None:
        max_pivots = 50 * (rows + n_std) + 100

    # phase 1 with one artificial per row
    T = np.zeros((rows + 1, n_std + rows + 1))
    T[:rows, :n_std] = M
    T[:rows, n_std:n_std + rows] = np.eye(rows)
    T[:rows, -1] = rhs
    T[-1, :n_std] = -M.sum(axis=0)
    T[-1, -1] = -rhs.sum()
    basis = list(range(n_std, n_std + rows))
    status, piv1 = _run_simplex(T, basis, n_std, max_pivots, tol)
    if status == STUCK:
        return LPSolution(STUCK, pivots=piv1, detail="phase 1 pivot limit")
    scale = max(1.0, float(np.max(np.abs(rhs)))) if rows else 1.0
    if -T[-1, -1] > tol * scale * 10:
        return LPSolution(INFEASIBLE, pivots=piv1)

    # drive artificials out of the basis; drop redundant rows
    keep_rows = []
    for r in range(rows):
        if basis[r] >= n_std:
            cand = np.flatnonzero(np.abs(T[r, :n_std]) > tol)
            if len(cand):
                _pivot(T, r, int(cand[0]))
                basis[r] = int(cand[0])
                keep_rows.append(r)
        else:
            keep_rows.append(r)
    T2 = np.zeros((len(keep_rows) + 1, n_std + 1))
    T2[:-1, :n_std] = T[keep_rows, :n_std]
    T2[:-1, -1] = T[keep_rows, -1]
    basis = [basis[r] for r in keep_rows]
    full_cost = np.concatenate([cost, np.zeros(n_ub)])
    T2[-1, :n_std] = full_cost
    for r, j in enumerate(basis):
        if T2[-1, j] != 0:
            T2[-1] -= T2[-1, j] * T2[r]
    status, piv2 = _run_simplex(T2, basis, n_std, max_pivots, tol)
    pivots = piv1 + piv2
    if status != OPTIMAL:
        return LPSolution(status, pivots=pivots)
    x = np.zeros(n_std)
    for r, j in enumerate(basis):
        x[j] = T2[r, -1]
    z = x[:n].copy()
    z[free] -= x[n:n_x]
    return LPSolution(OPTIMAL, z=z, value=float(c @ z), pivots=pivots)
