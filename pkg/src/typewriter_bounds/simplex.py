"""Dense two-phase primal simplex with Bland's rule.

Solves  min c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0  on a plain
numpy tableau.  Bland's smallest-index rule is used for both the entering
and the leaving variable, so the method cannot cycle; the iteration cap is
only a circuit breaker for numerical breakdown.  Problem sizes here are a
few hundred rows at most, so no effort is spent on sparsity or pricing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["SimplexResult", "simplex_solve"]

_FEAS_TOL = 1e-7


@dataclass(frozen=True)
class SimplexResult:
    status: str  # optimal | infeasible | unbounded | numeric-failure
    x: np.ndarray | None
    objective: float | None
    iterations: int


def _pivot(T: np.ndarray, basis: np.ndarray, row: int, col: int) -> None:
    T[row] /= T[row, col]
    colvals = T[:, col].copy()
    colvals[row] = 0.0
    T -= np.outer(colvals, T[row])
    T[:, col] = 0.0
    T[row, col] = 1.0
    basis[row] = col


def _iterate(T, basis, allowed, tol, max_iter):
    """Run Bland pivots until optimal/unbounded, return (status, count)."""
    m = T.shape[0] - 1
    for it in range(max_iter):
        enter = -1
        for j in allowed:
            if T[-1, j] < -tol:
                enter = j
                break
        if enter < 0:
            return "optimal", it
        leave = -1
        best = np.inf
        for i in range(m):
            a = T[i, enter]
            if a > tol:
                ratio = T[i, -1] / a
                if ratio < best - 1e-12 or (
                    ratio <= best + 1e-12 and (leave < 0 or basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded", it
        _pivot(T, basis, leave, enter)
    return "numeric-failure", max_iter


def simplex_solve(
    c,
    A_ub=None,
    b_ub=None,
    A_eq=None,
    b_eq=None,
    tol: float = 1e-9,
    max_iter: int = 20000,
) -> SimplexResult:
    """Two-phase simplex for min c.x, A_ub x <= b_ub, A_eq x = b_eq, x >= 0."""
    c = np.asarray(c, dtype=float)
    nstruct = c.size
    rows = []
    rhs = []
    n_ub = 0
    if A_ub is not None:
        A_ub = np.atleast_2d(np.asarray(A_ub, dtype=float))
        b_ub = np.atleast_1d(np.asarray(b_ub, dtype=float))
        n_ub = A_ub.shape[0]
        rows.append(A_ub)
        rhs.append(b_ub)
    if A_eq is not None:
        A_eq = np.atleast_2d(np.asarray(A_eq, dtype=float))
        b_eq = np.atleast_1d(np.asarray(b_eq, dtype=float))
        rows.append(A_eq)
        rhs.append(b_eq)
    if not rows:
        raise ValueError("need at least one constraint")
    A = np.vstack(rows)
    b = np.concatenate(rhs)
    m = A.shape[0]
    if A.shape[1] != nstruct:
        raise ValueError(f"constraint width {A.shape[1]} != len(c) = {nstruct}")

    # slack columns for the inequality block, then one artificial per row
    slack = np.zeros((m, n_ub))
    for i in range(n_ub):
        slack[i, i] = 1.0
    full = np.hstack([A, slack])
    neg = b < 0
    full[neg] *= -1.0
    b = np.where(neg, -b, b)
    nvar = nstruct + n_ub
    art = np.eye(m)
    T = np.zeros((m + 1, nvar + m + 1))
    T[:m, :nvar] = full
    T[:m, nvar : nvar + m] = art
    T[:m, -1] = b
    basis = np.arange(nvar, nvar + m)

    # phase 1: minimize the artificial sum, priced out for the initial basis
    T[-1, nvar : nvar + m] = 1.0
    for i in range(m):
        T[-1] -= T[i]
    T[-1, nvar : nvar + m] = 0.0  # keep priced-out zeros exact
    status, it1 = _iterate(T, basis, range(nvar + m), tol, max_iter)
    if status != "optimal":
        return SimplexResult("numeric-failure", None, None, it1)
    if -T[-1, -1] > _FEAS_TOL:
        return SimplexResult("infeasible", None, None, it1)

    # drive leftover artificials out of the basis where the row allows it
    for i in range(m):
        if basis[i] >= nvar:
            for j in range(nvar):
                if abs(T[i, j]) > tol:
                    _pivot(T, basis, i, j)
                    break

    # phase 2: real objective, priced out for the current basis
    T[-1, :] = 0.0
    T[-1, :nstruct] = c
    for i in range(m):
        if basis[i] < nstruct:
            T[-1] -= c[basis[i]] * T[i]

    # Iterated pivot error washes out the tableau on badly scaled columns, so
    # after each optimal sweep the basis is refactorized against the pristine
    # data: exact basic solution and duals decide whether to accept or resume.
    A0 = np.hstack([full, art])
    cext = np.zeros(nvar + m)
    cext[:nstruct] = c
    total = it1
    for _ in range(5):
        status, it2 = _iterate(T, basis, range(nvar), tol, max_iter)
        total += it2
        if status != "optimal":
            return SimplexResult(status, None, None, total)
        try:
            B = A0[:, basis]
            xb = np.linalg.solve(B, b)
            duals = np.linalg.solve(B.T, cext[basis])
        except np.linalg.LinAlgError:
            break
        if xb.min() < -1e-7 * max(1.0, float(np.abs(xb).max())):
            break
        reduced = cext - A0.T @ duals
        if reduced[:nvar].min() >= -tol * max(1.0, float(np.abs(c).max())):
            x = np.zeros(nvar + m)
            x[basis] = np.maximum(xb, 0.0)
            xs = x[:nstruct]
            return SimplexResult("optimal", xs, float(c @ xs), total)
        T[:m, :-1] = np.linalg.solve(B, A0)
        T[:m, -1] = xb
        T[-1, :-1] = reduced
        T[-1, -1] = -float(cext[basis] @ xb)

    x = np.zeros(nvar + m)
    x[basis] = T[:m, -1]
    xs = x[:nstruct]
    return SimplexResult("optimal", xs, float(c @ xs), total)
