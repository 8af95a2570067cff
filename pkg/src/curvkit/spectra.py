"""Small dense symmetric-matrix utilities.

The matrices here are the local quadratic forms of the curvature
computation, so their dimension is bounded by the 2-ball size. Exactness
and bit-for-bit determinism matter more than speed: the eigensolver is a
cyclic Jacobi iteration and Schur elimination goes through a hand-rolled
pivoted Cholesky with a fixed pivot floor.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

PIVOT_FLOOR = 1e-12
_JACOBI_SWEEPS = 100
_JACOBI_TOL = 1e-12


class NonFiniteError(ValueError):
    """Matrix contains NaN or infinity."""


class NotEliminableError(ValueError):
    """Eliminated block is not strictly positive definite.

    For a quadratic form this means unconstrained minimization over the
    eliminated coordinates is unbounded below (or degenerate).
    """


def check_symmetric(m: np.ndarray | Sequence[Sequence[float]]) -> np.ndarray:
    """Validate and return a float64 symmetric matrix (exactly symmetrized)."""
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("matrix dimension must be >= 1")
    if not np.all(np.isfinite(a)):
        raise NonFiniteError("matrix entries must be finite")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if float(np.max(np.abs(a - a.T))) > 1e-12 * max(scale, 1.0):
        raise ValueError("matrix is not symmetric")
    return 0.5 * (a + a.T)


def smallest_eigenvalue(m: np.ndarray | Sequence[Sequence[float]]) -> tuple[float, np.ndarray]:
    """Smallest eigenvalue and a unit eigenvector, by cyclic Jacobi rotations.

    Sweeps stop when the off-diagonal Frobenius norm drops below 1e-12
    times the diagonal norm (at most 100 sweeps). Deterministic for
    identical input; the eigenvector sign is fixed so its largest-magnitude
    component is positive.
    """
    a = check_symmetric(m)
    n = a.shape[0]
    if n == 1:
        return float(a[0, 0]), np.array([1.0])
    # iterate on a unit-scale copy so the off-diagonal norm cannot overflow
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return 0.0, np.eye(n)[:, 0]
    a = a / scale
    v = np.eye(n)
    for _ in range(_JACOBI_SWEEPS):
        off_diag = a - np.diag(np.diag(a))
        off = np.sqrt(np.sum(off_diag * off_diag))
        diag_norm = np.sqrt(np.sum(np.diag(a) ** 2))
        if off <= _JACOBI_TOL * max(diag_norm, np.finfo(float).tiny):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if abs(apq) <= 1e-300:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = (float(a[q, q]) - float(a[p, p])) / (2.0 * apq)
                # hypot avoids overflow of tau*tau for tiny pivots
                if tau >= 0.0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                _rotate(a, v, p, q, c, s)
    diag = np.diag(a)
    idx = int(np.argmin(diag))
    lam = scale * float(diag[idx])
    vec = v[:, idx].copy()
    vec /= np.linalg.norm(vec)
    pivot = int(np.argmax(np.abs(vec)))
    if vec[pivot] < 0.0:
        vec = -vec
    return lam, vec


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, c: float, s: float) -> None:
    # Two-sided rotation a <- J^T a J and accumulation v <- v J, where J is
    # the identity with J[p,p]=J[q,q]=c, J[p,q]=s, J[q,p]=-s.
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    v_p = v[:, p].copy()
    v_q = v[:, q].copy()
    v[:, p] = c * v_p - s * v_q
    v[:, q] = s * v_p + c * v_q


def _pivoted_cholesky(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Factor P^T a P = L L^T with diagonal pivoting; floor on pivots."""
    n = a.shape[0]
    work = a.copy()
    perm = list(range(n))
    for j in range(n):
        k = j + int(np.argmax(np.diag(work)[j:]))
        if work[k, k] <= PIVOT_FLOOR:
            raise NotEliminableError(
                f"pivot {work[k, k]:.3e} at step {j} is below the floor {PIVOT_FLOOR}"
            )
        if k != j:
            work[[j, k], :] = work[[k, j], :]
            work[:, [j, k]] = work[:, [k, j]]
            perm[j], perm[k] = perm[k], perm[j]
        ljj = np.sqrt(work[j, j])
        work[j, j] = ljj
        if j + 1 < n:
            col = work[j + 1 :, j] / ljj
            work[j + 1 :, j] = col
            work[j, j + 1 :] = col
            work[j + 1 :, j + 1 :] -= np.outer(col, col)
    return np.tril(work), perm


def _solve_spd(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a @ x = b for symmetric positive definite a (pivoted Cholesky)."""
    length, perm = _pivoted_cholesky(a)
    rhs = b[perm, :]
    n = a.shape[0]
    y = np.empty_like(rhs)
    for i in range(n):
        y[i] = (rhs[i] - length[i, :i] @ y[:i]) / length[i, i]
    z = np.empty_like(rhs)
    for i in reversed(range(n)):
        z[i] = (y[i] - length[i + 1 :, i] @ z[i + 1 :]) / length[i, i]
    x = np.empty_like(rhs)
    x[perm, :] = z
    return x


def _partition(m: np.ndarray, keep: Sequence[int]) -> tuple[list[int], list[int]]:
    n = m.shape[0]
    keep_list = sorted(set(int(i) for i in keep))
    for i in keep_list:
        if not 0 <= i < n:
            raise ValueError(f"keep index {i} out of range 0..{n - 1}")
    elim = [i for i in range(n) if i not in set(keep_list)]
    return keep_list, elim


def schur_minimize(m: np.ndarray | Sequence[Sequence[float]], keep: Sequence[int]) -> np.ndarray:
    """Schur complement of m onto the kept coordinates.

    For every vector u on the kept coordinates,
    u^T S u = min over w of [u; w]^T m [u; w], the minimum running over the
    eliminated coordinates. Requires the eliminated block to be strictly
    positive definite (NotEliminableError otherwise).
    """
    a = check_symmetric(m)
    keep_list, elim = _partition(a, keep)
    if not elim:
        return a.copy()
    if not keep_list:
        raise ValueError("cannot eliminate every coordinate")
    m_ee = a[np.ix_(elim, elim)]
    m_ek = a[np.ix_(elim, keep_list)]
    m_kk = a[np.ix_(keep_list, keep_list)]
    x = _solve_spd(m_ee, m_ek)
    s = m_kk - m_ek.T @ x
    return 0.5 * (s + s.T)


def schur_minimizer(
    m: np.ndarray | Sequence[Sequence[float]], keep: Sequence[int], u: np.ndarray
) -> np.ndarray:
    """Argmin over eliminated coordinates: w* = -M_ee^{-1} M_ek u."""
    a = check_symmetric(m)
    keep_list, elim = _partition(a, keep)
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (len(keep_list),):
        raise ValueError(f"u has shape {u.shape}, expected ({len(keep_list)},)")
    if not elim:
        return np.zeros(0)
    m_ee = a[np.ix_(elim, elim)]
    m_ek = a[np.ix_(elim, keep_list)]
    return -(_solve_spd(m_ee, m_ek) @ u)
