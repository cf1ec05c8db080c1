"""Dominant left singular vector and angular ranking.

Only the direction of the best rank-one approximation is ever consumed,
so instead of a full SVD we run power iteration on A*A^T, computed in the
Gram order A @ (A.T @ x) so the m x m product is never formed. For a
nonnegative matrix and the all-ones start vector the iterates stay
nonnegative and converge to the Perron vector of the dominant connected
component, deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import WordMatrix

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10_000


class EmptyMatrixError(ValueError):
    """The matrix has no columns."""


class ZeroVectorError(ValueError):
    """A zero vector has no direction, hence no angle."""


class NoConvergenceError(RuntimeError):
    """Power iteration hit max_iter with a residual well above tolerance."""


@dataclass(frozen=True)
class DominantVector:
    """Unit eigenvector of A*A^T with the largest eigenvalue."""

    values: np.ndarray
    eigenvalue: float
    iterations: int
    residual: float

    @property
    def dim(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class RankedCandidate:
    word: str
    theta: float  # radians
    column_index: int


def _as_array(matrix: WordMatrix | np.ndarray) -> np.ndarray:
    array = matrix.array if isinstance(matrix, WordMatrix) else np.asarray(matrix, dtype=float)
    if array.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return array


def dominant_left_singular_vector(
    matrix: WordMatrix | np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> DominantVector:
    """Power iteration for u1, started from the normalized all-ones vector.

    Stops when the normalized iterate moves by at most ``tol`` in Euclidean
    norm. The reported eigenvalue is the final Rayleigh quotient. Raises
    NoConvergenceError only when max_iter is exhausted and the residual is
    worse than 100*tol.
    """
    A = _as_array(matrix)
    if A.shape[1] == 0:
        raise EmptyMatrixError("matrix has no columns")
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter at least 1")

    m = A.shape[0]
    x = np.full(m, 1.0 / np.sqrt(m))
    iterations = 0
    for iterations in range(1, max_iter + 1):
        y = A @ (A.T @ x)
        norm = np.linalg.norm(y)
        if norm == 0.0:
            # x is orthogonal to the column space; the all-ones start makes
            # this possible only for an all-zero matrix.
            raise ZeroVectorError("matrix maps the start vector to zero")
        y /= norm
        if y @ x < 0:
            y = -y
        converged = np.linalg.norm(y - x) <= tol
        x = y
        if converged:
            break
    else:
        converged = False

    if x.sum() < 0:
        x = -x
    Mx = A @ (A.T @ x)
    eigenvalue = float(x @ Mx)
    residual = float(np.linalg.norm(Mx - eigenvalue * x))
    if not converged and residual > 100.0 * tol:
        raise NoConvergenceError(
            f"no convergence after {max_iter} iterations (residual {residual:.3e})"
        )
    # Perron orientation leaves at most tiny negative noise; clamp it.
    x = np.where((x < 0) & (x > -1e-9), 0.0, x)
    return DominantVector(values=x, eigenvalue=eigenvalue, iterations=iterations, residual=residual)


def angle_to(u: DominantVector | np.ndarray, col: np.ndarray) -> float:
    """Angle in radians between ``u`` and ``col`` (cosine similarity)."""
    uv = u.values if isinstance(u, DominantVector) else np.asarray(u, dtype=float)
    col = np.asarray(col, dtype=float)
    nu = np.linalg.norm(uv)
    nc = np.linalg.norm(col)
    if nu == 0.0 or nc == 0.0:
        raise ZeroVectorError("angle undefined for a zero vector")
    return float(np.arccos(np.clip((uv @ col) / (nu * nc), -1.0, 1.0)))


def rank_candidates(matrix: WordMatrix, u: DominantVector) -> list[RankedCandidate]:
    """All columns sorted by ascending angle to ``u``; ties keep column order."""
    A = matrix.array
    if u.dim != A.shape[0]:
        raise ValueError(f"dimension mismatch: u is {u.dim}-dim, matrix is {A.shape[0]}-dim")
    col_norms = np.linalg.norm(A, axis=0)
    if np.any(col_norms == 0.0):
        raise ZeroVectorError("matrix contains a zero column")
    cos = (u.values @ A) / (np.linalg.norm(u.values) * col_norms)
    thetas = np.arccos(np.clip(cos, -1.0, 1.0))
    order = np.argsort(thetas, kind="stable")
    return [
        RankedCandidate(word=matrix.words[i], theta=float(thetas[i]), column_index=int(i))
        for i in order
    ]
