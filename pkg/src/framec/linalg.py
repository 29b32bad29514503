"""Matrix primitives used by the completion routines.

Everything here is a thin, contract-checked layer over numpy's LAPACK
bindings.  Real input stays float64, complex input stays complex128, and
every routine rejects NaN/inf up front so the solvers never see them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadShape, DimensionMismatch, NonFinite, RankDeficient

# Relative factor behind every default tolerance in the package.
DEFAULT_TOL = 1e-9


def as_matrix(a, allow_empty: bool = False) -> np.ndarray:
    """Validate and convert input to a 2-D float64 or complex128 array."""
    m = np.asarray(a)
    if m.ndim != 2:
        raise BadShape(f"expected a 2-D array, got ndim={m.ndim}")
    if not np.issubdtype(m.dtype, np.number):
        raise BadShape(f"expected numeric entries, got dtype={m.dtype}")
    if np.issubdtype(m.dtype, np.complexfloating):
        m = m.astype(np.complex128)
    else:
        m = m.astype(np.float64)
    if not allow_empty and min(m.shape) == 0:
        raise BadShape(f"matrix must be nonempty, got shape {m.shape}")
    if m.size and not np.isfinite(m).all():
        raise NonFinite("matrix contains NaN or infinite entries")
    return m


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def default_tol(m: np.ndarray) -> float:
    """Working tolerance for a matrix: DEFAULT_TOL * max(1, ||m||_F)."""
    return DEFAULT_TOL * max(1.0, float(np.linalg.norm(m)))


@dataclass(frozen=True)
class SvdFactors:
    """Full SVD of an n x k matrix with n <= k: M = U @ sigma_matrix() @ V*."""

    U: np.ndarray      # n x n unitary
    sigma: np.ndarray  # length n, non-increasing, >= 0
    V: np.ndarray      # k x k unitary, columns are right singular vectors

    def sigma_matrix(self) -> np.ndarray:
        """The n x k rectangular diagonal factor."""
        n = self.sigma.shape[0]
        k = self.V.shape[0]
        out = np.zeros((n, k), dtype=self.U.dtype)
        out[:n, :n] = np.diag(self.sigma)
        return out

    @property
    def vh(self) -> np.ndarray:
        return adjoint(self.V)


def svd(m) -> SvdFactors:
    """Full singular value decomposition of a wide matrix (rows <= cols)."""
    m = as_matrix(m, allow_empty=True)
    n, k = m.shape
    if n > k:
        raise BadShape(f"expected rows <= cols, got {n} x {k}; transpose first")
    u, s, vh = np.linalg.svd(m, full_matrices=True)
    return SvdFactors(U=u, sigma=s, V=adjoint(vh))


def numerical_rank(m, tol: float | None = None) -> int:
    """Number of singular values above the cutoff.

    With tol=None the cutoff is max(rows, cols) * eps * sigma_max, the
    usual machine-precision rule; an explicit tol is used as an absolute
    cutoff on the singular values.
    """
    m = as_matrix(m, allow_empty=True)
    if min(m.shape) == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if tol is None:
        tol = max(m.shape) * np.finfo(s.dtype).eps * (s[0] if s.size else 0.0)
    return int(np.count_nonzero(s > tol))


def pseudoinverse(m) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD with the numerical_rank cutoff."""
    m = as_matrix(m, allow_empty=True)
    if min(m.shape) == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=m.dtype)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    cutoff = max(m.shape) * np.finfo(s.dtype).eps * s[0]
    inv = np.where(s > cutoff, 1.0 / np.where(s > cutoff, s, 1.0), 0.0)
    return adjoint(vh) @ (inv[:, None] * adjoint(u))


def nullspace_basis(m, tol: float | None = None) -> np.ndarray:
    """Orthonormal basis (as columns) for the kernel of m."""
    m = as_matrix(m, allow_empty=True)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return np.eye(cols, dtype=m.dtype)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    if tol is None:
        tol = max(m.shape) * np.finfo(s.dtype).eps * (s[0] if s.size else 0.0)
    rank = int(np.count_nonzero(s > tol))
    return adjoint(vh[rank:, :])


@dataclass(frozen=True)
class LinSolve:
    """Outcome of solving A X = C in the least-squares sense.

    solution is the minimum-Frobenius-norm least-squares solution,
    residual is ||A @ solution - C||_F, nullspace holds an orthonormal
    basis of ker(A) as columns, and consistent says whether the residual
    is small enough that A X = C actually holds.
    """

    solution: np.ndarray
    residual: float
    nullspace: np.ndarray
    consistent: bool


def solve_min_norm(a, c, tol: float | None = None) -> LinSolve:
    """Minimum-norm least-squares solution of A X = C with consistency verdict.

    The system counts as consistent when the residual is at most
    tol * max(1, ||C||_F).  A and C may have zero rows or columns; the
    empty system is consistent with solution zero.
    """
    a = as_matrix(a, allow_empty=True)
    c = as_matrix(c, allow_empty=True)
    if a.shape[0] != c.shape[0]:
        raise DimensionMismatch(
            f"A has {a.shape[0]} rows but C has {c.shape[0]}")
    if tol is None:
        tol = DEFAULT_TOL
    dtype = np.result_type(a.dtype, c.dtype)
    solution = (pseudoinverse(a) @ c).astype(dtype)
    residual = float(np.linalg.norm(a @ solution - c))
    consistent = residual <= tol * max(1.0, float(np.linalg.norm(c)))
    return LinSolve(solution=solution, residual=residual,
                    nullspace=nullspace_basis(a), consistent=consistent)


def in_column_span(a, c, tol: float | None = None) -> bool:
    """Whether every column of c lies in the column span of a.

    Equivalent to rank([a c]) == rank(a); tested through the projector
    residual ||(I - a a^+) c||_F <= tol * max(1, ||c||_F).
    """
    a = as_matrix(a, allow_empty=True)
    c = as_matrix(c, allow_empty=True)
    if a.shape[0] != c.shape[0]:
        raise DimensionMismatch(
            f"a has {a.shape[0]} rows but c has {c.shape[0]}")
    if tol is None:
        tol = DEFAULT_TOL
    residual = float(np.linalg.norm(a @ (pseudoinverse(a) @ c) - c))
    return residual <= tol * max(1.0, float(np.linalg.norm(c)))


@dataclass(frozen=True)
class Elimination:
    """Invertible P with P @ Fstar = [I_n; 0], plus the achieved residual."""

    P: np.ndarray
    residual: float


def eliminate_with_product(fstar, tol: float | None = None) -> Elimination:
    """Row-reduce a tall full-column-rank matrix, accumulating the row ops.

    Gauss-Jordan with partial pivoting on the k x n input (k >= n) builds
    an invertible k x k matrix P with P @ fstar = [I_n; 0].  P is not
    unique; callers must only rely on the residual contract.
    """
    fstar = as_matrix(fstar)
    k, n = fstar.shape
    if k < n:
        raise BadShape(f"expected rows >= cols, got {k} x {n}")
    if tol is None:
        tol = default_tol(fstar)
    if numerical_rank(fstar, tol) < n:
        raise RankDeficient(f"matrix has numerical rank < {n}")
    work = fstar.copy()
    p = np.eye(k, dtype=fstar.dtype)
    for col in range(n):
        piv = col + int(np.argmax(np.abs(work[col:, col])))
        if np.abs(work[piv, col]) <= tol:
            raise RankDeficient(f"no usable pivot in column {col}")
        if piv != col:
            work[[col, piv]] = work[[piv, col]]
            p[[col, piv]] = p[[piv, col]]
        scale = 1.0 / work[col, col]
        work[col] *= scale
        p[col] *= scale
        for row in range(k):
            if row != col and work[row, col] != 0:
                factor = work[row, col]
                work[row] -= factor * work[col]
                p[row] -= factor * p[col]
    target = np.zeros((k, n), dtype=fstar.dtype)
    target[:n, :n] = np.eye(n)
    residual = float(np.linalg.norm(p @ fstar - target))
    return Elimination(P=p, residual=residual)
