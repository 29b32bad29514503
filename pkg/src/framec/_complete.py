"""Shared plumbing for the three completion methods.

Each method reduces its completion problem to one linear system
coef @ X = rhs, solved by minimum-norm least squares.  What differs is
how a solution X and each homogeneous direction are realized as an
n x k dual matrix.  The helpers here canonicalize arbitrary prescribed
positions to a leading block by column permutation, classify the solve
outcome, and assemble the (un-permuted) CompletionOutcome.
"""

from __future__ import annotations

import numpy as np

from .errors import BadShape
from .frames import (Certificate, Family, Frame, NoCompletion, PartialDual,
                     SolutionFamily, Unique)
from .linalg import LinSolve, numerical_rank


def check_partial(f: Frame, pd: PartialDual) -> None:
    if pd.H.shape[0] != f.n:
        raise BadShape(
            f"prescribed columns have {pd.H.shape[0]} rows, frame has {f.n}")
    if pd.s > f.k:
        raise BadShape(f"{pd.s} prescribed columns for a frame with k={f.k}")
    if pd.indices and pd.indices[-1] >= f.k:
        raise BadShape(f"position {pd.indices[-1]} out of range 0..{f.k - 1}")


def leading_permutation(pd: PartialDual, k: int) -> np.ndarray:
    """Column order that moves the prescribed positions to the front."""
    pres = set(pd.indices)
    return np.array(list(pd.indices) + [j for j in range(k) if j not in pres],
                    dtype=int)


def unpermute(gp: np.ndarray, perm: np.ndarray) -> np.ndarray:
    """Undo a column permutation: column perm[j] of the result is gp[:, j]."""
    out = np.empty_like(gp)
    out[:, perm] = gp
    return out


def assemble_outcome(f: Frame, pd: PartialDual, lin: LinSolve,
                     coef: np.ndarray, rhs: np.ndarray,
                     particular_p: np.ndarray, perm: np.ndarray, realize):
    """Turn a reduced solve into a CompletionOutcome.

    particular_p is the candidate dual in permuted coordinates (only
    meaningful when lin.consistent).  realize(direction, row) must build
    the permuted-coordinate homogeneous dual matrix that places the
    given nullspace direction in the given row.  Basis elements are
    ordered by nullspace column index, then row.
    """
    if not lin.consistent:
        cert = Certificate(
            rank_free=numerical_rank(coef),
            rank_augmented=numerical_rank(np.hstack([coef, rhs])),
            projector_residual=lin.residual)
        return NoCompletion(certificate=cert)
    particular = unpermute(particular_p, perm)
    directions = lin.nullspace
    if directions.shape[1] == 0:
        return Unique(G=particular)
    basis = []
    for i in range(directions.shape[1]):
        for row in range(f.n):
            basis.append(unpermute(realize(directions[:, i], row), perm))
    fam = SolutionFamily(frame=f, particular=particular, basis=tuple(basis),
                         dof=f.n * directions.shape[1], prescribed=pd)
    return Family(family=fam)
