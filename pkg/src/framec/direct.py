"""Completion by solving F G* = I directly on the free columns.

Splitting G into prescribed columns H and unknown columns G_free turns
the dual equation into F_free @ G_free* = I - F_pres @ H*.  Solvability
is a column-span condition on the right-hand side; the minimum-norm
solution gives the particular dual and ker(F_free) parametrizes the
rest of the family, one basis element per (kernel direction, row).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._complete import (assemble_outcome, check_partial, leading_permutation)
from .errors import BadShape, DimensionMismatch, NotDualPair, ZeroWeight
from .frames import (CompletionOutcome, Family, Frame, PartialDual,
                     SolutionFamily, Unique, dual_residual, make_frame)
from .linalg import (DEFAULT_TOL, adjoint, as_matrix, nullspace_basis,
                     pseudoinverse, solve_min_norm)


@dataclass(frozen=True)
class Weights:
    """Diagonal scaling w_1..w_s applied to the prescribed columns.

    Weights are real even for complex frames.  allow_zero=False rejects
    zero entries at construction.
    """

    w: tuple
    allow_zero: bool = False

    def __post_init__(self):
        w = tuple(float(x) for x in self.w)
        object.__setattr__(self, "w", w)
        if not self.allow_zero and any(x == 0.0 for x in w):
            raise ZeroWeight("zero weight with allow_zero=False")


def kernel_condition_holds(f1, g1, tol: float | None = None) -> bool:
    """Whether range(G1*) lies in ker(F1), i.e. F1 @ G1* = 0.

    This is the condition for [G0 G1] to remain a dual of [F0 F1] once
    (F0, G0) is a dual pair.
    """
    f1 = as_matrix(f1, allow_empty=True)
    g1 = as_matrix(g1, allow_empty=True)
    if f1.shape != g1.shape:
        raise DimensionMismatch(f"shapes differ: {f1.shape} vs {g1.shape}")
    if tol is None:
        tol = DEFAULT_TOL
    resid = float(np.linalg.norm(f1 @ adjoint(g1)))
    scale = max(1.0, float(np.linalg.norm(f1)) * float(np.linalg.norm(g1)))
    return resid <= tol * scale


def extend_dual_pair(f0: Frame, g0, f1) -> CompletionOutcome:
    """All duals of [F0 F1] that keep the prescribed block G0.

    Requires (F0, G0) to be a dual pair.  The extensions are exactly
    [G0 G1] with F1 @ G1* = 0, so G1 = 0 is the particular solution and
    the family has one degree of freedom per (kernel direction of F1,
    row).  Independent columns of F1 force the unique extension [G0 0].
    """
    g0 = as_matrix(g0)
    if dual_residual(f0, g0) > f0.tol:
        raise NotDualPair("F0 G0* deviates from the identity beyond tol")
    f1 = as_matrix(f1, allow_empty=True)
    if f1.shape[0] != f0.n:
        raise BadShape(f"F1 has {f1.shape[0]} rows, expected {f0.n}")
    n, s = f0.n, f0.k
    combined = make_frame(np.hstack([f0.mat, f1]))
    k = combined.k
    particular = np.hstack([g0, np.zeros((n, k - s), dtype=g0.dtype)])
    pd = PartialDual(g0, tuple(range(s)))
    directions = nullspace_basis(f1)
    if directions.shape[1] == 0:
        return Unique(G=particular)
    basis = []
    for i in range(directions.shape[1]):
        for row in range(n):
            b = np.zeros((n, k), dtype=combined.mat.dtype)
            b[row, s:] = directions[:, i].conj()
            basis.append(b)
    fam = SolutionFamily(frame=combined, particular=particular,
                         basis=tuple(basis), dof=n * directions.shape[1],
                         prescribed=pd)
    return Family(family=fam)


def complete_direct(f: Frame, pd: PartialDual) -> CompletionOutcome:
    """Complete a partial dual by the free-column linear system.

    Prescribed positions are permuted to the front, the system
    F_free @ G_free* = I - F_pres @ H* is solved by minimum-norm least
    squares, and the outcome is classified by consistency and by the
    kernel of F_free.  s = 0 reproduces the canonical dual as the
    particular member.
    """
    check_partial(f, pd)
    perm = leading_permutation(pd, f.k)
    fp = f.mat[:, perm]
    s = pd.s
    dtype = np.result_type(f.mat.dtype, pd.H.dtype)
    f_pres = fp[:, :s]
    f_free = fp[:, s:].astype(dtype)
    rhs = np.eye(f.n, dtype=dtype) - f_pres @ adjoint(pd.H)
    lin = solve_min_norm(f_free, rhs, tol=f.tol)
    particular_p = np.hstack([pd.H.astype(dtype), adjoint(lin.solution)])

    def realize(v, row):
        b = np.zeros((f.n, f.k), dtype=dtype)
        b[row, s:] = v.conj()
        return b

    return assemble_outcome(f, pd, lin, f_free, rhs, particular_p, perm,
                            realize)


def complete_direct_scaled(f: Frame, pd: PartialDual,
                           w: Weights) -> CompletionOutcome:
    """Complete after rescaling the prescribed columns by diag(w).

    The outcome's prescribed columns are h_i * w_i; with all-ones
    weights this is exactly complete_direct.
    """
    check_partial(f, pd)
    if len(w.w) != pd.s:
        raise BadShape(f"{pd.s} prescribed columns but {len(w.w)} weights")
    if not w.allow_zero and any(x == 0.0 for x in w.w):
        raise ZeroWeight("zero weight with allow_zero=False")
    scaled = PartialDual(pd.H * np.asarray(w.w), pd.indices)
    return complete_direct(f, scaled)


def solve_weights(f: Frame, pd: PartialDual,
                  tol: float | None = None) -> Weights | None:
    """Real weights making the scaled completion problem solvable.

    The solvability condition asks the columns of I - sum w_i f_i h_i*
    to lie in the span of the free frame columns; projecting onto the
    orthogonal complement of that span makes the condition linear in w,
    so one real least-squares solve finds the best weights.  Returns
    None when even the optimal weights leave a residual above tol.
    """
    check_partial(f, pd)
    if tol is None:
        tol = f.tol
    perm = leading_permutation(pd, f.k)
    fp = f.mat[:, perm]
    s = pd.s
    f_free = fp[:, s:]
    proj = np.eye(f.n) - f_free @ pseudoinverse(f_free)
    target = proj.ravel()
    cols = [(proj @ np.outer(fp[:, i], pd.H[:, i].conj())).ravel()
            for i in range(s)]
    m = np.column_stack(cols) if cols else np.zeros((target.size, 0))
    if np.iscomplexobj(m) or np.iscomplexobj(target):
        m = np.vstack([m.real, m.imag])
        target = np.concatenate([target.real, target.imag])
    lin = solve_min_norm(m, target.reshape(-1, 1), tol=tol)
    if not lin.consistent:
        return None
    return Weights(tuple(float(x) for x in lin.solution.ravel()),
                   allow_zero=True)
