"""Frames, duals, partial duals, and completion outcome types.

A frame for F^n is an n x k matrix (k >= n) of full row rank.  A dual of
F is any G with F G* = I_n.  Completion problems prescribe some columns
of G and ask for the rest; results are reported as one of three arms:
NoCompletion (with a rank certificate), Unique, or Family (an affine
family of duals: particular solution plus homogeneous basis).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadShape, NotAFrame, NotZeroColumn
from .linalg import (DEFAULT_TOL, adjoint, as_matrix, default_tol,
                     numerical_rank, pseudoinverse)


@dataclass(frozen=True)
class Frame:
    """Validated frame matrix with its working tolerance.

    Construct through make_frame, which checks the rank condition.
    """

    mat: np.ndarray
    n: int
    k: int
    tol: float


@dataclass(frozen=True)
class FrameBounds:
    lower: float  # smallest squared singular value
    upper: float  # largest squared singular value


@dataclass(frozen=True)
class PartialDual:
    """Prescribed dual columns H at the given 0-based positions.

    indices=None means the leading positions 0..s-1.  Construction sorts
    the positions (reordering the columns of H to match), so downstream
    code can rely on strictly increasing indices.  s = 0 (H with zero
    columns) states an unconstrained problem.
    """

    H: np.ndarray
    indices: tuple = field(default=None)

    def __post_init__(self):
        h = as_matrix(self.H, allow_empty=True)
        if h.shape[0] < 1:
            raise BadShape("prescribed columns need at least one row")
        s = h.shape[1]
        idx = self.indices
        if idx is None:
            idx = tuple(range(s))
        idx = tuple(int(i) for i in idx)
        if len(idx) != s:
            raise BadShape(f"{s} prescribed columns but {len(idx)} indices")
        if len(set(idx)) != s:
            raise BadShape("prescribed positions must be distinct")
        if any(i < 0 for i in idx):
            raise BadShape("prescribed positions must be nonnegative")
        order = sorted(range(s), key=lambda j: idx[j])
        object.__setattr__(self, "H", h[:, order])
        object.__setattr__(self, "indices", tuple(idx[j] for j in order))

    @property
    def s(self) -> int:
        return self.H.shape[1]


@dataclass(frozen=True)
class Certificate:
    """Rank evidence for a NoCompletion verdict.

    rank_free is the rank of the reduced system's coefficient matrix,
    rank_augmented the rank after adjoining the right-hand side; the
    verdict rests on rank_free < rank_augmented, witnessed numerically
    by the projector residual.
    """

    rank_free: int
    rank_augmented: int
    projector_residual: float


@dataclass(frozen=True)
class SolutionFamily:
    """Affine family of completions: particular + span{basis}.

    Every member particular + sum(c_i * basis[i]) is a dual of frame and
    matches the prescribed columns; dof = len(basis).
    """

    frame: Frame
    particular: np.ndarray
    basis: tuple
    dof: int
    prescribed: PartialDual


@dataclass(frozen=True)
class NoCompletion:
    certificate: Certificate


@dataclass(frozen=True)
class Unique:
    G: np.ndarray


@dataclass(frozen=True)
class Family:
    family: SolutionFamily


CompletionOutcome = NoCompletion | Unique | Family


def make_frame(m, tol: float | None = None) -> Frame:
    """Validate m as a frame matrix and attach a working tolerance.

    Default tolerance is 1e-9 * max(1, ||m||_F).  Raises BadShape when
    k < n and NotAFrame when the rows are not linearly independent at
    the tolerance.
    """
    m = as_matrix(m)
    n, k = m.shape
    if k < n:
        raise BadShape(f"need at least {n} columns, got {k}")
    if tol is None:
        tol = default_tol(m)
    if numerical_rank(m, tol) < n:
        raise NotAFrame(f"matrix has numerical rank < {n} at tol {tol:g}")
    return Frame(mat=m, n=n, k=k, tol=float(tol))


def frame_bounds(f: Frame) -> FrameBounds:
    """Optimal frame bounds: the extreme squared singular values."""
    s = np.linalg.svd(f.mat, compute_uv=False)
    return FrameBounds(lower=float(s[f.n - 1] ** 2), upper=float(s[0] ** 2))


def is_tight(f: Frame, rtol: float = 1e-9) -> bool:
    """Whether the frame bounds coincide up to relative slack rtol."""
    b = frame_bounds(f)
    return b.upper - b.lower <= rtol * b.upper


def frame_operator(f: Frame) -> np.ndarray:
    """S = F F*, Hermitian positive definite."""
    return f.mat @ adjoint(f.mat)


def canonical_dual(f: Frame) -> np.ndarray:
    """The minimum-Frobenius-norm dual S^{-1} F."""
    return np.linalg.solve(frame_operator(f), f.mat)


def dual_residual(f: Frame, g) -> float:
    """||F G* - I||_F, the defect of G as a dual of F."""
    g = as_matrix(g)
    if g.shape != (f.n, f.k):
        raise BadShape(f"dual must be {f.n} x {f.k}, got {g.shape}")
    return float(np.linalg.norm(f.mat @ adjoint(g) - np.eye(f.n)))


def is_dual_pair(f: Frame, g, tol: float | None = None) -> bool:
    """Whether F G* = I within tol.

    The one-sided check suffices: (F G*)* = G F*, so F G* = I forces
    G F* = I as well.
    """
    if tol is None:
        tol = f.tol
    return dual_residual(f, g) <= tol


def family_sample(fam: SolutionFamily, coefficients) -> np.ndarray:
    """Member of the family at the given coefficient vector."""
    c = np.atleast_1d(np.asarray(coefficients))
    if c.shape != (fam.dof,):
        raise BadShape(f"expected {fam.dof} coefficients, got shape {c.shape}")
    g = fam.particular.astype(np.result_type(fam.particular.dtype, c.dtype),
                              copy=True)
    for ci, bi in zip(c, fam.basis):
        g += ci * bi
    return g


def family_contains(fam: SolutionFamily, g, tol: float | None = None) -> bool:
    """Whether g belongs to the family.

    Checks the dual equation, the prescribed columns, and that
    g - particular lies in the span of the basis (by least squares).
    """
    g = as_matrix(g)
    f = fam.frame
    if g.shape != (f.n, f.k):
        raise BadShape(f"expected shape {(f.n, f.k)}, got {g.shape}")
    if tol is None:
        tol = f.tol
    if not is_dual_pair(f, g, tol):
        return False
    pd = fam.prescribed
    if pd.s:
        want = pd.H
        got = g[:, list(pd.indices)]
        if np.linalg.norm(got - want) > tol * max(1.0, np.linalg.norm(want)):
            return False
    diff = g - fam.particular
    if not fam.basis:
        return float(np.linalg.norm(diff)) <= tol * max(1.0, float(np.linalg.norm(fam.particular)))
    span = np.column_stack([b.ravel() for b in fam.basis])
    coef, *_ = np.linalg.lstsq(span, diff.ravel(), rcond=None)
    resid = float(np.linalg.norm(span @ coef - diff.ravel()))
    return resid <= tol * max(1.0, float(np.linalg.norm(diff)))


def surgery_remove(f: Frame, g, positions) -> tuple[Frame, np.ndarray]:
    """Delete frame vectors whose dual partners are zero.

    positions lists 0-based columns; each listed column of g must be
    numerically zero (NotZeroColumn otherwise), and the remaining
    columns of f must still span (NotAFrame otherwise).  Returns the
    reduced (frame, dual) pair, still dual to each other.
    """
    g = as_matrix(g)
    if g.shape != (f.n, f.k):
        raise BadShape(f"dual must be {f.n} x {f.k}, got {g.shape}")
    positions = [int(p) for p in positions]
    if len(set(positions)) != len(positions):
        raise BadShape("positions must be distinct")
    if any(p < 0 or p >= f.k for p in positions):
        raise BadShape(f"positions must lie in 0..{f.k - 1}")
    for p in positions:
        if np.linalg.norm(g[:, p]) > f.tol:
            raise NotZeroColumn(f"dual column {p} is not numerically zero")
    keep = [j for j in range(f.k) if j not in set(positions)]
    try:
        reduced = make_frame(f.mat[:, keep], tol=f.tol)
    except BadShape as exc:
        raise NotAFrame(f"removal leaves too few columns: {exc}") from None
    return reduced, g[:, keep]
