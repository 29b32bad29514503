"""Shared generators and oracles for the test suite."""

from fractions import Fraction

import numpy as np

import framec as fc


def random_frame(rng, n=None, k=None, complex_field=False, n_max=4, k_max=8):
    """Random frame with entries uniform in [-2, 2] (per component)."""
    if n is None:
        n = int(rng.integers(2, n_max + 1))
    if k is None:
        k = int(rng.integers(n + 1, k_max + 1))
    while True:
        m = rng.uniform(-2.0, 2.0, (n, k))
        if complex_field:
            m = m + 1j * rng.uniform(-2.0, 2.0, (n, k))
        if np.linalg.matrix_rank(m) == n:
            return fc.make_frame(m)


def random_partial(rng, fr, s=None, from_dual=None):
    """Random prescription at random positions.

    With from_dual given, the prescribed columns are taken from that
    matrix, so the problem is guaranteed solvable.
    """
    if s is None:
        s = int(rng.integers(0, fr.k + 1))
    idx = tuple(sorted(int(i) for i in
                       rng.choice(fr.k, size=s, replace=False)))
    if from_dual is not None:
        h = from_dual[:, list(idx)]
    else:
        h = rng.uniform(-2.0, 2.0, (fr.n, s))
        if np.iscomplexobj(fr.mat):
            h = h + 1j * rng.uniform(-2.0, 2.0, (fr.n, s))
    return fc.PartialDual(h, idx)


def random_dual(rng, fr):
    """A random (generally non-canonical) dual of fr."""
    out = fc.complete_direct(fr, fc.PartialDual(np.zeros((fr.n, 0))))
    if isinstance(out, fc.Unique):
        return out.G
    c = rng.uniform(-1.0, 1.0, out.family.dof)
    if np.iscomplexobj(fr.mat):
        c = c + 1j * rng.uniform(-1.0, 1.0, out.family.dof)
    return fc.family_sample(out.family, c)


def exact_rank(m) -> int:
    """Rank over the rationals, for integer matrices (brute-force oracle)."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(m).tolist()]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0),
                     None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
