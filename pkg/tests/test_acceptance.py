"""End-to-end checks, one per advertised guarantee.

Each test prints a PASS/FAIL line in the terminal summary (see
conftest.py).  Fixtures are small enough that every item runs in
well under a second.
"""

import numpy as np

import framec as fc
from helpers import random_dual, random_frame, random_partial

F0_BASIS = np.array([[1.0, 2], [1, 1]])
G0_BASIS = np.array([[-1.0, 1], [2, -1]])
F1_EXT = np.array([[1.0, -1, 1], [0, 1, 2]])

F_COLLINEAR = np.array([[1.0, 0, -1, -2], [0, 1, -2, -4]])
H_STUCK = np.array([[1.0, 3], [2, 4]])

F_WIDE = np.array([[1.0, 0, -1, -2, 1], [0, 1, 0, 4, -2]])
H_WIDE = np.array([[1.0, 2, 1], [3, 4, 4.5]])

F_SPARSE = np.array([[1.0, 0, 0, 2], [0, 1, 0, 0], [0, 0, 1, 0]])
H_TRIPLE = np.array([[2.0, 0], [1, 1], [3, 0]])
G_TRIPLE = np.array([[2.0, 0, 0, -0.5], [1, 1, 0, -0.5], [3, 0, 1, -1.5]])

F_1234 = np.array([[1.0, 2, 3, 4], [4, 3, 2, 1]])

F_HADAMARD = np.array([[1.0, 1, 1, 0], [1, -1, 0, 1]])
H_HADAMARD = np.array([[0.5, 0.5], [0.5, -0.5]])

ALL_METHODS = (fc.complete_direct, fc.complete_via_product,
               fc.complete_via_svd)


def test_criterion_01_extension_family_membership():
    f0 = fc.make_frame(F0_BASIS)
    out = fc.extend_dual_pair(f0, G0_BASIS, F1_EXT)
    assert isinstance(out, fc.Family)
    assert out.family.dof == 2
    fr = fc.make_frame(np.hstack([F0_BASIS, F1_EXT]))
    for x, y in [(1.0, 1.0), (2.0, -3.0)]:
        g = np.array([[-1.0, 1, -3 * x, -2 * x, x],
                      [2, -1, -3 * y, -2 * y, y]])
        assert fc.family_contains(out.family, g)
        assert fc.dual_residual(fr, g) <= 1e-10


def test_criterion_02_no_completion_certified_by_all_methods():
    fr = fc.make_frame(F_COLLINEAR)
    pd = fc.PartialDual(H_STUCK, (0, 1))
    for method in ALL_METHODS:
        out = method(fr, pd)
        assert isinstance(out, fc.NoCompletion)
        assert out.certificate.rank_free == 1
        assert out.certificate.rank_augmented == 2
        assert out.certificate.rank_free < out.certificate.rank_augmented


def test_criterion_03_two_parameter_family_reproduced():
    fr = fc.make_frame(F_WIDE)
    out = fc.complete_direct(fr, fc.PartialDual(H_WIDE, (0, 1, 2)))
    assert isinstance(out, fc.Family)
    assert out.family.dof == 2
    rng = np.random.default_rng(20803)
    for _ in range(5):
        a, b = rng.uniform(-5, 5, 2)
        g = np.array([[1.0, 2, 1, (a - 1) / 2, a],
                      [3, 4, 4.5, (2 * b - 3) / 4, b]])
        assert np.linalg.norm(fr.mat @ g.conj().T - np.eye(2)) <= 1e-10
        assert fc.family_contains(out.family, g)


def test_criterion_04_overdetermined_unique_consensus():
    fr = fc.make_frame(F_SPARSE)
    pd = fc.PartialDual(H_TRIPLE, (0, 1))
    out = fc.complete_via_product(fr, pd)
    assert isinstance(out, fc.Unique)
    assert np.linalg.norm(out.G - G_TRIPLE) <= 1e-9
    assert np.linalg.norm(fr.mat @ out.G.conj().T - np.eye(3)) <= 1e-12
    for method in (fc.complete_direct, fc.complete_via_svd):
        other = method(fr, pd)
        assert isinstance(other, fc.Unique)
        assert np.linalg.norm(other.G - out.G) <= 1e-9


def test_criterion_05_all_duals_family_and_pinned_column():
    fr = fc.make_frame(F_1234)
    out = fc.complete_via_product(fr, fc.PartialDual(np.zeros((2, 0))))
    assert isinstance(out, fc.Family)
    assert out.family.dof == 4

    def member(a, b, c, d):
        return np.array([[a, c, -3 * a - 2 * c - 0.2, 2 * a + c + 0.4],
                         [b, d, -3 * b - 2 * d + 0.8, 2 * b + d - 0.6]])

    rng = np.random.default_rng(20805)
    for _ in range(5):
        a, b, c, d = rng.uniform(-3, 3, 4)
        assert fc.family_contains(out.family, member(a, b, c, d))
    pinned = fc.complete_via_product(
        fr, fc.PartialDual(np.zeros((2, 1)), (0,)))
    assert isinstance(pinned, fc.Family)
    assert pinned.family.dof == 2
    for _ in range(5):
        c, d = rng.uniform(-3, 3, 2)
        g = member(0.0, 0.0, c, d)
        assert fc.dual_residual(fr, g) <= 1e-10
        assert fc.family_contains(pinned.family, g)


def test_criterion_06_svd_closed_form_duals_and_unitary_factor():
    fr = fc.make_frame(F_SPARSE)
    fac = fc.svd(fr.mat)
    assert np.linalg.norm(fac.sigma - [np.sqrt(5), 1, 1]) <= 1e-12

    def member(s, t, w):
        r5 = np.sqrt(5)
        return np.array([[1 - 2 * r5 * s, 0, 0, r5 * s + 2],
                         [-2 * r5 * w, 5, 0, r5 * w],
                         [-2 * r5 * t, 0, 5, r5 * t]]) / 5

    rng = np.random.default_rng(20806)
    for _ in range(5):
        s, t, w = rng.uniform(-3, 3, 3)
        assert fc.is_dual_pair(fr, member(s, t, w))
    assert np.linalg.norm(member(0, 0, 0) - fc.canonical_dual(fr)) <= 1e-12
    # the computed right factor must be unitary; rescaling every row by
    # the largest singular value would silently break orthonormality
    v = fac.V
    assert np.linalg.norm(v.conj().T @ v - np.eye(4)) <= 1e-12
    rescaled = np.array([[1.0, 0, 0, 2], [0, 0, 1, 0],
                         [0, 1, 0, 0], [-2, 0, 0, 1]]) / np.sqrt(5)
    assert np.linalg.norm(rescaled.T @ rescaled - np.eye(4)) > 0.5


def test_criterion_07_trivial_extension_and_scaled_rescue():
    f0 = fc.make_frame(np.array([[1.0, 1], [1, -1]]))
    out = fc.extend_dual_pair(f0, H_HADAMARD, np.eye(2))
    assert isinstance(out, fc.Unique)
    assert np.allclose(out.G, [[0.5, 0.5, 0, 0], [0.5, -0.5, 0, 0]])

    fr = fc.make_frame(F_HADAMARD)
    pd = fc.PartialDual(H_HADAMARD, (0, 1))
    rng = np.random.default_rng(20807)
    for _ in range(5):
        x, y = rng.uniform(0.1, 2, 2) * rng.choice([-1, 1], 2)
        scaled = fc.complete_direct_scaled(fr, pd, fc.Weights((x, y)))
        assert isinstance(scaled, fc.Unique)
        m, d = 1 - (x + y) / 2, (y - x) / 2
        want = np.array([[0.5 * x, 0.5 * y, m, d],
                         [0.5 * x, -0.5 * y, d, m]])
        assert np.linalg.norm(scaled.G - want) <= 1e-10
        assert fc.dual_residual(fr, scaled.G) <= 1e-10

    def diagonal_free_block(x, y):
        m = 1 - (x + y) / 2
        return np.array([[0.5 * x, 0.5 * y, m, 0],
                         [0.5 * x, -0.5 * y, 0, m]])

    # a purely diagonal free block only works for equal weights
    assert fc.is_dual_pair(fr, diagonal_free_block(1.7, 1.7))
    assert not fc.is_dual_pair(fr, diagonal_free_block(1.0, 2.0))


_FRAME_POOL = []


def frame_pool():
    """200 real and 50 complex frames, shared across the random suites."""
    if not _FRAME_POOL:
        rng = np.random.default_rng(20808)
        _FRAME_POOL.extend(random_frame(rng) for _ in range(200))
        _FRAME_POOL.extend(random_frame(rng, complex_field=True)
                           for _ in range(50))
    return _FRAME_POOL


def _equivalence_burst(rng, frames):
    arms = {"none": 0, "unique": 0, "family": 0}
    for i, fr in enumerate(frames):
        if i % 2 == 0:
            pd = random_partial(rng, fr)
        else:
            pd = random_partial(rng, fr, from_dual=random_dual(rng, fr))
        outs = [method(fr, pd) for method in ALL_METHODS]
        kinds = {type(o).__name__ for o in outs}
        assert len(kinds) == 1, f"verdicts differ: {kinds}"
        first = outs[0]
        if isinstance(first, fc.NoCompletion):
            arms["none"] += 1
        elif isinstance(first, fc.Unique):
            arms["unique"] += 1
            for other in outs[1:]:
                gap = np.linalg.norm(other.G - first.G)
                assert gap <= 1e-8 * max(1.0, np.linalg.norm(first.G))
        else:
            arms["family"] += 1
            dofs = {o.family.dof for o in outs}
            assert len(dofs) == 1, f"dof differ: {dofs}"
            for src in outs:
                for _ in range(3):
                    coeff = rng.uniform(-1, 1, src.family.dof)
                    g = fc.family_sample(src.family, coeff)
                    for dst in outs:
                        assert fc.family_contains(dst.family, g, tol=1e-8)
    return arms


def test_criterion_08_cross_method_equivalence():
    pool = frame_pool()
    rng = np.random.default_rng(28081)
    arms = _equivalence_burst(rng, pool[:200])
    assert min(arms.values()) >= 10, f"thin arm coverage: {arms}"
    arms_c = _equivalence_burst(rng, pool[200:])
    assert sum(arms_c.values()) == 50


def test_criterion_09_canonical_dual_is_minimum_norm():
    rng = np.random.default_rng(20809)
    for fr in frame_pool():
        canon = fc.canonical_dual(fr)
        assert np.linalg.norm(
            canon - fc.pseudoinverse(fr.mat).conj().T) <= 1e-10
        fam = fc.complete_direct(fr, fc.PartialDual(
            np.zeros((fr.n, 0)))).family
        base = np.linalg.norm(canon)
        for _ in range(10):
            coeff = rng.uniform(-1, 1, fam.dof)
            if np.iscomplexobj(fr.mat):
                coeff = coeff + 1j * rng.uniform(-1, 1, fam.dof)
            assert base <= np.linalg.norm(fc.family_sample(fam, coeff)) + 1e-9


def test_criterion_10_frame_bounds_bracket_coefficient_energy():
    rng = np.random.default_rng(20810)
    for i in range(100):
        fr = random_frame(rng, complex_field=(i % 5 == 4))
        b = fc.frame_bounds(fr)
        u = rng.standard_normal((fr.n, 1000))
        if np.iscomplexobj(fr.mat):
            u = u + 1j * rng.standard_normal((fr.n, 1000))
        u /= np.linalg.norm(u, axis=0)
        energy = np.sum(np.abs(fr.mat.conj().T @ u) ** 2, axis=0)
        assert energy.min() >= b.lower - 1e-9
        assert energy.max() <= b.upper + 1e-9
