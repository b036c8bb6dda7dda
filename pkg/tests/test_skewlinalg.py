import math

import numpy as np
import pytest

from sympetf.errors import NotSkewSymmetricError
from sympetf.skewlinalg import (
    DEFAULT_TOL,
    ToleranceProfile,
    rank_by_sv,
    skew_spectral_form,
)

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def random_skew(rng, n):
    a = rng.uniform(-1.0, 1.0, size=(n, n))
    return (a - a.T) / 2.0


def test_tolerance_profile_rejects_bad_values():
    with pytest.raises(ValueError):
        ToleranceProfile(rank_rel_tol=0.0)
    with pytest.raises(ValueError):
        ToleranceProfile(entry_tol=1.5)


def test_spectral_form_of_omega_block():
    form = skew_spectral_form(J2)
    assert form.rank == 2
    np.testing.assert_allclose(form.lambdas, [1.0], atol=1e-14)
    np.testing.assert_allclose(form.reconstruct(), J2, atol=1e-14)


def test_spectral_form_of_tight_gram(gram_tight):
    # spectrum of this Gram is {0, +-i}: one block of value 1
    form = skew_spectral_form(gram_tight)
    assert form.rank == 2
    np.testing.assert_allclose(form.lambdas, [1.0], atol=1e-12)


def test_spectral_form_of_zero_matrix():
    form = skew_spectral_form(np.zeros((4, 4)))
    assert form.rank == 0
    assert form.lambdas.size == 0
    np.testing.assert_array_equal(form.w, np.eye(4))


def test_spectral_form_rejects_bad_input():
    with pytest.raises(NotSkewSymmetricError):
        skew_spectral_form(np.ones((2, 3)))
    with pytest.raises(NotSkewSymmetricError):
        skew_spectral_form(np.eye(3))


def test_spectral_form_reconstruction_sweep():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 13))
        a = random_skew(rng, n)
        form = skew_spectral_form(a)
        scale = max(1.0, np.linalg.norm(a))
        assert np.linalg.norm(form.reconstruct() - a) <= 1e-9 * scale
        n_eye = np.linalg.norm(form.w @ form.w.T - np.eye(n))
        assert n_eye <= n * DEFAULT_TOL.rank_rel_tol
        # block values sorted descending and strictly positive
        assert np.all(form.lambdas > 0)
        assert np.all(np.diff(form.lambdas) <= 1e-15)


def test_lambdas_are_paired_singular_values():
    rng = np.random.default_rng(11)
    for _ in range(50):
        n = int(rng.integers(2, 11))
        a = random_skew(rng, n)
        form = skew_spectral_form(a)
        s = np.linalg.svd(a, compute_uv=False)
        s = s[s > DEFAULT_TOL.rank_rel_tol * max(s[0], 1e-300)]
        assert form.rank == s.size
        np.testing.assert_allclose(np.repeat(form.lambdas, 2), s, atol=1e-10)


def test_spectral_form_handles_large_clusters():
    # conference-matrix Grams have a single singular value of full
    # multiplicity, the hardest case for the block pairing
    from sympetf.hadamard import hadamard_to_etf_square, seed_hadamard

    for order in (4, 16, 32):
        g = hadamard_to_etf_square(seed_hadamard(order))
        form = skew_spectral_form(g)
        assert form.rank == order
        np.testing.assert_allclose(form.lambdas, math.sqrt(order - 1), atol=1e-12)
        assert np.linalg.norm(form.reconstruct() - g) <= 1e-12 * np.linalg.norm(g)
        assert np.linalg.norm(form.w @ form.w.T - np.eye(order)) <= 1e-12


def test_rank_by_sv_basics(conf4):
    assert rank_by_sv(np.eye(3)) == 3
    assert rank_by_sv(np.zeros((4, 2))) == 0
    g_basic = np.array([[0, 1, 1], [-1, 0, 0], [-1, 0, 0]], dtype=float)
    assert rank_by_sv(g_basic) == 2
    assert rank_by_sv(conf4.astype(float)) == 4


def test_rank_invariant_under_orthogonal_conjugation():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(2, 10))
        a = random_skew(rng, n)
        q, _ = np.linalg.qr(rng.normal(size=(n, n)))
        assert rank_by_sv(q @ a @ q.T) == rank_by_sv(a)
