import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from geoent.errors import InvalidInputError, ShapeError
from geoent.linalg import (RandomSource, completeness_residual, eig_hermitian, polar,
                           psd_sqrt, random_instrument, random_unitary, singular_values,
                           svd, unitarity_error)

from conftest import random_matrix


def test_svd_identity():
    assert np.allclose(svd(np.eye(2)).s, [1, 1])


def test_svd_diagonal():
    s = svd(np.diag([3, 1]) / np.sqrt(10)).s
    assert np.allclose(s, [0.948683298, 0.316227766])


def test_svd_nilpotent():
    assert np.allclose(svd([[0, 1], [0, 0]]).s, [1, 0])


def test_svd_reconstruction_random():
    g = RandomSource(7).generator()
    for _ in range(200):
        n, m = g.integers(1, 9, size=2)
        a = random_matrix(g, n, m)
        r = svd(a)
        k = min(n, m)
        rec = r.u[:, :k] @ np.diag(r.s) @ r.v[:, :k].conj().T
        assert np.max(np.abs(rec - a)) < 1e-10
        assert np.all(np.diff(r.s) <= 0)


def test_svd_rejects_bad_input():
    with pytest.raises(ShapeError):
        svd(np.zeros(3))
    with pytest.raises(InvalidInputError):
        svd([[np.nan, 0], [0, 1]])


def test_eig_hermitian_examples():
    w, _ = eig_hermitian(np.diag([0.1, 0.9]))
    assert np.allclose(w, [0.9, 0.1])
    w, v = eig_hermitian([[0, 1], [1, 0]])
    assert np.allclose(w, [1, -1])
    assert np.allclose(v[:, 0], np.array([1, 1]) / np.sqrt(2) * (v[0, 0] / abs(v[0, 0])))
    w, _ = eig_hermitian(np.zeros((2, 2)))
    assert np.allclose(w, 0)


def test_eig_hermitian_rejects_non_hermitian():
    with pytest.raises(InvalidInputError):
        eig_hermitian([[0, 1], [0, 0]])


def test_polar_examples():
    u, p = polar([[0, 2], [1, 0]])
    assert np.allclose(u, [[0, 1], [1, 0]])
    assert np.allclose(p, np.diag([1, 2]))
    h = random_unitary(3, RandomSource(2))
    u, p = polar(h)
    assert np.allclose(p, np.eye(3))
    q = np.diag([2.0, 0.5])
    u, p = polar(q)
    assert np.allclose(u, np.eye(2)) and np.allclose(p, q)


def test_polar_rank_deficient():
    g = RandomSource(3).generator()
    for _ in range(50):
        a = random_matrix(g, 4, 2) @ random_matrix(g, 2, 4)
        u, p = polar(a)
        assert unitarity_error(u) < 1e-10
        assert np.allclose(u @ p, a, atol=1e-10)
        assert np.min(np.linalg.eigvalsh(p)) > -1e-10


def test_psd_sqrt():
    g = RandomSource(4).generator()
    a = random_matrix(g, 3)
    p = a @ a.conj().T
    r = psd_sqrt(p)
    assert np.allclose(r @ r, p)


def test_random_unitary():
    u1 = random_unitary(1, RandomSource(0))
    assert u1.shape == (1, 1) and abs(abs(u1[0, 0]) - 1) < 1e-12
    a = random_unitary(2, RandomSource(5))
    assert np.array_equal(a, random_unitary(2, RandomSource(5)))
    assert unitarity_error(a) < 1e-12
    assert not np.allclose(a, random_unitary(2, RandomSource(6)))


def test_random_instrument():
    (m,) = random_instrument(2, 1, RandomSource(0))
    assert unitarity_error(m) < 1e-10
    g = RandomSource(9)
    for i in range(100):
        ops = random_instrument(int(2 + i % 3), int(1 + i % 4), g.child(i))
        assert completeness_residual(ops) < 1e-10
    a = random_instrument(3, 3, RandomSource(1))
    b = random_instrument(3, 3, RandomSource(1))
    assert all(np.array_equal(x, y) for x, y in zip(a, b))


def test_random_source_streams():
    a = RandomSource(1, 0).generator().random()
    assert a == RandomSource(1, 0).generator().random()
    assert a != RandomSource(1, 1).generator().random()
    assert RandomSource(1).child(3) == RandomSource(1, (0, 3))


def test_trace_inequality():
    g = RandomSource(11).generator()
    for _ in range(500):
        n = int(g.integers(1, 7))
        a, b = random_matrix(g, n), random_matrix(g, n)
        bound = singular_values(a) @ singular_values(b)
        assert abs(np.trace(a @ b)) <= bound + 1e-10


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**31))
def test_singular_values_match_numpy(n, m, seed):
    g = np.random.default_rng(seed)
    a = random_matrix(g, n, m)
    assert np.allclose(singular_values(a), np.linalg.svd(a, compute_uv=False), atol=1e-12)
