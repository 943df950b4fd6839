import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from geoent.errors import ShapeError, ZeroStateError
from geoent.linalg import RandomSource, random_instrument
from geoent.state import (PureState, apply_local, basis_state, ensure_normalized, ghz, inner,
                          normalize, overlap2, product_state, random_state, reduced_density,
                          w_state)

X = np.array([[0, 1], [1, 0]])


def test_normalize_psi():
    a = np.zeros((2, 2, 2))
    a[0, 0, 0], a[1, 1, 1] = 3, 1
    s = normalize(PureState(a))
    assert np.isclose(s.amps[0, 0, 0], 3 / np.sqrt(10))
    assert np.isclose(s.amps[1, 1, 1], 1 / np.sqrt(10))
    assert abs(s.norm() - 1) < 1e-12


def test_normalize_idempotent():
    s = ghz()
    assert np.max(np.abs(normalize(s).amps - s.amps)) < 1e-15


def test_normalize_zero_raises():
    with pytest.raises(ZeroStateError):
        normalize(PureState(np.zeros((2, 2))))


def test_ensure_normalized_warns():
    with pytest.warns(UserWarning):
        ensure_normalized(PureState(2 * ghz().amps))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ensure_normalized(ghz())


def test_shape_validation():
    with pytest.raises(ShapeError):
        PureState(np.zeros((2, 1)))
    with pytest.raises(ShapeError):
        PureState.from_vector(np.ones(5), (2, 2))


def test_row_major_layout():
    s = PureState.from_vector(np.arange(8), (2, 2, 2))
    assert s.amps[1, 0, 0] == 4
    assert s.amps[0, 0, 1] == 1


def test_apply_local_examples():
    s = apply_local(basis_state((0, 0, 0)), 0, X)
    assert np.allclose(s.amps, basis_state((1, 0, 0)).amps)
    g = ghz()
    assert np.allclose(apply_local(g, 1, np.eye(2)).amps, g.amps)
    p = apply_local(g, 0, np.diag([1, 0]))
    assert np.isclose(p.norm() ** 2, 0.5)
    assert np.isclose(p.amps[0, 0, 0], 1 / np.sqrt(2))


def test_apply_local_bad_shape():
    with pytest.raises(ShapeError):
        apply_local(ghz(), 0, np.eye(3))
    with pytest.raises(ShapeError):
        apply_local(ghz(), 3, np.eye(2))


def test_reduced_density_examples():
    assert np.allclose(reduced_density(ghz(), [0]), np.eye(2) / 2)
    rho = reduced_density(product_state([[1, 1], [1, 0], [0, 1]]), [0])
    assert np.isclose(np.trace(rho @ rho).real, 1)
    assert np.linalg.matrix_rank(rho, tol=1e-12) == 1
    psi = normalize(PureState(3 * basis_state((0, 0, 0)).amps + basis_state((1, 1, 1)).amps))
    assert np.allclose(reduced_density(psi, [0]), np.diag([0.9, 0.1]))


def test_reduced_density_rejects_full_set():
    with pytest.raises(ShapeError):
        reduced_density(ghz(), [0, 1, 2])


def test_product_state_examples():
    assert np.allclose(product_state([[1, 0]] * 3).amps, basis_state((0, 0, 0)).amps)
    s = product_state([np.array([1, 1]) / np.sqrt(2), [0, 1]])
    assert np.allclose(s.vector, np.array([0, 1, 0, 1]) / np.sqrt(2))
    t = product_state([[2, 0], [0, 5]])
    assert np.isclose(t.norm(), 1)


def test_named_states():
    assert np.allclose(w_state().amps[1, 0, 0], 1 / np.sqrt(3))
    assert np.isclose(ghz(3, 3).amps[2, 2, 2], 1 / np.sqrt(3))


def test_random_state_deterministic():
    a = random_state((2, 3), RandomSource(3))
    b = random_state((2, 3), RandomSource(3))
    assert np.array_equal(a.amps, b.amps)
    assert abs(a.norm() - 1) < 1e-12


def test_instrument_probabilities_sum_to_one():
    src = RandomSource(21)
    for t in range(100):
        s = random_state((2, 3, 2), src.child(t))
        party = t % 3
        ops = random_instrument(s.dims[party], 2 + t % 3, src.child(t).child(1))
        total = sum(apply_local(s, party, m).norm() ** 2 for m in ops)
        assert abs(total - 1) < 1e-10


def test_schmidt_symmetry_of_marginals():
    src = RandomSource(22)
    for t in range(30):
        s = random_state((2, 3, 2), src.child(t))
        for keep in ([0], [1], [2]):
            rest = [p for p in range(3) if p not in keep]
            a = np.linalg.eigvalsh(reduced_density(s, keep))
            b = np.linalg.eigvalsh(reduced_density(s, rest))
            a = np.sort(np.pad(a, (0, len(b) - len(a))))
            assert np.allclose(a, np.sort(b), atol=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(2, 3), min_size=1, max_size=4), st.integers(0, 2**31))
def test_inner_of_products_factorizes(dims, seed):
    g = np.random.default_rng(seed)
    us = [g.standard_normal(d) + 1j * g.standard_normal(d) for d in dims]
    vs = [g.standard_normal(d) + 1j * g.standard_normal(d) for d in dims]
    us = [u / np.linalg.norm(u) for u in us]
    vs = [v / np.linalg.norm(v) for v in vs]
    expected = np.prod([np.vdot(u, v) for u, v in zip(us, vs)])
    assert abs(inner(product_state(us), product_state(vs)) - expected) < 1e-12


def test_overlap2_dims_mismatch():
    with pytest.raises(ShapeError):
        overlap2(ghz(), PureState(np.ones((2, 2))))
