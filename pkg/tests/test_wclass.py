import itertools

import numpy as np
import pytest
from scipy.optimize import minimize

from geoent.catalog import table1_phi, table1_psi
from geoent.errors import DomainError, ShapeError
from geoent.linalg import RandomSource, random_unitary
from geoent.locc import slocc_apply
from geoent.product_opt import OptConfig
from geoent.state import (PureState, basis_state, ghz, overlap2, product_state, random_state,
                          w_state)
from geoent.tangle import three_tangle
from geoent.wclass import (GhzSequenceParam, WBasisParam, e_ghz_set, e_w, e_w_many,
                           ghz_eps_state, w_weight)

from conftest import FAST, invertible_local

HIGH = [(1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]


def weight_by_kron(s, thetas, phis):
    """Independent evaluation of the two-or-more excitation weight."""
    mats = []
    for t, p in zip(thetas, phis):
        g = np.array([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)])
        e = np.array([-np.conj(g[1]), np.conj(g[0])])
        mats.append(np.column_stack([g, e]))
    u = np.kron(np.kron(mats[0], mats[1]), mats[2])
    c = (u.conj().T @ s.vector).reshape(2, 2, 2)
    return sum(abs(c[i]) ** 2 for i in HIGH)


def angle_oracle(s, n=7):
    """Coarse grid over the six angles followed by Nelder-Mead."""
    grid_t = np.linspace(0, np.pi, n)
    grid_p = np.linspace(0, 2 * np.pi, n, endpoint=False)
    best, arg = np.inf, None
    for t in itertools.product(grid_t, repeat=3):
        for p in itertools.product(grid_p, repeat=2):
            v = weight_by_kron(s, t, (0.0,) + p)
            if v < best:
                best, arg = v, np.r_[t, 0.0, p]
    f = lambda x: weight_by_kron(s, x[:3], x[3:])
    res = minimize(f, arg, method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 20000})
    return res.fun


def test_table_states():
    assert abs(e_w(table1_psi()).e_value - 0.09) < 5e-3
    assert abs(e_w(table1_phi()).e_value - 0.0464) < 2e-3


def test_w_state_is_zero():
    assert e_w(w_state()).e_value < 1e-12
    assert w_weight(w_state(), WBasisParam()) < 1e-15


def test_ghz_value():
    assert abs(e_w(ghz()).e_value - 0.25) < 1e-9


def test_w_weight_matches_kron():
    g = RandomSource(1).generator()
    for t in range(50):
        s = random_state((2, 2, 2), RandomSource(1, t))
        th = g.uniform(0, np.pi, 3)
        ph = g.uniform(0, 2 * np.pi, 3)
        assert abs(w_weight(s, WBasisParam(tuple(th), tuple(ph))) - weight_by_kron(s, th, ph)) < 1e-12


def test_param_round_trip():
    p = WBasisParam((0.3, 1.2, 2.9), (0.1, 4.0, 6.0))
    q = WBasisParam.from_ground_vectors(p.ground_vectors())
    assert np.allclose(q.thetas, p.thetas) and np.allclose(q.phis, p.phis)
    with pytest.raises(DomainError):
        WBasisParam((4.0, 0, 0))


def test_against_angle_oracle():
    for t in range(4):
        s = random_state((2, 2, 2), RandomSource(31, t))
        ours = e_w(s).e_value
        oracle = angle_oracle(s)
        assert ours <= oracle + 1e-9
        assert oracle - ours < 1e-4


def test_upper_bound_by_computational_basis():
    for t in range(30):
        s = random_state((2, 2, 2), RandomSource(32, t))
        assert e_w(s, FAST).e_value <= w_weight(s, WBasisParam()) + 1e-12


def test_witness_consistency():
    states = [random_state((2, 2, 2), RandomSource(33, t)) for t in range(20)]
    for s, r in zip(states, e_w_many(states, FAST)):
        assert abs(1 - overlap2(s, r.witness) - r.e_value) < 1e-9
        assert abs(three_tangle(r.witness)) < 1e-9


def _closure_samples(rep, seed, n):
    g = np.random.default_rng(seed)
    return [slocc_apply(rep, [invertible_local(g) for _ in range(3)]) for _ in range(n)]


@pytest.mark.parametrize("rep", [
    w_state(),
    PureState(np.einsum("i,jk->ijk", [1, 0], np.eye(2)) / np.sqrt(2)),
    basis_state((0, 0, 0)),
], ids=["W", "bipartite", "product"])
def test_zero_on_closure(rep):
    states = _closure_samples(rep, 5, 100)
    vals = [r.e_value for r in e_w_many(states)]
    assert max(vals) < 1e-8


def test_local_unitary_invariance():
    base = [random_state((2, 2, 2), RandomSource(34, t)) for t in range(50)]
    rotated = [slocc_apply(s, [random_unitary(2, RandomSource(35, (t, j))) for j in range(3)])
               for t, s in enumerate(base)]
    a = [r.e_value for r in e_w_many(base)]
    b = [r.e_value for r in e_w_many(rotated)]
    assert np.max(np.abs(np.subtract(a, b))) < 2e-4


def test_e_ghz_set_zero():
    assert e_ghz_set(w_state()) == 0
    assert e_ghz_set(ghz()) == 0
    for t in range(20):
        assert e_ghz_set(random_state((2, 2, 2), RandomSource(36, t))) == 0
    with pytest.raises(ShapeError):
        e_ghz_set(PureState(np.ones((2, 2))))


def test_eps_state_at_one():
    s = ghz_eps_state(GhzSequenceParam(1.0))
    plus = np.array([1, 1]) / np.sqrt(2)
    ref = 2 * np.sqrt(2) * product_state([plus] * 3).amps - basis_state((0, 0, 0)).amps
    assert overlap2(s, PureState(ref / np.linalg.norm(ref))) == pytest.approx(1, abs=1e-12)
    assert three_tangle(s) > 0


def test_eps_sequence_approaches_w():
    gaps = [1 - overlap2(w_state(), ghz_eps_state(GhzSequenceParam(e)))
            for e in (0.5, 0.2, 0.1, 0.01, 0.001)]
    assert np.all(np.diff(gaps) < 0)
    assert gaps[-1] < 1e-2
    assert all(three_tangle(ghz_eps_state(GhzSequenceParam(e))) > 0 for e in (0.5, 0.01))


def test_eps_state_errors():
    with pytest.raises(DomainError):
        ghz_eps_state(GhzSequenceParam(0.0))
    with pytest.raises(DomainError):
        ghz_eps_state(GhzSequenceParam(0.1, betas=((1, 0), (0, 1), (0, 1))))
