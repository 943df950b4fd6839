import numpy as np
import pytest

from geoent.catalog import table1_phi, table1_psi
from geoent.errors import ShapeError
from geoent.linalg import RandomSource, random_unitary
from geoent.locc import slocc_apply
from geoent.state import PureState, basis_state, ghz, random_state, w_state
from geoent.tangle import ckw_tangle, concurrence, hyperdeterminant, three_tangle


def test_reference_values():
    assert abs(three_tangle(table1_psi()) - 0.36) < 1e-9
    assert abs(three_tangle(table1_phi()) - 0.6175) < 1e-4
    assert abs(three_tangle(ghz()) - 1) < 1e-12
    assert abs(three_tangle(w_state())) < 1e-12


def test_a_scan():
    for a in np.linspace(0, 1, 21):
        b = np.sqrt(1 - a * a)
        amps = a * basis_state((0, 0, 0)).amps + b * basis_state((1, 1, 1)).amps
        assert abs(three_tangle(PureState(amps)) - 4 * a**2 * b**2) < 1e-12


def test_ghz_hyperdeterminant_terms():
    # only the a000^2 a111^2 term survives
    assert abs(hyperdeterminant(ghz().amps) - 0.25) < 1e-15


def test_ckw_agrees():
    src = RandomSource(77)
    for t in range(100):
        s = random_state((2, 2, 2), src.child(t))
        assert abs(three_tangle(s) - ckw_tangle(s)) < 1e-8


def test_local_unitary_invariance():
    src = RandomSource(3)
    for t in range(20):
        s = random_state((2, 2, 2), src.child(t))
        us = [random_unitary(2, src.child(t).child(j)) for j in range(3)]
        assert abs(three_tangle(slocc_apply(s, us)) - three_tangle(s)) < 1e-12


def test_concurrence_bell():
    v = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert abs(concurrence(np.outer(v, v)) - 1) < 1e-12
    assert abs(concurrence(np.eye(4) / 4)) < 1e-12


def test_shape_errors():
    with pytest.raises(ShapeError):
        three_tangle(PureState(np.ones((2, 3, 2))))
    with pytest.raises(ShapeError):
        three_tangle(PureState(np.ones((2, 2))))
