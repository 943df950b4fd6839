"""Named three-qubit states used in examples and regression checks."""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .state import PureState, basis_state, normalize, product_state


def table1_psi() -> PureState:
    """``(3|000> + |111>) / sqrt(10)``."""
    a = np.zeros((2, 2, 2), dtype=complex)
    a[0, 0, 0], a[1, 1, 1] = 3, 1
    return normalize(PureState(a))


def table1_phi() -> PureState:
    """``(|000> - |bbb>) / sqrt(N)`` with ``|b> = (|0> + 2|1>) / sqrt(5)``."""
    b = np.array([1, 2]) / np.sqrt(5)
    return normalize(PureState(basis_state((0, 0, 0)).amps - product_state([b, b, b]).amps))


def phi_z_state(z: complex, c) -> PureState:
    """``(|000> + z |b1 b2 b3>) / sqrt(N)`` with ``|b_i> = c_i|0> + sqrt(1 - c_i^2)|1>``."""
    c = [float(x) for x in c]
    if len(c) != 3:
        raise DomainError("three c parameters are required")
    if any(not 0 <= x < 1 for x in c):
        raise DomainError("each c_i must lie in [0, 1)")
    betas = [np.array([x, np.sqrt(1 - x * x)]) for x in c]
    return normalize(PureState(basis_state((0, 0, 0)).amps + complex(z) * product_state(betas).amps))
