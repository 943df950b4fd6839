"""Three-tangle of three-qubit pure states.

With amplitudes ``a_ijk`` the tangle is ``4 |d1 - 2 d2 + 4 d3|`` where

    d1 = a000^2 a111^2 + a001^2 a110^2 + a010^2 a101^2 + a100^2 a011^2
    d2 = a000 a111 (a011 a100 + a101 a010 + a110 a001)
         + a011 a100 a101 a010 + a011 a100 a110 a001 + a101 a010 a110 a001
    d3 = a000 a110 a101 a011 + a111 a001 a010 a100

(Cayley's hyperdeterminant).  :func:`ckw_tangle` computes the same quantity
from two-qubit concurrences, ``C^2_{A(BC)} - C^2_{AB} - C^2_{AC}``, and is
kept as an independent cross-check.
"""
from __future__ import annotations

import numpy as np

from .errors import ShapeError
from .linalg import eig_hermitian
from .state import PureState, ensure_normalized, reduced_density

_SY = np.array([[0, -1j], [1j, 0]])
_SYSY = np.kron(_SY, _SY)


def _require_three_qubits(s: PureState):
    if s.dims != (2, 2, 2):
        raise ShapeError(f"three-qubit state required, got dims {s.dims}")


def hyperdeterminant(a: np.ndarray) -> complex:
    a = np.asarray(a).reshape(2, 2, 2)
    d1 = (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
          + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2 + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2)
    d2 = (a[0, 0, 0] * a[1, 1, 1] * (a[0, 1, 1] * a[1, 0, 0] + a[1, 0, 1] * a[0, 1, 0]
                                     + a[1, 1, 0] * a[0, 0, 1])
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
          + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1])
    d3 = (a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
          + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0])
    return complex(d1 - 2 * d2 + 4 * d3)


def three_tangle(s: PureState) -> float:
    _require_three_qubits(s)
    s = ensure_normalized(s)
    return float(4 * abs(hyperdeterminant(s.amps)))


def concurrence(rho: np.ndarray, rank_tol: float = 1e-13) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Uses the singular values of ``V^T (Y x Y) V`` for a decomposition
    ``rho = V V^dagger``; these equal the square roots of the eigenvalues of
    ``rho (Y x Y) rho^* (Y x Y)`` without taking square roots of noise.
    """
    w, vec = eig_hermitian(rho)
    keep = w > rank_tol
    v = vec[:, keep] * np.sqrt(w[keep])
    if v.shape[1] == 0:
        return 0.0
    lam = np.linalg.svd(v.T @ _SYSY @ v, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1:].sum()))


def ckw_tangle(s: PureState) -> float:
    _require_three_qubits(s)
    s = ensure_normalized(s)
    rho_a = reduced_density(s, [0])
    c2_a_bc = 4 * float(np.real(np.linalg.det(rho_a)))
    c_ab = concurrence(reduced_density(s, [0, 1]))
    c_ac = concurrence(reduced_density(s, [0, 2]))
    return c2_a_bc - c_ab**2 - c_ac**2
