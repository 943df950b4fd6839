"""Small dense complex linear algebra.

Everything here works on plain ``numpy`` arrays of shape ``(n, m)``.  The heavy
lifting is delegated to LAPACK through :mod:`numpy.linalg`; this module adds the
input validation, the descending sort convention and the seeded samplers used
throughout the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidInputError, ShapeError

HERMITIAN_TOL = 1e-10


@dataclass(frozen=True)
class RandomSource:
    """A reproducible random stream identified by ``(seed, stream)``.

    ``stream`` may be a single index or a tuple of indices for nested streams
    (e.g. ``(trial, start)``).  Two sources with equal fields always yield the
    same draws.
    """

    seed: int = 0
    stream: int | tuple[int, ...] = 0

    def _key(self) -> tuple[int, ...]:
        if isinstance(self.stream, tuple):
            return tuple(int(k) for k in self.stream)
        return (int(self.stream),)

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(int(self.seed), spawn_key=self._key())
        return np.random.Generator(np.random.PCG64(seq))

    def child(self, index: int) -> "RandomSource":
        """Independent sub-stream number ``index`` of this stream."""
        return RandomSource(self.seed, self._key() + (int(index),))


class SvdResult(NamedTuple):
    u: np.ndarray
    s: np.ndarray
    v: np.ndarray


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.size == 0:
        raise ShapeError(f"expected a nonempty 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("matrix has non-finite entries")
    return a


def svd(m) -> SvdResult:
    """Full singular value decomposition ``m = u @ diag(s) @ v.conj().T``.

    ``u`` and ``v`` are square unitaries; ``s`` has ``min(rows, cols)``
    entries, sorted descending.
    """
    a = as_matrix(m)
    u, s, vh = np.linalg.svd(a, full_matrices=True)
    # LAPACK already returns descending order; enforce it for degenerate ties
    order = np.argsort(-s, kind="stable")
    k = len(s)
    u = np.concatenate([u[:, order], u[:, k:]], axis=1)
    vh = np.concatenate([vh[order], vh[k:]], axis=0)
    return SvdResult(u, s[order], vh.conj().T)


def singular_values(m) -> np.ndarray:
    return np.sort(np.linalg.svd(as_matrix(m), compute_uv=False))[::-1]


def eig_hermitian(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and eigenvectors (as columns) of a Hermitian matrix."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise InvalidInputError("matrix is not Hermitian")
    w, v = np.linalg.eigh((a + a.conj().T) / 2)
    return w[::-1].copy(), v[:, ::-1].copy()


def polar(m) -> tuple[np.ndarray, np.ndarray]:
    """Left polar decomposition ``m = u @ p``.

    ``p = sqrt(m^dagger m)`` is positive semidefinite; ``u`` is unitary even when
    ``m`` is singular (completed through the SVD).
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T)) <= HERMITIAN_TOL:
        w, _ = eig_hermitian(a)
        if w[-1] >= -HERMITIAN_TOL:
            return np.eye(a.shape[0], dtype=complex), (a + a.conj().T) / 2
    u, s, v = svd(a)
    unitary = u @ v.conj().T
    p = (v * s) @ v.conj().T
    return unitary, (p + p.conj().T) / 2


def psd_sqrt(m) -> np.ndarray:
    """Principal square root of a positive semidefinite matrix."""
    w, v = eig_hermitian(m)
    return (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T


def random_unitary(dim: int, rng: RandomSource) -> np.ndarray:
    """Haar-random unitary of size ``dim`` (QR of a Ginibre matrix, phase-fixed)."""
    if dim < 1:
        raise ShapeError("dim must be at least 1")
    g = rng.generator()
    z = (g.standard_normal((dim, dim)) + 1j * g.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_instrument(dim: int, n_outcomes: int, rng: RandomSource) -> list[np.ndarray]:
    """Random measurement operators ``M_i`` on one party with ``sum M_i^dag M_i = I``.

    Random positive ``Q_i`` are rescaled by ``S^{-1/2}`` with ``S = sum Q_i`` to give
    effects ``P_i``; each ``M_i`` is ``sqrt(P_i)`` preceded by a Haar unitary.
    """
    if dim < 1 or n_outcomes < 1:
        raise ShapeError("dim and n_outcomes must be at least 1")
    g = rng.generator()
    qs = []
    for _ in range(n_outcomes):
        z = g.standard_normal((dim, dim)) + 1j * g.standard_normal((dim, dim))
        qs.append(z @ z.conj().T)
    total = sum(qs)
    w, v = eig_hermitian(total)
    s_inv_half = (v / np.sqrt(w)) @ v.conj().T
    ops = []
    for i, q in enumerate(qs):
        p = s_inv_half @ q @ s_inv_half
        p = (p + p.conj().T) / 2
        ops.append(random_unitary(dim, rng.child(i)) @ psd_sqrt(p))
    return ops


def completeness_residual(ops) -> float:
    """Max-abs deviation of ``sum M_i^dag M_i`` from the identity."""
    ops = [as_matrix(m) for m in ops]
    total = sum(m.conj().T @ m for m in ops)
    return float(np.max(np.abs(total - np.eye(total.shape[0]))))


def unitarity_error(u) -> float:
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))))
