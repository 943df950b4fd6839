"""Distance to the closure of the three-qubit W class, and the GHZ-closure set.

Every state in the closure of the W class is, in some local product basis
``{|0'>, |1'>}^{x3}``, supported on ``|0'0'0'>, |1'0'0'>, |0'1'0'>, |0'0'1'>``
(at most one local excitation).  Conversely every such state has vanishing
three-tangle, so the union over local bases of these four-dimensional spans is
exactly the W closure.  For fixed bases the best overlap is the weight of the
state on that span, hence

    E(psi, S_W) = min over local bases of  (weight on >= 2 excitations).

The search is block coordinate ascent on the one-excitation weight: with two
parties' bases fixed, the optimal ground vector of the third is the top
eigenvector of a 2x2 Hermitian matrix, so each block update is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, ShapeError
from .linalg import RandomSource
from .product_opt import AGREE_TOL, MeasureResult, OptConfig
from .state import PureState, ensure_normalized, normalize, product_state

W_DEFAULT = OptConfig(n_starts=64)

# one-excitation patterns (a, b, c) in the rotated basis
_LOW = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def _require_three_qubits(s: PureState):
    if s.dims != (2, 2, 2):
        raise ShapeError(f"three-qubit state required, got dims {s.dims}")


def _basis_from_ground(g: np.ndarray) -> np.ndarray:
    """2x2 unitary with columns ``|0'> = g`` and ``|1'>`` orthogonal to it; batched."""
    g = g / np.linalg.norm(g, axis=-1, keepdims=True)
    perp = np.stack([-g[..., 1].conj(), g[..., 0].conj()], axis=-1)
    return np.stack([g, perp], axis=-1)


@dataclass(frozen=True)
class WBasisParam:
    """Local bases given by the Bloch angles of each ground vector ``|0'_j>``.

    ``theta = 0`` on every party is the computational basis.
    """

    thetas: tuple[float, float, float] = (0.0, 0.0, 0.0)
    phis: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if len(self.thetas) != 3 or len(self.phis) != 3:
            raise ShapeError("need three (theta, phi) pairs")
        if any(not 0 <= t <= np.pi for t in self.thetas):
            raise DomainError("theta must lie in [0, pi]")
        if any(not 0 <= p < 2 * np.pi for p in self.phis):
            raise DomainError("phi must lie in [0, 2 pi)")

    def ground_vectors(self) -> np.ndarray:
        t = np.asarray(self.thetas) / 2
        return np.stack([np.cos(t), np.exp(1j * np.asarray(self.phis)) * np.sin(t)], axis=-1)

    def bases(self) -> np.ndarray:
        return _basis_from_ground(self.ground_vectors())

    @classmethod
    def from_ground_vectors(cls, gs) -> "WBasisParam":
        gs = np.asarray(gs, dtype=complex).reshape(3, 2)
        gs = gs / np.linalg.norm(gs, axis=1, keepdims=True)
        # strip the phase of the first component
        ph = np.where(np.abs(gs[:, 0]) > 0, gs[:, 0] / np.maximum(np.abs(gs[:, 0]), 1e-300), 1)
        gs = gs / ph[:, None]
        thetas = tuple(float(2 * np.arccos(np.clip(abs(g[0]), 0, 1))) for g in gs)
        phis = tuple(float(np.angle(g[1]) % (2 * np.pi)) if abs(g[1]) > 0 else 0.0 for g in gs)
        return cls(thetas, phis)


def rotated_coefficients(amps: np.ndarray, bases) -> np.ndarray:
    """Coefficients ``<a'b'c'|psi>``.

    ``amps`` is ``(..., 2, 2, 2)`` and ``bases`` is ``(..., 3, 2, 2)`` with
    broadcast-compatible leading axes.
    """
    bases = np.asarray(bases).conj()
    b0, b1, b2 = bases[..., 0, :, :], bases[..., 1, :, :], bases[..., 2, :, :]
    # contract one axis at a time as batched matmuls
    x = amps @ b2[..., None, :, :]                                  # ...ijc
    x = np.swapaxes(b1, -1, -2)[..., None, :, :] @ x                 # ...ibc
    x = np.einsum("...ia,...ibc->...abc", b0, x)
    return x


def _low_weight(coeffs: np.ndarray) -> np.ndarray:
    w = np.abs(coeffs) ** 2
    return sum(w[..., a, b, c] for a, b, c in _LOW)


def w_weight(s: PureState, param: WBasisParam) -> float:
    """Weight of ``s`` on two or more excitations in the bases of ``param``."""
    _require_three_qubits(s)
    c = rotated_coefficients(ensure_normalized(s).amps, param.bases())
    return float(1.0 - _low_weight(c))


def _update_party(amps, bases, j):
    """Exact best ground vector for party ``j``.

    ``amps`` is ``(N, 2, 2, 2)`` and ``bases`` is ``(N, S, 3, 2, 2)``.  Returns the
    new bases and the resulting one-excitation weights ``(N, S)``.
    """
    t = np.moveaxis(amps, j + 1, 1)[:, None]
    o1, o2 = [k for k in range(3) if k != j]
    x = t @ bases[:, :, o2, None].conj()
    v = np.swapaxes(bases[:, :, o1, None].conj(), -1, -2) @ x
    v01, v10 = v[..., 0, 1], v[..., 1, 0]
    # top eigenpair of the 2x2 Hermitian matrix v01 v01^+ + v10 v10^+
    a = np.abs(v01[..., 0]) ** 2 + np.abs(v10[..., 0]) ** 2
    d = np.abs(v01[..., 1]) ** 2 + np.abs(v10[..., 1]) ** 2
    off = v01[..., 0] * v01[..., 1].conj() + v10[..., 0] * v10[..., 1].conj()
    top = (a + d) / 2 + np.sqrt(((a - d) / 2) ** 2 + np.abs(off) ** 2)
    g = np.where((a >= d)[..., None],
                 np.stack([top - d, off.conj()], axis=-1),
                 np.stack([off, top - a], axis=-1))
    # matrix proportional to the identity: any vector is optimal, keep the old one
    flat = np.linalg.norm(g, axis=-1) < 1e-150
    g[flat] = bases[:, :, j, :, 0][flat]
    bases = bases.copy()
    bases[:, :, j] = _basis_from_ground(g)
    low = np.sum(np.abs(v[..., 0, 0]) ** 2, axis=-1) + top
    return bases, low


def _starting_bases(n_starts: int, seed: int) -> np.ndarray:
    """Start 0 is the computational basis; start ``i`` draws from stream ``i``."""
    out = np.empty((n_starts, 3, 2, 2), dtype=complex)
    out[0] = np.eye(2)
    for i in range(1, n_starts):
        g = RandomSource(seed, i).generator()
        z = g.standard_normal((3, 2)) + 1j * g.standard_normal((3, 2))
        out[i] = _basis_from_ground(z)
    return out


_HIGH = ((1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))


def _high_residuals(c):
    hi = np.stack([c[..., a, b, k] for a, b, k in _HIGH], axis=-1)
    return np.concatenate([hi.real, hi.imag], axis=-1)


def _high_jacobian(c):
    """Real Jacobian ``(..., 8, 6)`` of the high-excitation amplitudes.

    Rotating party ``j`` by ``|0'> -> |0'> + t |1'>``, ``|1'> -> |1'> - t^* |0'>``
    moves ``c`` (slot ``j`` = 0) by ``t^* c[flip_j]`` and (slot ``j`` = 1) by
    ``-t c[flip_j]``, with ``t = x + i y``.
    """
    cols = []
    for j in range(3):
        dx, dy = [], []
        for idx in _HIGH:
            flip = list(idx)
            flip[j] = 1 - flip[j]
            cf = c[(Ellipsis,) + tuple(flip)]
            if idx[j] == 0:
                dx.append(cf)
                dy.append(-1j * cf)
            else:
                dx.append(-cf)
                dy.append(-1j * cf)
        cols.append(np.stack(dx, axis=-1))
        cols.append(np.stack(dy, axis=-1))
    jc = np.stack(cols, axis=-1)
    return np.concatenate([jc.real, jc.imag], axis=-2)


def _rotate(bases, step):
    t = step[..., 0::2] + 1j * step[..., 1::2]
    return _basis_from_ground(bases[..., :, 0] + t[..., None] * bases[..., :, 1])


def _polish(amps, bases, n_steps: int = 60):
    """Batched Levenberg-Marquardt on the high-excitation amplitudes.

    Block ascent slows down badly when the parties are strongly coupled
    (typical of SLOCC-distorted W-class states).  For states in the W closure
    the residuals vanish at the optimum, where these steps converge
    quadratically.  ``amps`` is ``(M, 2, 2, 2)``, ``bases`` is ``(M, 3, 2, 2)``.
    """
    c = rotated_coefficients(amps, bases)
    loss = 1.0 - _low_weight(c)
    mu = np.full(len(amps), 1e-3)
    eye = np.eye(6)
    for _ in range(n_steps):
        r = _high_residuals(c)
        jac = _high_jacobian(c)
        jt = np.swapaxes(jac, -1, -2)
        jtj = jt @ jac
        grad = (jt @ r[..., None])[..., 0]
        damp = mu[:, None, None] * (np.diagonal(jtj, axis1=-2, axis2=-1)[..., None] * eye + 1e-15 * eye)
        step = -np.linalg.solve(jtj + damp, grad[..., None])[..., 0]
        trial = _rotate(bases, step)
        ct = rotated_coefficients(amps, trial)
        lt = 1.0 - _low_weight(ct)
        ok = lt < loss
        bases = np.where(ok[:, None, None, None], trial, bases)
        c = np.where(ok[:, None, None, None], ct, c)
        loss = np.where(ok, lt, loss)
        mu = np.where(ok, mu / 3, mu * 4)
        if np.all(mu > 1e12) or np.all(loss < 1e-30):
            break
    return 1.0 - loss, bases


def w_search_many(amps: np.ndarray, cfg: OptConfig = W_DEFAULT, n_polish: int = 2):
    """Multi-start ascent plus polishing of the ``n_polish`` best starts per state.

    ``amps`` is ``(N, 2, 2, 2)``.  Returns one-excitation weights ``(N, S)``,
    bases ``(N, S, 3, 2, 2)``, sweep counts and the still-active mask.
    """
    n_states, n_starts = len(amps), cfg.n_starts
    bases = np.repeat(_starting_bases(n_starts, cfg.seed)[None], n_states, axis=0)
    prev = _low_weight(rotated_coefficients(amps[:, None], bases))
    iters = np.zeros((n_states, n_starts), dtype=int)
    active = np.ones((n_states, n_starts), dtype=bool)
    for _ in range(cfg.max_iters):
        rows = np.flatnonzero(active.any(axis=1))
        if rows.size == 0:
            break
        sub = bases[rows]
        for j in range(3):
            sub, low = _update_party(amps[rows], sub, j)
        still = active[rows]
        bases[rows] = np.where(still[..., None, None, None], sub, bases[rows])
        iters[rows] += still
        gain = low - prev[rows]
        prev[rows] = np.where(still, np.maximum(prev[rows], low), prev[rows])
        active[rows] = still & (gain >= cfg.conv_tol)

    k = min(n_polish, n_starts)
    if k:
        pick = np.argsort(-prev, axis=1, kind="stable")[:, :k]
        rows = np.repeat(np.arange(n_states), k)
        cols = pick.ravel()
        low, b = _polish(amps[rows], bases[rows, cols])
        better = low > prev[rows, cols]
        prev[rows[better], cols[better]] = low[better]
        bases[rows[better], cols[better]] = b[better]
        active[rows[better], cols[better]] = False
    return prev, bases, iters, active


def e_w_many(states, cfg: OptConfig | None = None) -> list[MeasureResult]:
    """:func:`e_w` for a list of three-qubit states, evaluated as one batch."""
    states = list(states)
    for s in states:
        _require_three_qubits(s)
    if not states:
        return []
    states = [ensure_normalized(s) for s in states]
    cfg = cfg or W_DEFAULT
    amps = np.stack([s.amps for s in states])
    low, bases, iters, active = w_search_many(amps, cfg)
    out = []
    for n, s in enumerate(states):
        best = int(np.argmax(low[n]))
        top = float(min(1.0, low[n, best]))
        b = bases[n, best]
        c = rotated_coefficients(s.amps, b)
        proj = np.zeros_like(c)
        for idx in _LOW:
            proj[idx] = c[idx]
        w_amps = np.einsum("abc,ia,jb,kc->ijk", proj, b[0], b[1], b[2])
        if top > 1e-14:
            witness = normalize(PureState(w_amps))
        else:
            witness = product_state([b[0][:, 0], b[1][:, 0], b[2][:, 0]])
        out.append(MeasureResult(
            e_value=1.0 - top,
            witness=witness,
            starts_agreeing=int(np.sum(low[n] >= top - AGREE_TOL)),
            iterations=int(iters[n, best]),
            converged=not bool(active[n, best]),
        ))
    return out


def e_w(s: PureState, cfg: OptConfig | None = None) -> MeasureResult:
    """Estimate ``E(s, S_W)``.

    Like every search in this package the estimate can only err upwards.  The
    witness is the normalized projection of ``s`` onto the one-excitation span
    of the best bases found.
    """
    return e_w_many([s], cfg)[0]


def e_ghz_set(s: PureState) -> float:
    """Measure for the GHZ closure: the GHZ class is dense, so this is always 0."""
    _require_three_qubits(s)
    return 0.0


@dataclass(frozen=True)
class GhzSequenceParam:
    epsilon: float
    alphas: Sequence = ((1, 0), (1, 0), (1, 0))
    betas: Sequence = ((0, 1), (0, 1), (0, 1))


def ghz_eps_state(p: GhzSequenceParam) -> PureState:
    """``(|g1 g2 g3> - |a1 a2 a3>) / eps`` with ``|g_j> = |a_j> + eps |b_j>``, normalized.

    As ``eps -> 0`` this GHZ-class state tends to the W-class state
    ``|b1 a2 a3> + |a1 b2 a3> + |a1 a2 b3>``.
    """
    if not p.epsilon > 0:
        raise DomainError("epsilon must be positive")
    alphas = [np.asarray(a, dtype=complex) for a in p.alphas]
    betas = [np.asarray(b, dtype=complex) for b in p.betas]
    if len(alphas) != 3 or len(betas) != 3:
        raise ShapeError("three (alpha, beta) pairs are required")
    for a, b in zip(alphas, betas):
        if a.shape != (2,) or b.shape != (2,):
            raise ShapeError("local vectors must be qubit vectors")
        if abs(a[0] * b[1] - a[1] * b[0]) < 1e-12:
            raise DomainError("beta must not be parallel to alpha")
    eps = p.epsilon
    gam = [a + eps * b for a, b in zip(alphas, betas)]
    t = np.einsum("i,j,k->ijk", *gam) - np.einsum("i,j,k->ijk", *alphas)
    return normalize(PureState(t / eps))
