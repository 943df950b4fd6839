"""Distance to the set of fully product states by multi-start alternating updates.

Each sweep visits the parties in order and replaces party ``j``'s factor with the
normalized contraction of the state against the conjugates of all other factors.
That choice maximizes the overlap for fixed remaining factors, so the squared
overlap never decreases.  All starts are iterated together as a batch.
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field

import numpy as np

from .bipartite import d_from_e
from .errors import ShapeError
from .linalg import RandomSource
from .state import PureState, ensure_normalized, product_state

AGREE_TOL = 1e-9
_ZERO_ENV = 1e-14


@dataclass(frozen=True)
class OptConfig:
    n_starts: int = 32
    max_iters: int = 500
    conv_tol: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.n_starts < 1:
            raise ValueError("n_starts must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not self.conv_tol > 0:
            raise ValueError("conv_tol must be positive")

    def scaled(self, factor: int, seed: int | None = None) -> "OptConfig":
        return OptConfig(self.n_starts * factor, self.max_iters, self.conv_tol,
                         self.seed if seed is None else seed)


@dataclass(frozen=True, eq=False)
class MeasureResult:
    """Outcome of evaluating one geometric measure.

    ``witness`` is a closest state found in the target set; ``starts_agreeing``
    counts optimizer starts that ended within ``1e-9`` of the reported optimum.
    """

    e_value: float
    witness: PureState
    starts_agreeing: int = 1
    iterations: int = 0
    converged: bool = True
    d_value: float = field(init=False)

    def __post_init__(self):
        e = float(min(1.0, max(0.0, self.e_value)))
        object.__setattr__(self, "e_value", e)
        object.__setattr__(self, "d_value", d_from_e(e))


def _contraction_exprs(n: int) -> list[str]:
    """Einsum strings contracting a batch ``y`` of states with ``(y, z)`` factors."""
    letters = string.ascii_lowercase[:n]
    exprs = []
    for j in range(n):
        ops = ["y" + letters] + [f"yz{letters[k]}" for k in range(n) if k != j]
        exprs.append(",".join(ops) + f"->yz{letters[j]}")
    return exprs


def _haar_vectors(g: np.random.Generator, count: int, d: int) -> np.ndarray:
    z = g.standard_normal((count, d)) + 1j * g.standard_normal((count, d))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def _sweep(amps, factors, exprs, g):
    """One alternating pass over all parties, in place.

    ``amps`` has shape ``(n_states, *dims)`` and ``factors[j]`` has shape
    ``(n_states, n_starts, d_j)``.
    """
    n = amps.ndim - 1
    norms = None
    for j in range(n):
        others = [factors[k].conj() for k in range(n) if k != j]
        env = np.einsum(exprs[j], amps, *others, optimize=n > 3)
        norms = np.linalg.norm(env, axis=-1)
        dead = norms < _ZERO_ENV
        if np.any(dead):
            # state orthogonal to the environment product: restart this factor
            env[dead] = _haar_vectors(g, int(dead.sum()), amps.shape[j + 1])
            norms = np.where(dead, 0.0, norms)
            safe = np.where(dead, 1.0, norms)
        else:
            safe = norms
        factors[j] = env / safe[..., None]
    return norms**2


def _overlap2(amps, factors) -> np.ndarray:
    n = amps.ndim - 1
    letters = string.ascii_lowercase[:n]
    expr = "y" + letters + "," + ",".join(f"yz{c}" for c in letters) + "->yz"
    return np.abs(np.einsum(expr, amps, *[f.conj() for f in factors], optimize=n > 3)) ** 2


def sweep_once(s: PureState, factors, rng: RandomSource | None = None):
    """Apply a single alternating pass starting from the given local vectors.

    Returns the updated factors and the squared overlap of their product with
    ``s``.
    """
    fs = [np.asarray(f, dtype=complex).reshape(1, 1, -1) for f in factors]
    fs = [f / np.linalg.norm(f) for f in fs]
    g = (rng or RandomSource()).generator()
    ov = _sweep(s.amps[None], fs, _contraction_exprs(s.n_parties), g)
    return [f[0, 0] for f in fs], float(ov[0, 0])


def random_factors(dims, n_starts: int, seed: int) -> list[np.ndarray]:
    """Haar-random starting vectors, shape ``(n_starts, d_j)`` per party.

    Start ``i`` draws from stream ``i`` so results do not depend on how many
    starts run alongside it.
    """
    per_start = []
    for i in range(n_starts):
        g = RandomSource(seed, i).generator()
        per_start.append([_haar_vectors(g, 1, d)[0] for d in dims])
    return [np.array([fs[j] for fs in per_start]) for j in range(len(dims))]


def nearest_product_many(states, cfg: OptConfig = OptConfig()) -> list[MeasureResult]:
    """:func:`nearest_product` for several states of equal dims, run as one batch."""
    states = [ensure_normalized(s) for s in states]
    if not states:
        return []
    dims = states[0].dims
    if any(s.dims != dims for s in states):
        raise ShapeError("all states in a batch must share dims")
    amps = np.stack([s.amps for s in states])
    n_states, n_starts = len(states), cfg.n_starts
    exprs = _contraction_exprs(len(dims))
    factors = [np.repeat(f[None], n_states, axis=0) for f in random_factors(dims, n_starts, cfg.seed)]
    g = RandomSource(cfg.seed, (n_starts, 0xFAC)).generator()

    prev = _overlap2(amps, factors)
    iters = np.zeros((n_states, n_starts), dtype=int)
    active = np.ones((n_states, n_starts), dtype=bool)
    for _ in range(cfg.max_iters):
        rows = np.flatnonzero(active.any(axis=1))
        if rows.size == 0:
            break
        sub = [f[rows] for f in factors]
        ov = _sweep(amps[rows], sub, exprs, g)
        still = active[rows]
        for j in range(len(factors)):
            # converged starts keep their factors
            factors[j][rows] = np.where(still[..., None], sub[j], factors[j][rows])
        iters[rows] += still
        gain = ov - prev[rows]
        prev[rows] = np.where(still, np.maximum(prev[rows], ov), prev[rows])
        active[rows] = still & (gain >= cfg.conv_tol)

    out = []
    for n in range(n_states):
        best = int(np.argmax(prev[n]))
        top = float(prev[n, best])
        out.append(MeasureResult(
            e_value=1.0 - top,
            witness=product_state([f[n, best] for f in factors]),
            starts_agreeing=int(np.sum(prev[n] >= top - AGREE_TOL)),
            iterations=int(iters[n, best]),
            converged=not bool(active[n, best]),
        ))
    return out


def nearest_product(s: PureState, cfg: OptConfig = OptConfig()) -> MeasureResult:
    """Estimate ``E(s, product states)``; the estimate can only err upwards."""
    return nearest_product_many([s], cfg)[0]
