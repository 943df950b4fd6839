"""Dense pure states of ``p`` parties.

A :class:`PureState` holds its amplitudes as a complex tensor whose shape is the
tuple of local dimensions; the flattened (row-major, party 0 slowest) vector is
available as :attr:`PureState.vector`.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InvalidInputError, ShapeError, ZeroStateError
from .linalg import RandomSource, as_matrix

ZERO_NORM = 1e-14
NORM_WARN = 1e-6


@dataclass(frozen=True, eq=False)
class PureState:
    amps: np.ndarray

    def __post_init__(self):
        a = np.array(self.amps, dtype=complex)
        if a.ndim == 0 or any(d < 2 for d in a.shape):
            raise ShapeError(f"every local dimension must be >= 2, got {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InvalidInputError("state has non-finite amplitudes")
        a.setflags(write=False)
        object.__setattr__(self, "amps", a)

    @classmethod
    def from_vector(cls, vec, dims: Sequence[int]) -> "PureState":
        vec = np.asarray(vec, dtype=complex).ravel()
        dims = tuple(int(d) for d in dims)
        if vec.size != int(np.prod(dims)):
            raise ShapeError(f"{vec.size} amplitudes do not fit dims {dims}")
        return cls(vec.reshape(dims))

    @property
    def dims(self) -> tuple[int, ...]:
        return self.amps.shape

    @property
    def n_parties(self) -> int:
        return self.amps.ndim

    @property
    def vector(self) -> np.ndarray:
        return self.amps.reshape(-1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def __repr__(self):
        return f"PureState(dims={self.dims}, norm={self.norm():.6g})"


class MeasurementOutcome(NamedTuple):
    probability: float
    state: PureState


def normalize(s: PureState) -> PureState:
    n = s.norm()
    if n <= ZERO_NORM:
        raise ZeroStateError("cannot normalize a zero state")
    if abs(n - 1) <= 4 * np.finfo(float).eps:
        # already unit norm: keep the amplitudes bit-identical
        return s
    return PureState(s.amps / n)


def ensure_normalized(s: PureState) -> PureState:
    """Normalize ``s``, warning if it was noticeably off the unit sphere."""
    n = s.norm()
    if abs(n - 1) > NORM_WARN:
        warnings.warn(f"state norm is {n:.3g}; normalizing", stacklevel=3)
    return normalize(s)


def inner(a: PureState, b: PureState) -> complex:
    """``<a|b>``, antilinear in ``a``."""
    if a.dims != b.dims:
        raise ShapeError(f"dims differ: {a.dims} vs {b.dims}")
    return complex(np.vdot(a.vector, b.vector))


def overlap2(a: PureState, b: PureState) -> float:
    return abs(inner(a, b)) ** 2


def apply_local(s: PureState, party: int, m) -> PureState:
    """Apply matrix ``m`` to one party's index.  The result is not renormalized."""
    m = as_matrix(m)
    if not 0 <= party < s.n_parties:
        raise ShapeError(f"party {party} out of range for {s.n_parties} parties")
    d = s.dims[party]
    if m.shape != (d, d):
        raise ShapeError(f"operator of shape {m.shape} cannot act on dimension {d}")
    out = np.tensordot(m, s.amps, axes=([1], [party]))
    return PureState(np.moveaxis(out, 0, party))


def _check_subset(parties, n: int) -> tuple[int, ...]:
    sub = tuple(sorted(set(int(p) for p in parties)))
    if not sub or len(sub) >= n or sub[0] < 0 or sub[-1] >= n:
        raise ShapeError(f"{tuple(parties)} is not a nonempty proper subset of {n} parties")
    return sub


def reduced_density(s: PureState, parties) -> np.ndarray:
    """Reduced density matrix on ``parties`` (in ascending party order)."""
    keep = _check_subset(parties, s.n_parties)
    rest = tuple(p for p in range(s.n_parties) if p not in keep)
    dl = int(np.prod([s.dims[p] for p in keep]))
    m = np.transpose(s.amps, keep + rest).reshape(dl, -1)
    rho = m @ m.conj().T
    return (rho + rho.conj().T) / 2


def product_state(factors: Sequence) -> PureState:
    """Tensor product of local vectors; each factor is normalized first."""
    vecs = []
    for f in factors:
        f = np.asarray(f, dtype=complex).ravel()
        n = np.linalg.norm(f)
        if n <= ZERO_NORM:
            raise ZeroStateError("zero local factor")
        vecs.append(f / n)
    dims = tuple(len(v) for v in vecs)
    return PureState.from_vector(reduce(np.kron, vecs), dims)


def basis_state(indices: Sequence[int], dims: Sequence[int] | None = None) -> PureState:
    dims = tuple(dims) if dims is not None else (2,) * len(indices)
    a = np.zeros(dims, dtype=complex)
    a[tuple(indices)] = 1
    return PureState(a)


def ghz(n: int = 3, d: int = 2) -> PureState:
    a = np.zeros((d,) * n, dtype=complex)
    for i in range(d):
        a[(i,) * n] = 1
    return normalize(PureState(a))


def w_state(n: int = 3) -> PureState:
    a = np.zeros((2,) * n, dtype=complex)
    for j in range(n):
        idx = [0] * n
        idx[j] = 1
        a[tuple(idx)] = 1
    return normalize(PureState(a))


def random_state(dims: Sequence[int], rng: RandomSource) -> PureState:
    """Haar-random pure state (normalized complex Gaussian amplitudes)."""
    g = rng.generator()
    dims = tuple(dims)
    z = g.standard_normal(dims) + 1j * g.standard_normal(dims)
    return normalize(PureState(z))
