"""Schmidt decompositions and the closed-form bipartite geometric measures.

For a bipartite pure state with Schmidt coefficients ``l_1 >= l_2 >= ...`` the
distance to the set ``S_k`` of states of Schmidt rank at most ``k`` is
``E = 1 - (l_1 + ... + l_k)``.  A multipartite state is treated as bipartite by
grouping its parties along a :class:`Cut`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, ShapeError
from .linalg import svd
from .state import PureState, ensure_normalized

RANK_TOL = 1e-8


@dataclass(frozen=True)
class Cut:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        left = tuple(sorted(set(self.left)))
        right = tuple(sorted(set(self.right)))
        if not left or not right or set(left) & set(right):
            raise ShapeError(f"invalid cut {self.left}|{self.right}")
        if set(left) | set(right) != set(range(len(left) + len(right))):
            raise ShapeError(f"cut {left}|{right} does not cover parties 0..n-1")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @classmethod
    def of(cls, left: Sequence[int], n_parties: int) -> "Cut":
        left = tuple(sorted(set(int(p) for p in left)))
        if any(p < 0 or p >= n_parties for p in left):
            raise ShapeError(f"party index out of range in {left}")
        return cls(left, tuple(p for p in range(n_parties) if p not in left))

    @property
    def n_parties(self) -> int:
        return len(self.left) + len(self.right)

    def label(self, names: str = "ABCDEFGHIJKL") -> str:
        return "".join(names[p] for p in self.left) + "-" + "".join(names[p] for p in self.right)

    def __str__(self):
        return "".join(map(str, self.left)) + "|" + "".join(map(str, self.right))


def _check_cut(s: PureState, cut: Cut):
    if cut.n_parties != s.n_parties:
        raise ShapeError(f"cut {cut} is for {cut.n_parties} parties, state has {s.n_parties}")


def as_matrix_across(s: PureState, cut: Cut) -> np.ndarray:
    """Amplitudes reshaped to a ``dim(left) x dim(right)`` matrix."""
    _check_cut(s, cut)
    dl = int(np.prod([s.dims[p] for p in cut.left]))
    return np.transpose(s.amps, cut.left + cut.right).reshape(dl, -1)


def from_matrix_across(m: np.ndarray, dims: Sequence[int], cut: Cut) -> PureState:
    """Inverse of :func:`as_matrix_across`."""
    order = cut.left + cut.right
    t = np.asarray(m).reshape([dims[p] for p in order])
    return PureState(np.transpose(t, np.argsort(order)))


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """``|psi> = sum_i sqrt(lambdas[i]) |left_basis[:, i]> |right_basis[:, i]>``."""

    lambdas: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray
    cut: Cut
    dims: tuple[int, ...]

    def rank(self, tol: float = RANK_TOL) -> int:
        return int(np.sum(self.lambdas > tol))

    def reconstruct(self) -> PureState:
        m = (self.left_basis * np.sqrt(self.lambdas)) @ self.right_basis.T
        return from_matrix_across(m, self.dims, self.cut)


def schmidt(s: PureState, cut: Cut) -> SchmidtDecomposition:
    s = ensure_normalized(s)
    m = as_matrix_across(s, cut)
    u, sv, v = svd(m)
    r = len(sv)
    lam = sv**2
    return SchmidtDecomposition(lam / lam.sum(), u[:, :r], v[:, :r].conj(), cut, s.dims)


def schmidt_rank(s: PureState, cut: Cut, tol: float = RANK_TOL) -> int:
    return schmidt(s, cut).rank(tol)


def e_rank_k(s: PureState, cut: Cut, k: int) -> float:
    """Geometric measure with respect to states of Schmidt rank at most ``k``."""
    if k < 1:
        raise DomainError("k must be >= 1")
    lam = schmidt(s, cut).lambdas
    return float(min(1.0, max(0.0, 1.0 - lam[:k].sum())))


def closest_rank_k(s: PureState, cut: Cut, k: int) -> PureState:
    """A closest normalized state of Schmidt rank at most ``k`` across ``cut``.

    Keeps the ``k`` largest Schmidt terms; ties are broken in favour of the
    lower index of the SVD ordering.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    s = ensure_normalized(s)
    u, sv, v = svd(as_matrix_across(s, cut))
    k = min(k, len(sv))
    m = (u[:, :k] * sv[:k]) @ v[:, :k].conj().T
    m = m / np.linalg.norm(m)
    return from_matrix_across(m, s.dims, cut)


def d_from_e(e: float) -> float:
    """Euclidean distance to the set from the overlap deficit ``E``."""
    if not 0.0 <= e <= 1.0:
        raise DomainError(f"E={e} outside [0, 1]")
    return float(np.sqrt(2.0 * (1.0 - np.sqrt(1.0 - e))))


def e_from_d(d: float) -> float:
    if not 0.0 <= d <= np.sqrt(2.0):
        raise DomainError(f"d={d} outside [0, sqrt(2)]")
    return float(1.0 - (1.0 - d * d / 2.0) ** 2)


def locc_convertible(
    initial: PureState,
    finals: Sequence[PureState],
    probabilities: Sequence[float],
    cut: Cut,
    tol: float = 1e-12,
) -> bool:
    """Whether ``initial`` can be turned into the ensemble ``{p_i, final_i}`` by LOCC.

    True iff none of the rank-``k`` measures increases on average, for every ``k``.
    """
    probabilities = np.asarray(probabilities, dtype=float)
    if len(finals) != len(probabilities) or abs(probabilities.sum() - 1) > 1e-10:
        raise DomainError("probabilities must match the final states and sum to 1")
    lam0 = schmidt(initial, cut).lambdas
    finals_lam = [schmidt(f, cut).lambdas for f in finals]
    n = max([len(lam0)] + [len(f) for f in finals_lam])
    for k in range(1, n + 1):
        before = 1.0 - lam0[:k].sum()
        after = sum(p * (1.0 - f[:k].sum()) for p, f in zip(probabilities, finals_lam))
        if before < after - tol:
            return False
    return True
