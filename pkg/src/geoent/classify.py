"""Three-qubit SLOCC classes and the dispatcher over SLOCC-invariant sets."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .bipartite import Cut, closest_rank_k, e_rank_k
from .errors import ShapeError
from .linalg import eig_hermitian
from .product_opt import MeasureResult, OptConfig, nearest_product_many
from .state import PureState, ensure_normalized, reduced_density
from .tangle import three_tangle
from .wclass import W_DEFAULT, e_w_many

NESTING_SLACK = 5e-4


class SloccClass(str, enum.Enum):
    PRODUCT = "A-B-C"
    A_BC = "A-BC"
    AB_C = "AB-C"
    B_AC = "B-AC"
    W = "W"
    GHZ = "GHZ"

    def __str__(self):
        return self.value


class Classification(NamedTuple):
    label: SloccClass
    ranks: tuple[int, int, int]
    tau: float
    flagged: bool


def slocc_class(s: PureState, rank_tol: float = 1e-8, tau_tol: float = 1e-8) -> Classification:
    """SLOCC class of a three-qubit state from local ranks and the three-tangle.

    Values within a factor of 100 of a threshold mark the result as
    ``flagged``; such states are put in the more degenerate class.
    """
    if s.dims != (2, 2, 2):
        raise ShapeError(f"three-qubit state required, got dims {s.dims}")
    s = ensure_normalized(s)
    flagged = False
    ranks = []
    for p in range(3):
        w, _ = eig_hermitian(reduced_density(s, [p]))
        ranks.append(2 if w[1] > rank_tol else 1)
        flagged |= rank_tol / 100 < w[1] < rank_tol * 100
    ranks = tuple(ranks)
    tau = three_tangle(s)
    n2 = sum(r == 2 for r in ranks)
    if n2 == 0:
        label = SloccClass.PRODUCT
    elif n2 == 1:
        # impossible for an exact pure state; numerically it sits on a rank boundary
        label, flagged = SloccClass.PRODUCT, True
    elif n2 == 2:
        label = {0: SloccClass.A_BC, 1: SloccClass.B_AC, 2: SloccClass.AB_C}[ranks.index(1)]
    else:
        label = SloccClass.GHZ if tau > tau_tol else SloccClass.W
        flagged |= tau_tol / 100 < tau < tau_tol * 100
    return Classification(label, ranks, tau, bool(flagged))


_KINDS = ("product", "rank", "w", "ghz", "union")


@dataclass(frozen=True)
class SISetId:
    """Identifies a SLOCC-invariant set of states.

    ``rank`` sets are the states of Schmidt rank at most ``k`` across ``cut``
    (``k = 1`` gives the sets generated by the bipartite classes); ``union``
    holds its members in ``members``.
    """

    kind: str
    cut: Cut | None = None
    k: int = 1
    members: tuple["SISetId", ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown set kind {self.kind!r}")
        if self.kind == "rank" and (self.cut is None or self.k < 1):
            raise ValueError("rank sets need a cut and k >= 1")
        if self.kind == "union":
            if not self.members:
                raise ValueError("a union needs members")
            if len(set(self.members)) != len(self.members):
                raise ValueError("duplicate union members")

    @classmethod
    def product(cls):
        return cls("product")

    @classmethod
    def rank_k(cls, cut: Cut, k: int = 1):
        return cls("rank", cut=cut, k=k)

    @classmethod
    def w_closure(cls):
        return cls("w")

    @classmethod
    def ghz_closure(cls):
        return cls("ghz")

    @classmethod
    def union(cls, *members: "SISetId"):
        return cls("union", members=tuple(members))

    @property
    def optimized(self) -> bool:
        """True when the measure comes from a numerical search (one-sided error)."""
        if self.kind == "union":
            return any(m.optimized for m in self.members)
        return self.kind in ("product", "w")

    def spec(self) -> str:
        if self.kind == "rank":
            left = "".join(map(str, self.cut.left))
            return f"cut:{left}" if self.k == 1 else f"rank:{left}:{self.k}"
        if self.kind == "union":
            return "union:" + ",".join(m.spec() for m in self.members)
        return self.kind

    def __str__(self):
        return self.spec()


def parse_cut(text: str, n_parties: int) -> Cut:
    """``"0"`` or ``"0|12"`` style cut; the left side is listed."""
    left = text.split("|")[0]
    if not left or not left.isdigit():
        raise ShapeError(f"cannot parse cut {text!r}")
    cut = Cut.of([int(ch) for ch in left], n_parties)
    if "|" in text:
        right = tuple(sorted(int(ch) for ch in text.split("|")[1]))
        if right != cut.right:
            raise ShapeError(f"cut {text!r} does not partition {n_parties} parties")
    return cut


def parse_set_spec(text: str, n_parties: int) -> SISetId:
    """Parse ``product``, ``w``, ``ghz``, ``cut:<left>``, ``rank:<left>:<k>``,
    ``union:<spec>,<spec>,...``."""
    text = text.strip()
    if text in ("product", "w", "ghz"):
        return SISetId(text)
    head, _, rest = text.partition(":")
    if head == "cut" and rest:
        return SISetId.rank_k(parse_cut(rest, n_parties), 1)
    if head == "rank" and rest:
        cut_text, _, k = rest.rpartition(":")
        if not cut_text or not k.isdigit():
            raise ShapeError(f"cannot parse {text!r}; expected rank:<cut>:<k>")
        return SISetId.rank_k(parse_cut(cut_text, n_parties), int(k))
    if head == "union" and rest:
        return SISetId.union(*[parse_set_spec(p, n_parties) for p in rest.split(",")])
    raise ShapeError(f"unknown set specification {text!r}")


def _check_compatible(dims: tuple[int, ...], set_id: SISetId):
    if set_id.kind in ("w", "ghz") and dims != (2, 2, 2):
        raise ShapeError(f"set {set_id} is defined for three qubits only, got dims {dims}")
    if set_id.kind == "rank" and set_id.cut.n_parties != len(dims):
        raise ShapeError(f"cut {set_id.cut} does not match {len(dims)} parties")
    for m in set_id.members:
        _check_compatible(dims, m)


def measure_many(states: Sequence[PureState], set_id: SISetId,
                 cfg: OptConfig | None = None) -> list[MeasureResult]:
    """Evaluate ``E(., set_id)`` for a batch of states with equal dims."""
    states = [ensure_normalized(s) for s in states]
    if not states:
        return []
    dims = states[0].dims
    if any(s.dims != dims for s in states):
        raise ShapeError("all states in a batch must share dims")
    _check_compatible(dims, set_id)
    if set_id.kind == "product":
        return nearest_product_many(states, cfg or OptConfig())
    if set_id.kind == "w":
        return e_w_many(states, cfg or W_DEFAULT)
    if set_id.kind == "ghz":
        return [MeasureResult(0.0, s) for s in states]
    if set_id.kind == "rank":
        return [MeasureResult(e_rank_k(s, set_id.cut, set_id.k),
                              closest_rank_k(s, set_id.cut, set_id.k)) for s in states]
    per_member = [measure_many(states, m, cfg) for m in set_id.members]
    return [min(col, key=lambda r: r.e_value) for col in zip(*per_member)]


def measure(s: PureState, set_id: SISetId, cfg: OptConfig | None = None) -> MeasureResult:
    """``E(s, set_id)``; unions take the minimum over their members."""
    return measure_many([s], set_id, cfg)[0]


THREE_QUBIT_CUTS = {
    "A-BC": Cut((0,), (1, 2)),
    "AC-B": Cut((1,), (0, 2)),
    "AB-C": Cut((0, 1), (2,)),
}


class NestingReport(NamedTuple):
    values: dict
    checks: list

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)


def nesting_check(s: PureState, cfg: OptConfig | None = None,
                  slack: float = NESTING_SLACK) -> NestingReport:
    """Check that bigger sets give smaller measures for a three-qubit state.

    The product-state measure must dominate every cut measure and the W
    measure; all of them dominate the GHZ-closure measure, which is zero.
    """
    if s.dims != (2, 2, 2):
        raise ShapeError(f"three-qubit state required, got dims {s.dims}")
    values = {"A-B-C": measure(s, SISetId.product(), cfg).e_value}
    for name, cut in THREE_QUBIT_CUTS.items():
        values[name] = measure(s, SISetId.rank_k(cut), cfg).e_value
    values["W"] = measure(s, SISetId.w_closure(), cfg).e_value
    values["GHZ"] = 0.0
    checks = []
    for name in list(THREE_QUBIT_CUTS) + ["W"]:
        checks.append((f"E(A-B-C) >= E({name})", values["A-B-C"] >= values[name] - slack))
        checks.append((f"E({name}) >= E(GHZ)", values[name] >= -slack))
    return NestingReport(values, checks)
