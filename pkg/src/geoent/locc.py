"""Local measurements, SLOCC maps and randomized monotonicity checks."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .classify import SISetId, measure_many
from .errors import AnnihilationError, InvalidInstrumentError, ShapeError
from .linalg import RandomSource, as_matrix, completeness_residual, random_instrument
from .product_opt import OptConfig
from .state import (ZERO_NORM, MeasurementOutcome, PureState, apply_local,
                    ensure_normalized, normalize, random_state)

log = logging.getLogger(__name__)

COMPLETENESS_TOL = 1e-8
MIN_PROBABILITY = 1e-14
CLOSED_FORM_TOL = 1e-9
OPTIMIZED_TOL = 5e-4
RETRY_FACTOR = 4


def apply_instrument(s: PureState, party: int, ms: Sequence) -> list[MeasurementOutcome]:
    """Outcomes ``(p_i, M_i psi / sqrt(p_i))`` of measuring ``party``.

    Outcomes with probability below ``1e-14`` are dropped.
    """
    ms = [as_matrix(m) for m in ms]
    if not 0 <= party < s.n_parties:
        raise ShapeError(f"party {party} out of range")
    if any(m.shape != (s.dims[party],) * 2 for m in ms):
        raise ShapeError("measurement operators do not match the local dimension")
    if completeness_residual(ms) > COMPLETENESS_TOL:
        raise InvalidInstrumentError("sum of M_i^dagger M_i is not the identity")
    s = ensure_normalized(s)
    out = []
    for m in ms:
        t = apply_local(s, party, m)
        p = t.norm() ** 2
        if p >= MIN_PROBABILITY:
            out.append(MeasurementOutcome(p, normalize(t)))
    return out


def slocc_apply(s: PureState, ops: Sequence) -> PureState:
    """Normalized ``(A_1 x ... x A_p) psi``."""
    if len(ops) != s.n_parties:
        raise ShapeError(f"need {s.n_parties} local operators, got {len(ops)}")
    t = s
    for party, a in enumerate(ops):
        t = apply_local(t, party, a)
    if t.norm() < ZERO_NORM:
        raise AnnihilationError("local operators annihilate the state")
    return normalize(t)


@dataclass
class FuzzReport:
    trials: int
    violations: int
    worst_margin: float
    flagged: list = field(default_factory=list)
    max_probability_error: float = 0.0
    margins: np.ndarray = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.violations == 0


@dataclass(frozen=True)
class _Trial:
    state: PureState
    party: int
    outcomes: list


def _draw_trial(dims, src: RandomSource, sampler) -> _Trial:
    g = src.generator()
    state = sampler(src.child(0)) if sampler else random_state(dims, src.child(0))
    party = int(g.integers(len(dims)))
    n_out = int(g.integers(2, 5))
    ops = random_instrument(dims[party], n_out, src.child(1))
    return _Trial(state, party, apply_instrument(state, party, ops))


def _margins(trials: list[_Trial], evaluate) -> np.ndarray:
    flat = []
    for t in trials:
        flat.append(t.state)
        flat.extend(o.state for o in t.outcomes)
    values = np.asarray(evaluate(flat), dtype=float)
    out, pos = [], 0
    for t in trials:
        before = values[pos]
        after = sum(o.probability * values[pos + 1 + i] for i, o in enumerate(t.outcomes))
        out.append(before - after)
        pos += 1 + len(t.outcomes)
    return np.array(out)


def monotonicity_fuzz(
    measure: SISetId | Callable[[PureState], float],
    dims: Sequence[int],
    trials: int,
    rng: RandomSource,
    cfg: OptConfig | None = None,
    tol: float | None = None,
    sampler: Callable[[RandomSource], PureState] | None = None,
) -> FuzzReport:
    """Check ``E(psi) >= sum_i p_i E(psi_i)`` on random single-party measurements.

    Each trial draws a Haar-random state (or ``sampler(source)``), a random
    party and a random instrument with 2 to 4 outcomes.  For measures obtained
    by numerical search a negative margin can be an optimizer miss rather than
    a real violation, so such trials are recomputed with four times as many
    starts before they count.  ``measure`` may also be a plain function of a
    state, which is evaluated as a closed form.
    """
    dims = tuple(dims)
    sources = [rng.child(t) for t in range(trials)]
    drawn = [_draw_trial(dims, src, sampler) for src in sources]
    prob_err = max((abs(sum(o.probability for o in t.outcomes) - 1) for t in drawn), default=0.0)

    if isinstance(measure, SISetId):
        optimized = measure.optimized

        def evaluate(states, c=cfg):
            return [r.e_value for r in measure_many(states, measure, c)]
    else:
        optimized = False

        def evaluate(states, c=None):
            return [float(measure(s)) for s in states]

    if tol is None:
        tol = OPTIMIZED_TOL if optimized else CLOSED_FORM_TOL
    margins = _margins(drawn, evaluate)
    bad = np.flatnonzero(margins < -tol)
    flagged = [(rng.seed, sources[i].stream) for i in bad]
    if optimized and bad.size:
        base = cfg or OptConfig()
        retry_cfg = base.scaled(RETRY_FACTOR, seed=base.seed + 1)
        log.info("retrying %d flagged trials with %d starts", bad.size, retry_cfg.n_starts)
        margins[bad] = _margins([drawn[i] for i in bad], lambda st: evaluate(st, retry_cfg))
    violations = int(np.sum(margins < -tol))
    for i in np.flatnonzero(margins < -tol):
        log.debug("monotonicity violation in trial %d: margin %.3g", i, margins[i])
    return FuzzReport(
        trials=trials,
        violations=violations,
        worst_margin=float(margins.min()) if trials else 0.0,
        flagged=flagged,
        max_probability_error=float(prob_err),
        margins=margins,
    )
