"""Intensity envelopes for masked failure data from a series system.

With component labels removed, the system intensity is bracketed by the two
extreme attributions of the masked times. For the lower envelope each of the
last n system failures lands on a distinct component (round-robin further
back), which keeps the fleet as young as possible; for the upper envelope
every failure lands on one component, leaving the other n-1 components at the
fresh rate. Both reduce to shifted evaluations of the initial rate under the
age-reduction repair family, and both require a nondecreasing rate and
effectiveness in [0, 1].

Evaluation at a failure time uses the left limit: the history handed in must
exclude an event exactly at ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .repair import check_history
from .superpose import MaskedHistory

__all__ = ["BoundPair", "srp_bounds", "sgrp_bounds", "sgrp_bounds_at_events",
           "heterogeneous_upper", "ara_lag_offsets", "ara_last_component_offset"]


@dataclass(frozen=True)
class BoundPair:
    """Lower/upper system-intensity envelope values at time ``at``."""

    lower: float
    upper: float
    at: float


def _require_nondecreasing(hazard):
    if not hazard.is_nondecreasing:
        raise DomainError("bound evaluation requires a nondecreasing hazard rate")


def _require_improving(model):
    ara = model.to_ara()
    if not 0.0 <= ara.rho <= 1.0:
        raise DomainError("bound evaluation requires repair effectiveness in [0, 1]")
    return ara


def _eval_time(mh, t):
    t = float(t)
    last = float(mh.times[-1]) if mh.times.size else 0.0
    if t < last:
        raise DomainError(f"t={t} precedes the last masked failure at {last}")
    return t


def ara_lag_offsets(times, n, m, rho) -> np.ndarray:
    """Age offsets of the n lag intensities forming the lower envelope.

    Lag i (i = 0..n-1) stands for the component whose latest assumed failure
    is the (N-i)-th masked time; earlier failures are attributed every n
    events further back. Lags with no attributed failure keep offset 0 (a
    fresh component). Once every lag has a failure (N > n) the geometric
    memory is capped uniformly at min(floor(N/n), m) terms per lag.
    """
    times = np.asarray(times, dtype=float)
    big_n = int(times.size)
    if big_n == 0 or rho == 0.0:
        return np.zeros(n)
    if big_n <= n:
        k = big_n - np.arange(n)
        return np.where(k >= 1, rho * times[np.maximum(k, 1) - 1], 0.0)
    q = min(big_n // n - 1, m - 1)
    j = np.arange(q + 1)[:, None]
    idx = big_n - n * j - np.arange(n)[None, :]
    weights = rho * np.power(1.0 - rho, j)
    vals = np.where(idx >= 1, times[np.maximum(idx, 1) - 1], 0.0)
    return (weights * vals).sum(axis=0)


def ara_last_component_offset(times, m, rho) -> float:
    """Offset when the last min(N, m) masked times all hit one component."""
    times = np.asarray(times, dtype=float)
    big_n = int(times.size)
    if big_n == 0 or rho == 0.0:
        return 0.0
    j = np.arange(min(m, big_n))
    return float(np.sum(rho * np.power(1.0 - rho, j) * times[big_n - 1 - j]))


def srp_bounds(mh: MaskedHistory, hazard, t) -> BoundPair:
    """Envelope under replacement (as-good-as-new) repair.

    lower: the last n masked times assigned one-per-component, missing ones
    treated as time 0. upper: (n-1) fresh components plus one replaced at the
    newest masked time.
    """
    _require_nondecreasing(hazard)
    t = _eval_time(mh, t)
    times, n = mh.times, mh.n
    big_n = int(times.size)
    if big_n == 0:
        shifted = np.zeros(n)
    else:
        k = big_n - np.arange(n)
        shifted = np.where(k >= 1, times[np.maximum(k, 1) - 1], 0.0)
    lower = float(np.sum(hazard.rate(t - shifted)))
    last = float(times[-1]) if big_n else 0.0
    upper = float((n - 1) * hazard.rate(t) + hazard.rate(t - last))
    return BoundPair(lower=lower, upper=upper, at=t)


def sgrp_bounds(mh: MaskedHistory, model, hazard, t) -> BoundPair:
    """Envelope under an improving age-reduction repair family."""
    _require_nondecreasing(hazard)
    ara = _require_improving(model)
    t = _eval_time(mh, t)
    lower_off = ara_lag_offsets(mh.times, mh.n, ara.m, ara.rho)
    upper_off = ara_last_component_offset(mh.times, ara.m, ara.rho)
    lower = float(np.sum(hazard.rate(t - lower_off)))
    upper = float((mh.n - 1) * hazard.rate(t) + hazard.rate(t - upper_off))
    return BoundPair(lower=lower, upper=upper, at=t)


def sgrp_bounds_at_events(times, n, model, hazard):
    """Left-limit envelopes at each event of a masked trajectory.

    Row k is evaluated at ``times[k]`` with the history strictly before it, so
    it matches ``sgrp_bounds`` on the k-event prefix. Returns (lower, upper)
    arrays.
    """
    _require_nondecreasing(hazard)
    ara = _require_improving(model)
    times = check_history(times)
    lower = np.empty(times.size)
    upper = np.empty(times.size)
    for k in range(times.size):
        hist = times[:k]
        t = float(times[k])
        lo = ara_lag_offsets(hist, n, ara.m, ara.rho)
        uo = ara_last_component_offset(hist, ara.m, ara.rho)
        lower[k] = np.sum(hazard.rate(t - lo))
        upper[k] = (n - 1) * hazard.rate(t) + hazard.rate(t - uo)
    return lower, upper


def heterogeneous_upper(mh: MaskedHistory, hazards, model, t, grid_points=256) -> float:
    """Upper envelope for components with ordered heterogeneous hazards.

    ``hazards`` must be sorted weakest-first; the pointwise ordering is
    validated on a uniform grid over [0, t] (``grid_points`` points) before
    evaluation. All masked failures are attributed to the weakest component,
    which all share the same repair model.
    """
    if len(hazards) != mh.n:
        raise DomainError(f"need one hazard per component: {len(hazards)} != n={mh.n}")
    _require_improving(model)
    for h in hazards:
        _require_nondecreasing(h)
    t = _eval_time(mh, t)
    grid = np.linspace(0.0, t, grid_points)
    rates = np.vstack([np.atleast_1d(h.rate(grid)) for h in hazards])
    bad = rates[:-1] > rates[1:]
    if np.any(bad):
        first = float(grid[int(np.argmax(np.any(bad, axis=0)))])
        raise DomainError(f"initial intensities are not ordered at t={first}")
    rest = sum(float(h.rate(t)) for h in hazards[1:])
    return rest + float(model.conditional_intensity(hazards[0], mh.times, t))
