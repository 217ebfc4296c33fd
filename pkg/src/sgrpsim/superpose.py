"""Exact simulation of a series system of identical repairable components.

The system fails whenever any component fails; the failed component is
repaired in negligible time and operation resumes. Simulation is event-driven
competing risks: each component holds one candidate next-failure time, the
smallest candidate is committed, and only that component is resampled. This
is exact because components fail independently, and costs O(log n) per event
through a heap. Simultaneous float candidates (probability zero) resolve to
the lowest component index.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .repair import check_history, next_failure_time
from .rng import stream_rng

__all__ = ["FullHistory", "MaskedHistory", "simulate_sgrp", "mask",
           "true_system_intensity", "true_intensity_at_events"]


@dataclass(frozen=True)
class MaskedHistory:
    """System failure times with the failing component's identity removed."""

    times: np.ndarray
    n: int
    t_obs: float

    def __post_init__(self):
        object.__setattr__(self, "times", check_history(self.times))
        if self.n < 1:
            raise DomainError("component count n must be >= 1")
        last = float(self.times[-1]) if self.times.size else 0.0
        if self.t_obs < last:
            raise DomainError("observation horizon precedes the last failure")
        object.__setattr__(self, "t_obs", float(self.t_obs))

    def __len__(self):
        return int(self.times.size)


@dataclass(frozen=True)
class FullHistory:
    """Labeled per-component failure times plus the merged system view.

    ``labels`` are 1-based component indices aligned with ``times``.
    """

    n: int
    per_component: tuple
    times: np.ndarray
    labels: np.ndarray
    horizon: float

    def __len__(self):
        return int(self.times.size)

    def counts(self):
        """Events per component, in component order."""
        return np.array([arr.size for arr in self.per_component], dtype=int)

    def check_consistent(self) -> bool:
        """True when the merged view is exactly the labeled union (test hook)."""
        rebuilt = sorted(
            (float(t), c + 1)
            for c, arr in enumerate(self.per_component)
            for t in arr
        )
        times = np.array([t for t, _ in rebuilt])
        labels = np.array([c for _, c in rebuilt], dtype=int)
        return (np.array_equal(times, self.times)
                and np.array_equal(labels, self.labels)
                and len(self.per_component) == self.n)


def simulate_sgrp(n, model, hazard, *, n_events=None, horizon=None,
                  seed=None, rng=None) -> FullHistory:
    """Simulate the superposed failure process of ``n`` identical components.

    Exactly one stopping rule is required: a total event count or a time
    horizon. Output is reproducible given ``(seed, n, model, hazard, stop)``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if (n_events is None) == (horizon is None):
        raise ValueError("provide exactly one of n_events or horizon")
    if n_events is not None and n_events < 1:
        raise DomainError("n_events must be >= 1")
    if horizon is not None and not horizon > 0.0:
        raise DomainError("horizon must be positive")
    if rng is None:
        if seed is None:
            raise ValueError("provide seed or rng")
        rng = stream_rng(seed)

    comp_times = [[] for _ in range(n)]
    heap = [(next_failure_time(model, hazard, comp_times[c], float(rng.exponential())), c)
            for c in range(n)]
    heapq.heapify(heap)

    sys_times, sys_labels = [], []
    while True:
        t, c = heap[0]
        if horizon is not None and t > horizon:
            break
        heapq.heappop(heap)
        comp_times[c].append(t)
        sys_times.append(t)
        sys_labels.append(c + 1)
        if n_events is not None and len(sys_times) >= n_events:
            break
        nxt = next_failure_time(model, hazard, comp_times[c], float(rng.exponential()))
        heapq.heappush(heap, (nxt, c))

    end = horizon if horizon is not None else (sys_times[-1] if sys_times else 0.0)
    return FullHistory(
        n=n,
        per_component=tuple(np.asarray(ts, dtype=float) for ts in comp_times),
        times=np.asarray(sys_times, dtype=float),
        labels=np.asarray(sys_labels, dtype=int),
        horizon=float(end),
    )


def mask(full: FullHistory) -> MaskedHistory:
    """Drop the component labels, keeping the merged times and ``n``."""
    return MaskedHistory(times=full.times.copy(), n=full.n, t_obs=full.horizon)


def true_system_intensity(full, model, hazard, t) -> float:
    """System intensity at ``t`` given each component's failures strictly before ``t``.

    The left-limit convention: an event exactly at ``t`` is excluded from the
    conditioning history.
    """
    t = float(t)
    if t < 0.0:
        raise DomainError("t must be nonnegative")
    if t > full.horizon:
        raise DomainError(f"t={t} is beyond the simulated horizon {full.horizon}")
    total = 0.0
    for comp in full.per_component:
        k = int(np.searchsorted(comp, t, side="left"))
        offset = model.effective_age_offset(comp[:k])
        total += hazard.rate(t - offset)
    return float(total)


def true_intensity_at_events(full, model, hazard) -> np.ndarray:
    """Left-limit system intensity at every system event time, in order.

    Equivalent to calling :func:`true_system_intensity` at each event, but it
    walks the trajectory once, updating only the failing component's offset.
    """
    offsets = np.zeros(full.n)
    comp_hist = [[] for _ in range(full.n)]
    out = np.empty(full.times.size)
    for k, (t, label) in enumerate(zip(full.times, full.labels)):
        t = float(t)
        out[k] = float(np.sum(hazard.rate(t - offsets)))
        c = int(label) - 1
        comp_hist[c].append(t)
        offsets[c] = model.effective_age_offset(comp_hist[c])
    return out
