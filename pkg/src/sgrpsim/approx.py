"""Weighted combination of the masked-data intensity envelopes.

The model interpolates between the lower and upper envelope with a weight
``delta`` in [0, 1]: ``delta = 1`` follows the round-robin (most reliable)
attribution, ``delta = 0`` the single-component (least reliable) one. A
normalization switch decides whether the configured hazard is each
component's own rate (``COMPONENT``) or the whole-system rate split evenly so
that each component carries rate/n (``SYSTEM_SPLIT``, the convention the
stream samplers use). Under ``SYSTEM_SPLIT`` a constant hazard makes the
model intensity exactly the constant, for every history and delta.

``approx_intensity`` assembles the value from the envelope machinery;
``approx_intensity_ara`` evaluates the equivalent closed-form expression in
its three history regimes (no failures yet, at most one failure per lag,
beyond one full cycle) and exists as an independent arithmetic path for
cross-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bounds import sgrp_bounds
from .errors import ConfigError, DomainError
from .hazards import Hazard, hazard_from_config
from .repair import RepairModel, repair_from_config
from .superpose import MaskedHistory

__all__ = ["Normalization", "ApproxModel", "approx_intensity", "approx_intensity_ara"]


class Normalization(enum.Enum):
    """How the configured hazard maps onto one component."""

    COMPONENT = "component"
    SYSTEM_SPLIT = "system_split"


@dataclass(frozen=True)
class ApproxModel:
    """(n, delta, hazard, repair, normalization) defining the model intensity."""

    n: int
    delta: float
    hazard: Hazard
    repair: RepairModel
    normalization: Normalization = Normalization.SYSTEM_SPLIT

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"delta must lie in [0, 1], got {self.delta}")

    def component_hazard(self) -> Hazard:
        """The per-component hazard implied by the normalization."""
        if self.normalization is Normalization.SYSTEM_SPLIT:
            return self.hazard.scaled(1.0 / self.n)
        return self.hazard

    def to_config(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "normalization": self.normalization.value,
            "hazard": self.hazard.to_config(),
            "repair": self.repair.to_config(),
        }

    @classmethod
    def from_config(cls, cfg) -> "ApproxModel":
        if not isinstance(cfg, dict):
            raise ConfigError("approx model config must be an object")
        for key in ("n", "delta", "hazard", "repair"):
            if key not in cfg:
                raise ConfigError(f"approx model config needs key '{key}'")
        norm = cfg.get("normalization", Normalization.SYSTEM_SPLIT.value)
        try:
            normalization = Normalization(norm)
        except ValueError:
            raise ConfigError(f"unknown normalization {norm!r}") from None
        return cls(
            n=int(cfg["n"]),
            delta=float(cfg["delta"]),
            hazard=hazard_from_config(cfg["hazard"]),
            repair=repair_from_config(cfg["repair"]),
            normalization=normalization,
        )


def _check_history_n(am, mh):
    if isinstance(mh, MaskedHistory) and mh.n != am.n:
        raise DomainError(f"masked history has n={mh.n}, model has n={am.n}")


def approx_intensity(am: ApproxModel, mh: MaskedHistory, t) -> float:
    """delta * lower + (1 - delta) * upper at the left limit ``t``."""
    _check_history_n(am, mh)
    pair = sgrp_bounds(mh, am.repair, am.component_hazard(), t)
    return float(am.delta * pair.lower + (1.0 - am.delta) * pair.upper)


def approx_intensity_ara(am: ApproxModel, mh: MaskedHistory, t) -> float:
    """Closed-form regime evaluation of the same model.

    Regimes by masked count N: N = 0 (fresh system), 1 <= N <= n (single-term
    offsets), N > n (geometric offsets truncated at min(floor(N/n), m) terms
    for the round-robin lags). The single-component term always carries its
    full min(N, m)-term memory. Agrees with :func:`approx_intensity` to float
    round-off.
    """
    _check_history_n(am, mh)
    ara = am.repair.to_ara()
    if not 0.0 <= ara.rho <= 1.0:
        raise DomainError("approximation requires repair effectiveness in [0, 1]")
    hc = am.component_hazard()
    if not hc.is_nondecreasing:
        raise DomainError("approximation requires a nondecreasing hazard rate")
    t = float(t)
    times = mh.times
    big_n = int(times.size)
    if big_n and t < float(times[-1]):
        raise DomainError(f"t={t} precedes the last masked failure")
    n, d = am.n, am.delta
    m, rho = ara.m, ara.rho
    lam = hc.rate

    if big_n == 0:
        return float(n * lam(t))

    j_up = np.arange(min(m, big_n))
    off_up = float(np.sum(rho * np.power(1.0 - rho, j_up) * times[big_n - 1 - j_up]))

    if big_n <= n:
        head = ((n - big_n) * d + (n - 1) * (1.0 - d)) * lam(t)
        tail = d * float(np.sum(lam(t - rho * times)))
        return float(head + (1.0 - d) * lam(t - off_up) + tail)

    q = min(big_n // n - 1, m - 1)
    j = np.arange(q + 1)[:, None]
    idx = big_n - n * j - np.arange(n)[None, :]
    offs = np.sum(rho * np.power(1.0 - rho, j) * times[idx - 1], axis=0)
    head = (n - 1) * (1.0 - d) * lam(t)
    tail = d * float(np.sum(lam(t - offs)))
    return float(head + (1.0 - d) * lam(t - off_up) + tail)
