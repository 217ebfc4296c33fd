"""Repair-effectiveness models for a single repairable component.

Every variant reduces a failure history to an effective-age offset ``o`` such
that the conditional intensity is ``rate(t - o)`` until the next failure.
Because the offset is constant between failures, sampling the next failure is
an exact shift-and-invert of the cumulative hazard, with no root finding.

``ARA(m, rho)`` subtracts a geometrically weighted sum of the last ``m``
failure times from the age; ``rho = 1`` is replacement, ``rho = 0`` leaves
the age untouched. ``Kijima1(a)`` accumulates virtual age
``V_k = V_{k-1} + a * X_k`` over the inter-failure increments ``X_k``, which
is the same one-parameter family expressed through increments
(``Kijima1(a)`` matches ``ARA(1, 1 - a)``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError

__all__ = ["RepairModel", "ARA", "Kijima1", "Perfect", "Minimal",
           "check_history", "next_failure_time", "repair_from_config"]


def check_history(times) -> np.ndarray:
    """Validate a failure history: nonnegative, strictly increasing."""
    arr = np.asarray(times, dtype=float)
    if arr.ndim != 1:
        raise DomainError("failure history must be one-dimensional")
    if arr.size:
        if arr[0] < 0.0:
            raise DomainError(f"failure times must be nonnegative, got {arr[0]}")
        if arr.size > 1 and float(np.min(np.diff(arr))) <= 0.0:
            raise DomainError("failure times must be strictly increasing")
    return arr


def next_failure_time(model, hazard, times, exponential):
    """Inverse-transform kernel for the next failure after history ``times``.

    Solves for the unique t past the last failure whose integrated
    conditional intensity equals ``exponential``. Trusts the history; public
    entry points validate.
    """
    offset = model.effective_age_offset(times)
    last = float(times[-1]) if len(times) else 0.0
    target = hazard.cumulative(last - offset) + exponential
    t = offset + hazard.inverse_cumulative(target)
    if t <= last:  # float underflow guard for tiny exponentials
        t = float(np.nextafter(last, np.inf))
    return float(t)


class RepairModel:
    """Shared intensity and sampling logic; subclasses supply the age offset."""

    def effective_age_offset(self, times) -> float:
        """Offset o with post-repair intensity rate(t - o).

        Assumes a valid (strictly increasing) history; returns 0 for an empty
        one. Accepts a list or array.
        """
        raise NotImplementedError

    @property
    def is_improving(self) -> bool:
        """True when every repair weakly rejuvenates the component."""
        raise NotImplementedError

    def to_ara(self) -> "ARA":
        """The equivalent (memory, effectiveness) parameterization."""
        raise NotImplementedError

    def to_config(self) -> dict:
        raise NotImplementedError

    def conditional_intensity(self, hazard, times, t):
        """Failure intensity at ``t`` given the component's own history."""
        times = check_history(times)
        last = float(times[-1]) if times.size else 0.0
        t_arr = np.asarray(t, dtype=float)
        if t_arr.size and float(t_arr.min()) < last:
            raise DomainError(f"t must not precede the last failure at {last}")
        offset = self.effective_age_offset(times)
        out = hazard.rate(t_arr - offset)
        return out if t_arr.ndim else float(out)

    def sample_next_failure(self, hazard, times, rng=None, *, exponential=None):
        """Draw the next failure time; ``exponential`` forces the Exp(1) variate."""
        times = check_history(times)
        if exponential is None:
            if rng is None:
                raise ValueError("either rng or a forced exponential is required")
            exponential = float(rng.exponential())
        if not exponential > 0.0:
            raise DomainError(f"exponential variate must be positive, got {exponential}")
        return next_failure_time(self, hazard, times, float(exponential))


@dataclass(frozen=True)
class ARA(RepairModel):
    """Age reduction of memory order ``m`` and effectiveness ``rho``.

    After the N-th failure the offset is
    ``rho * sum_{j=0..min(m,N)-1} (1-rho)^j * T[N-j]``. ``rho < 0`` models a
    harmful repair: it is constructible but flagged not improving, and the
    bound/approximation operations refuse it.
    """

    m: int
    rho: float

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"memory order m must be a positive integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))
        if not self.rho <= 1.0:
            raise DomainError(f"effectiveness rho must be <= 1, got {self.rho}")

    @property
    def is_improving(self):
        return 0.0 <= self.rho <= 1.0

    def to_ara(self):
        return self

    def effective_age_offset(self, times):
        n_fail = len(times)
        if n_fail == 0 or self.rho == 0.0:
            return 0.0
        acc = 0.0
        w = self.rho
        for j in range(min(self.m, n_fail)):
            acc += w * float(times[n_fail - 1 - j])
            w *= 1.0 - self.rho
        return acc

    def to_config(self):
        return {"model": "ara", "m": self.m, "rho": self.rho}


@dataclass(frozen=True)
class Perfect(RepairModel):
    """Replacement: the clock restarts at the latest failure."""

    @property
    def is_improving(self):
        return True

    def to_ara(self):
        return ARA(1, 1.0)

    def effective_age_offset(self, times):
        return float(times[-1]) if len(times) else 0.0

    def to_config(self):
        return {"model": "perfect"}


@dataclass(frozen=True)
class Minimal(RepairModel):
    """As-bad-as-old: the initial rate continues through failures."""

    @property
    def is_improving(self):
        return True

    def to_ara(self):
        return ARA(1, 0.0)

    def effective_age_offset(self, times):
        return 0.0

    def to_config(self):
        return {"model": "minimal"}


@dataclass(frozen=True)
class Kijima1(RepairModel):
    """Virtual-age accumulation ``V_k = V_{k-1} + a * X_k`` (type-I rule)."""

    a: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and self.a >= 0.0):
            raise DomainError(f"age accumulation factor a must be >= 0, got {self.a}")

    @property
    def is_improving(self):
        return 0.0 <= self.a <= 1.0

    def to_ara(self):
        return ARA(1, 1.0 - self.a)

    def effective_age_offset(self, times):
        # virtual age by the increment recursion; offset = T_N - V_N
        if len(times) == 0:
            return 0.0
        v = 0.0
        prev = 0.0
        for t in times:
            t = float(t)
            v += self.a * (t - prev)
            prev = t
        return prev - v

    def to_config(self):
        return {"model": "kijima1", "a": self.a}


def repair_from_config(cfg) -> RepairModel:
    """Build a repair model from ``{"model": ..., ...}``."""
    if not isinstance(cfg, dict) or "model" not in cfg:
        raise ConfigError("repair config must be an object with a 'model' key")
    kind = cfg["model"]
    if kind == "ara":
        try:
            return ARA(int(cfg["m"]), float(cfg["rho"]))
        except KeyError as missing:
            raise ConfigError(f"ara repair needs key {missing}") from None
    if kind == "kijima1":
        try:
            return Kijima1(float(cfg["a"]))
        except KeyError as missing:
            raise ConfigError(f"kijima1 repair needs key {missing}") from None
    if kind == "perfect":
        return Perfect()
    if kind == "minimal":
        return Minimal()
    raise ConfigError(f"unknown repair model {kind!r}")
