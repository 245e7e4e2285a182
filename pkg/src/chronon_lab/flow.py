"""Discrete thermal time-flow simulation, clock ratios, conditional time
dilation, and the single-observable simultaneity rule.

Each measured system ticks periodically with its own time quantum; the flow
is the merged, deterministic series of those quanta.  Tick times are exact
integer multiples n * dt rather than a running sum, so repeated quanta
march in step bit-for-bit over any horizon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .entropy import EntropyValue, cq_conditional, von_neumann
from .errors import NoActiveSystem, NonpositiveEntropy, NonpositiveVelocity
from .speed_limits import ThermalContext, TimeQuantum, time_quantum
from .states import ClassicalQuantumState


@dataclass(frozen=True)
class SystemSpec:
    """A repeatedly measured system: id plus its per-measurement entropy."""

    id: str
    entropy: EntropyValue

    def __post_init__(self):
        if self.entropy.nats < 0.0:
            raise NonpositiveEntropy(
                f"system {self.id!r}: per-measurement entropy must be >= 0"
            )


class Tick(NamedTuple):
    time: float
    quantum: float
    system_id: str


@dataclass(frozen=True)
class ThermalFlow:
    """Merged tick series, ordered by time with id tie-break.

    Times are non-decreasing overall (identical systems tick together) and
    strictly increasing per system.
    """

    ticks: tuple

    def __post_init__(self):
        ticks = tuple(self.ticks)
        for a, b in zip(ticks, ticks[1:]):
            if b.time < a.time:
                raise ValueError("tick times must be non-decreasing")
        object.__setattr__(self, "ticks", ticks)

    def for_system(self, system_id: str) -> list:
        return [t for t in self.ticks if t.system_id == system_id]


def simulate_flow(
    systems: list, ctx: ThermalContext, horizon: float
) -> ThermalFlow:
    """Merge the periodic ticks of every active system up to the horizon.

    Systems with zero entropy contribute no ticks; if none is active the
    flow is undefined and NoActiveSystem is raised.  Equal tick times are
    ordered lexicographically by system id.
    """
    if horizon <= 0.0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    active = [s for s in systems if s.entropy.nats > 0.0]
    if not active:
        raise NoActiveSystem("no system has positive entropy: nothing happens")
    ticks = []
    for spec in active:
        dt = time_quantum(spec.entropy, ctx).dt
        n_max = int(math.floor(horizon / dt))
        for n in range(1, n_max + 1):
            t = n * dt  # exact multiple, no accumulated drift
            if t <= horizon:
                ticks.append(Tick(time=t, quantum=dt, system_id=spec.id))
    ticks.sort(key=lambda t: (t.time, t.system_id))
    return ThermalFlow(ticks=tuple(ticks))


def clock_ratio(s1: SystemSpec, s2: SystemSpec) -> float:
    """Quantum ratio dt1/dt2 = S2/S1; the context constants cancel."""
    if s1.entropy.nats <= 0.0 or s2.entropy.nats <= 0.0:
        raise NonpositiveEntropy("clock ratio requires both entropies > 0")
    return s2.entropy.nats / s1.entropy.nats


def dilation_from_conditioning(
    cq: ClassicalQuantumState, ctx: ThermalContext
) -> tuple[TimeQuantum, TimeQuantum]:
    """Time quanta (conditional, marginal) for a classical-quantum state.

    Conditioning can only slow the flow: the branch-averaged entropy never
    exceeds the mixture entropy, so dt_conditional >= dt_marginal.  A zero
    conditional entropy (all branches pure) raises NonpositiveEntropy: that
    flow has stopped.
    """
    dt_conditional = time_quantum(cq_conditional(cq), ctx)
    dt_marginal = time_quantum(von_neumann(cq.mixture()), ctx)
    return dt_conditional, dt_marginal


def simultaneity_offset(theta1: float, theta2: float, v_max: float) -> float:
    """Start-time offset (theta2 - theta1)/v_max declaring two processes
    simultaneous; antisymmetric in the two state counts."""
    if not (math.isfinite(v_max) and v_max > 0.0):
        raise NonpositiveVelocity(f"v_max must be positive, got {v_max}")
    return (theta2 - theta1) / v_max
