"""Gaussian position-measurement analysis: partition entropy, its scaled
product, their numerical maxima, and the derived velocity bounds.

A quasi-classical inside/outside-[0, R] position measurement on a Gaussian
packet carries binary partition entropy G(x) = h2(erf(x)) in nats, with
x = R/sigma the dimensionless interval radius.  G peaks at ln 2 where
erf(x) = 1/2; the product H(x) = G(x) * x peaks near 0.4579, which fixes
the classical-velocity bound constant 4 * 0.4579 = 1.832.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import EntropyValue
from .errors import NegativeArgument, NonpositiveResolution
from .speed_limits import ThermalContext

SEARCH_UPPER = 6.0  # erf saturates to 1 within 1e-12 well before x = 6
SEARCH_GRID = 1024
BRACKET_TOL = 1e-10
_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GaussianPacket:
    """Free Gaussian packet: width parameter sigma_k0 > 0, mean wave number k0."""

    sigma_k0: float
    k0: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma_k0) and self.sigma_k0 > 0.0):
            raise NonpositiveResolution(
                f"sigma_k0 must be positive and finite, got {self.sigma_k0}"
            )


@dataclass(frozen=True)
class PartitionEntropy:
    """Partition entropy at dimensionless radius x; bounded by ln 2."""

    x: float
    entropy: EntropyValue


def erf(x: float) -> float:
    """Error function 2/sqrt(pi) * integral_0^x exp(-t^2) dt."""
    return math.erf(x)


def _binary_entropy(p: float) -> float:
    q = 1.0 - p
    s = 0.0
    if p > 0.0:
        s -= p * math.log(p)
    if q > 0.0:
        s -= q * math.log(q)
    return s


def partition_entropy_G(x: float) -> PartitionEntropy:
    """Binary entropy (nats) of the in-interval weight erf(x)."""
    if x < 0.0:
        raise NegativeArgument(f"x must be >= 0, got {x}")
    return PartitionEntropy(x=x, entropy=EntropyValue(_binary_entropy(erf(x))))


def scaled_function_H(x: float) -> float:
    """Product G(x) * x driving the classical-velocity bound."""
    if x < 0.0:
        raise NegativeArgument(f"x must be >= 0, got {x}")
    return _binary_entropy(erf(x)) * x


def _golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 > f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
    x_star = 0.5 * (lo + hi)
    return x_star, f(x_star)


def _grid_seeded_max(f) -> tuple[float, float]:
    """Coarse grid over [0, SEARCH_UPPER], then golden-section refinement."""
    step = SEARCH_UPPER / (SEARCH_GRID - 1)
    best_i, best_v = 0, f(0.0)
    for i in range(1, SEARCH_GRID):
        v = f(i * step)
        if v > best_v:
            best_i, best_v = i, v
    lo = max(0.0, (best_i - 1) * step)
    hi = min(SEARCH_UPPER, (best_i + 1) * step)
    return _golden_max(f, lo, hi, BRACKET_TOL)


def max_G() -> tuple[float, float]:
    """Location and value of the partition-entropy maximum (ln 2)."""
    return _grid_seeded_max(lambda x: partition_entropy_G(x).entropy.nats)


def max_H() -> tuple[float, float]:
    """Location and value of the maximum of G(x) * x (about 0.4579)."""
    return _grid_seeded_max(scaled_function_H)


def bound_process_velocity(ctx: ThermalContext) -> float:
    """Repeated-position-measurement process velocity cap 4 ln2 kT/h."""
    return 4.0 * math.log(2.0) * ctx.k * ctx.T / ctx.h


def bound_classical_velocity(packet: GaussianPacket, ctx: ThermalContext) -> float:
    """Classical average-velocity cap 4 max(H) kT sigma_k0 / h (~1.832 kT sigma/h).

    Independent of the packet's mean wave number k0.
    """
    _, h_max = max_H()
    return 4.0 * h_max * ctx.k * ctx.T * packet.sigma_k0 / ctx.h


def bound_resolution_velocity(sigma_x0: float, ctx: ThermalContext) -> float:
    """Velocity cap kT/(h sigma_x0) for spatial resolution sigma_x0.

    Printed without the 1.832 prefactor that the uncertainty substitution
    sigma_x0 * sigma_k0 = 1 would carry over from the classical bound; the
    two bounds therefore differ by that factor.
    """
    if not (math.isfinite(sigma_x0) and sigma_x0 > 0.0):
        raise NonpositiveResolution(f"sigma_x0 must be positive, got {sigma_x0}")
    return ctx.k * ctx.T / (ctx.h * sigma_x0)
