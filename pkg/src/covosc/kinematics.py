"""Coordinates of the two-quark system and Lorentz boosts along z.

Only the longitudinal and time components are kept; transverse coordinates
are untouched by a z-boost and are dropped. Units are natural
(hbar = omega = c = 1). Point fields may be floats or numpy arrays of a
common shape, so every function here works pointwise on grids as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

SQRT2 = math.sqrt(2.0)

#: Coefficient of the relative coordinate, x = (x_a - x_b) * RELATIVE_COORD_SCALE.
#: Read as division by 2*sqrt(2); pairs with the sqrt(2) of the relative momentum.
RELATIVE_COORD_SCALE = 1.0 / (2.0 * SQRT2)

#: Coefficient of the relative momentum, q = (p_a - p_b) * RELATIVE_MOMENTUM_SCALE.
RELATIVE_MOMENTUM_SCALE = SQRT2


def _require_finite(**values) -> None:
    for name, value in values.items():
        if not np.all(np.isfinite(value)):
            raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Rapidity:
    """Boost parameter eta; the velocity is beta = tanh(eta)."""

    eta: float

    def __post_init__(self):
        _require_finite(eta=self.eta)

    @property
    def beta(self) -> float:
        return math.tanh(self.eta)

    @classmethod
    def from_beta(cls, beta: float) -> "Rapidity":
        return rapidity_from_beta(beta)


@dataclass(frozen=True)
class SpacetimePoint:
    z: float
    t: float

    def __post_init__(self):
        _require_finite(z=self.z, t=self.t)


@dataclass(frozen=True)
class LightconePoint:
    u: float
    v: float

    def __post_init__(self):
        _require_finite(u=self.u, v=self.v)


@dataclass(frozen=True)
class QuarkPairCoordinates:
    x_a: SpacetimePoint
    x_b: SpacetimePoint


@dataclass(frozen=True)
class QuarkPairMomenta:
    """Quark momenta as (p_z, p_0) pairs."""

    p_a: tuple[float, float]
    p_b: tuple[float, float]

    def __post_init__(self):
        _require_finite(p_a=self.p_a, p_b=self.p_b)


def _eta(r: Rapidity | float) -> float:
    return r.eta if isinstance(r, Rapidity) else float(r)


def to_lightcone(p: SpacetimePoint) -> LightconePoint:
    return LightconePoint((p.z + p.t) / SQRT2, (p.z - p.t) / SQRT2)


def from_lightcone(p: LightconePoint) -> SpacetimePoint:
    return SpacetimePoint((p.u + p.v) / SQRT2, (p.u - p.v) / SQRT2)


def boost_spacetime(p: SpacetimePoint, r: Rapidity | float) -> SpacetimePoint:
    """Boost along z: (z, t) -> (z cosh + t sinh, z sinh + t cosh)."""
    eta = _eta(r)
    ch, sh = math.cosh(eta), math.sinh(eta)
    return SpacetimePoint(p.z * ch + p.t * sh, p.z * sh + p.t * ch)


def boost_lightcone(p: LightconePoint, r: Rapidity | float) -> LightconePoint:
    """The same boost in light-cone form: u expands by e^eta, v contracts."""
    eta = _eta(r)
    return LightconePoint(math.exp(eta) * p.u, math.exp(-eta) * p.v)


def hadron_relative_coordinates(
    q: QuarkPairCoordinates,
) -> tuple[SpacetimePoint, SpacetimePoint]:
    """Return the hadron position X and the quark separation x."""
    a, b = q.x_a, q.x_b
    X = SpacetimePoint((a.z + b.z) / 2, (a.t + b.t) / 2)
    x = SpacetimePoint(
        (a.z - b.z) * RELATIVE_COORD_SCALE, (a.t - b.t) * RELATIVE_COORD_SCALE
    )
    return X, x


def hadron_relative_momenta(
    m: QuarkPairMomenta,
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Return the total momentum P = p_a + p_b and q = sqrt(2) (p_a - p_b)."""
    (az, a0), (bz, b0) = m.p_a, m.p_b
    P = (az + bz, a0 + b0)
    q = ((az - bz) * RELATIVE_MOMENTUM_SCALE, (a0 - b0) * RELATIVE_MOMENTUM_SCALE)
    return P, q


def rapidity_from_beta(beta: float) -> Rapidity:
    if not math.isfinite(beta) or abs(beta) >= 1.0:
        raise DomainError(f"superluminal or light-speed velocity: |beta| = {abs(beta)} >= 1")
    return Rapidity(math.atanh(beta))


def beta_from_rapidity(r: Rapidity | float) -> float:
    return math.tanh(_eta(r))
