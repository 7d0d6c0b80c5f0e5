"""Momentum-space squeeze and the longitudinal parton density.

The momentum-energy wave function of the oscillator has the same Gaussian form
as the space-time one and squeezes the same way, so a fast hadron's momentum
distribution spreads along the q_u light-cone axis. Its q_u marginal is the
theoretical parton density curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from .kinematics import SQRT2, Rapidity, _eta, _require_finite
from .oscillator import (
    DEFAULT_N_POINTS,
    DEFAULT_WIDTH_FACTOR,
    TAIL_MASS_LIMIT,
    GridSpec,
    boosted_ground_state,
)

NORM_TOLERANCE = 1e-8
_QV_POINTS = 513


@dataclass(frozen=True)
class MomentumPoint:
    q_z: float
    q_0: float

    def __post_init__(self):
        _require_finite(q_z=self.q_z, q_0=self.q_0)


@dataclass(frozen=True)
class PartonDensity:
    axis: np.ndarray  # light-cone momentum q_u
    density: np.ndarray
    eta: float

    @property
    def weights(self) -> np.ndarray:
        h = self.axis[1] - self.axis[0]
        w = np.full(self.axis.size, h)
        w[0] = w[-1] = h / 2
        return w

    def norm(self) -> float:
        return float(self.weights @ self.density)

    def mean(self) -> float:
        return float(self.weights @ (self.axis * self.density)) / self.norm()

    def variance(self) -> float:
        mu = self.mean()
        return float(self.weights @ ((self.axis - mu) ** 2 * self.density)) / self.norm()

    def scaled_axis(self) -> np.ndarray:
        """q_u / (e^eta sqrt(2)); the boost-independent variable."""
        return self.axis / (math.exp(self.eta) * SQRT2)


def boosted_momentum_state(q_z, q_0, r: Rapidity | float):
    """pi^(-1/2) exp(-(e^(-2 eta) q_u^2 + e^(2 eta) q_v^2)/2).

    Same function as the boosted space-time ground state, with the same squeeze
    direction.
    """
    return boosted_ground_state(q_z, q_0, r)


def _marginal_tail(eta: float, half_width: float) -> float:
    # q_u marginal of |phi_eta|^2 is Gaussian with variance e^(2 eta)/2
    return math.erfc(half_width / math.exp(eta))


def longitudinal_parton_density(r: Rapidity | float, axis: GridSpec | None = None,
                                n_qv: int = _QV_POINTS) -> PartonDensity:
    """Marginal of |phi_eta(q_u, q_v)|^2 over q_v, tabulated on a q_u grid."""
    eta = _eta(r)
    if axis is None:
        # the marginal has width e^eta, so the default spacing stays fixed relative to it
        axis = GridSpec(DEFAULT_WIDTH_FACTOR * math.exp(eta), DEFAULT_N_POINTS)
    tail = _marginal_tail(eta, axis.half_width)
    if tail > TAIL_MASS_LIMIT:
        raise AccuracyError(
            f"parton density tail mass {tail:.3g} exceeds {TAIL_MASS_LIMIT:g}; "
            f"axis must cover about +-6 e^|eta| = {6 * math.exp(abs(eta)):.4g}"
        )
    # q_v is the contracted direction for eta > 0: amplitude width e^-eta
    qv_grid = GridSpec(6.0 * math.exp(-eta), n_qv)
    qu = axis.points()
    qv = qv_grid.points()
    QU, QV = np.meshgrid(qu, qv, indexing="ij")
    phi = boosted_momentum_state((QU + QV) / SQRT2, (QU - QV) / SQRT2, eta)
    density = (phi * phi) @ qv_grid.weights()
    out = PartonDensity(qu, density, eta)
    norm = out.norm()
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise AccuracyError(
            f"parton density norm {norm!r} deviates from 1 by more than {NORM_TOLERANCE:g}; "
            f"increase n_points (spacing {axis.spacing:.3g})"
        )
    return PartonDensity(qu, density / norm, eta)


def lightcone_concentration(r: Rapidity | float, cone_half_angle: float = math.pi / 8) -> float:
    """Probability of |psi_eta|^2 inside the double cone |v| <= |u| tan(angle).

    In polar coordinates of the (u, v) plane the radial integral of the
    Gaussian is exact, leaving (2/pi) * integral over the cone of
    d theta / (e^(-2 eta) cos^2 + e^(2 eta) sin^2), which integrates to
    (2/pi) atan(e^(2 eta) tan(angle)).
    """
    eta = _eta(r)
    if not 0 < cone_half_angle < math.pi / 4:
        raise DomainError(f"cone half-angle must lie in (0, pi/4), got {cone_half_angle}")
    return 2.0 / math.pi * math.atan(math.exp(2 * eta) * math.tan(cone_half_angle))
