"""Oscillator wave functions of the quark separation and their Lorentz squeeze.

The covariant ground state is a Gaussian in (z, t). A boost squeezes it along
the light-cone axes without changing its normalization. Excited states are
available only in one variable (``hermite_state``); there are no excitations
along the time direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from .kinematics import SQRT2, Rapidity, _eta

MAX_HERMITE_ORDER = 64
TAIL_MASS_LIMIT = 1e-10
NORM_TOLERANCE = 1e-8

# Default grid policy: L = 6 e^|eta|, at least 512 points, and a spacing fine
# enough to resolve the contracted light-cone axis (width e^-|eta|).
DEFAULT_WIDTH_FACTOR = 6.0
DEFAULT_N_POINTS = 512
_MAX_SPACING_PER_WIDTH = 0.7


@dataclass(frozen=True)
class GridSpec:
    """Uniform symmetric grid over [-half_width, half_width]."""

    half_width: float
    n_points: int

    def __post_init__(self):
        if not (math.isfinite(self.half_width) and self.half_width > 0):
            raise DomainError(f"half_width must be positive and finite, got {self.half_width}")
        if int(self.n_points) != self.n_points or self.n_points < 8:
            raise DomainError(f"n_points must be an integer >= 8, got {self.n_points}")

    @classmethod
    def for_rapidity(cls, r: Rapidity | float, n_points: int | None = None,
                     half_width: float | None = None) -> "GridSpec":
        eta = abs(_eta(r))
        if half_width is None:
            half_width = DEFAULT_WIDTH_FACTOR * math.exp(eta)
        if n_points is None:
            needed = 1 + math.ceil(2 * half_width / (_MAX_SPACING_PER_WIDTH * math.exp(-eta)))
            n_points = max(DEFAULT_N_POINTS, needed)
        return cls(float(half_width), int(n_points))

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.n_points)

    def weights(self) -> np.ndarray:
        """Trapezoid weights."""
        w = np.full(self.n_points, self.spacing)
        w[0] = w[-1] = self.spacing / 2
        return w


@dataclass(frozen=True)
class SampledField2D:
    """Real samples f(z_i, t_j) on a tensor grid; ``values[i, j]``."""

    grid_z: GridSpec
    grid_t: GridSpec
    values: np.ndarray

    def __post_init__(self):
        shape = (self.grid_z.n_points, self.grid_t.n_points)
        if self.values.shape != shape:
            raise ValueError(f"values shape {self.values.shape} does not match grids {shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("sampled values must be finite")

    def integrate(self, weight: np.ndarray | None = None) -> float:
        """Trapezoid integral of values (times an optional pointwise weight)."""
        f = self.values if weight is None else self.values * weight
        return float(self.grid_z.weights() @ f @ self.grid_t.weights())

    def lightcone_second_moments(self) -> tuple[float, float]:
        """Return (<u^2>, <v^2>) treating values as a probability density."""
        z, t = np.meshgrid(self.grid_z.points(), self.grid_t.points(), indexing="ij")
        norm = self.integrate()
        u2 = self.integrate(((z + t) / SQRT2) ** 2) / norm
        v2 = self.integrate(((z - t) / SQRT2) ** 2) / norm
        return u2, v2

    def to_rows(self):
        z, t = self.grid_z.points(), self.grid_t.points()
        for i, zi in enumerate(z):
            for j, tj in enumerate(t):
                yield float(zi), float(tj), float(self.values[i, j])


@dataclass(frozen=True)
class EllipseGeometry:
    major_axis: float
    minor_axis: float
    orientation: str  # light-cone axis carrying the major axis: "u" or "v"

    @property
    def area_ratio(self) -> float:
        return self.major_axis * self.minor_axis


def hermite_states(n_max: int, xi) -> np.ndarray:
    """Normalized Hermite functions chi_0..chi_n_max at ``xi``.

    Uses the normalized three-term recurrence

        chi_{k+1} = sqrt(2/(k+1)) xi chi_k - sqrt(k/(k+1)) chi_{k-1},

    which never forms H_n or n! explicitly. Returns shape (n_max + 1, *xi.shape).
    """
    if int(n_max) != n_max or not 0 <= n_max <= MAX_HERMITE_ORDER:
        raise DomainError(f"Hermite order must be an integer in [0, {MAX_HERMITE_ORDER}], got {n_max}")
    xi = np.asarray(xi, dtype=float)
    out = np.empty((n_max + 1,) + xi.shape)
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * xi * xi)
    if n_max >= 1:
        out[1] = SQRT2 * xi * out[0]
    for k in range(1, n_max):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * xi * out[k] - math.sqrt(k / (k + 1)) * out[k - 1]
    return out


def hermite_state(n: int, xi):
    """chi_n(xi) = (2^n n! sqrt(pi))^(-1/2) H_n(xi) exp(-xi^2/2)."""
    values = hermite_states(n, xi)[n]
    return float(values) if values.ndim == 0 else values


def ground_state(z, t):
    """Rest-frame covariant ground state pi^(-1/2) exp(-(z^2 + t^2)/2)."""
    z, t = np.asarray(z, dtype=float), np.asarray(t, dtype=float)
    out = np.exp(-0.5 * (z * z + t * t)) / math.sqrt(math.pi)
    return float(out) if out.ndim == 0 else out


def boosted_ground_state(z, t, r: Rapidity | float):
    """Ground state seen from a frame boosted by eta.

    In light-cone variables the Gaussian becomes
    pi^(-1/2) exp(-(e^(-2 eta) u^2 + e^(2 eta) v^2)/2).
    """
    eta = _eta(r)
    z, t = np.asarray(z, dtype=float), np.asarray(t, dtype=float)
    u = (z + t) / SQRT2
    v = (z - t) / SQRT2
    out = np.exp(-0.5 * (math.exp(-2 * eta) * u * u + math.exp(2 * eta) * v * v)) / math.sqrt(math.pi)
    return float(out) if out.ndim == 0 else out


def marginal_tail_mass(r: Rapidity | float, half_width: float) -> float:
    """Probability of |psi_eta|^2 with |z| > half_width.

    The z-marginal of the squeezed Gaussian has variance cosh(2 eta)/2, and
    the t-marginal is identical, so twice this bounds the mass outside a square.
    """
    var = math.cosh(2 * _eta(r)) / 2
    return math.erfc(half_width / math.sqrt(2 * var))


def check_tail(r: Rapidity | float, *grids: GridSpec) -> None:
    mass = sum(marginal_tail_mass(r, g.half_width) for g in grids)
    if mass > TAIL_MASS_LIMIT:
        raise AccuracyError(
            f"tail mass {mass:.3g} outside the grid exceeds {TAIL_MASS_LIMIT:g} "
            f"at eta={_eta(r)}; increase half_width"
        )


def sample_probability_grid(r: Rapidity | float, gz: GridSpec, gt: GridSpec | None = None,
                            tol: float = NORM_TOLERANCE) -> SampledField2D:
    """Sample |psi_eta(z_i, t_j)|^2 and check its quadrature norm."""
    gt = gz if gt is None else gt
    check_tail(r, gz, gt)
    z, t = np.meshgrid(gz.points(), gt.points(), indexing="ij")
    field = SampledField2D(gz, gt, boosted_ground_state(z, t, r) ** 2)
    norm = field.integrate()
    if abs(norm - 1.0) > tol:
        raise AccuracyError(
            f"quadrature norm {norm!r} deviates from 1 by more than {tol:g} at eta={_eta(r)}; "
            f"increase n_points (spacing {gz.spacing:.3g}) or half_width"
        )
    return field


def ellipse_axes(r: Rapidity | float) -> EllipseGeometry:
    """Axes of the squeezed level-set ellipse; the area never changes."""
    eta = _eta(r)
    major = math.exp(abs(eta))
    return EllipseGeometry(major, 1.0 / major, "u" if eta >= 0 else "v")
