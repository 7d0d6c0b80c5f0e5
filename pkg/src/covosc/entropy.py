"""Entropy from the unobserved time separation.

Integrating the time variable out of the squeezed ground state leaves a mixed
state in z. Its spectrum is geometric, p_n = (1 - lam) lam^n with
lam = tanh(eta)^2, which is the population of a thermal oscillator with
tanh(eta)^2 = exp(-1/T) (units hbar*omega/k = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError, NumericalError
from .kinematics import Rapidity, _eta
from .oscillator import NORM_TOLERANCE, GridSpec, boosted_ground_state, check_tail

NEGATIVE_EIGENVALUE_LIMIT = 1e-10
ENTROPY_CUTOFF = 1e-15


@dataclass(frozen=True)
class DensityKernel:
    """Reduced density matrix rho(z_i, z_j) with trapezoid weights w_i."""

    grid: GridSpec
    matrix: np.ndarray
    weights: np.ndarray

    @property
    def trace(self) -> float:
        return float(np.sum(self.weights * np.diag(self.matrix)))


@dataclass(frozen=True)
class ProbabilitySpectrum:
    probs: np.ndarray  # descending

    def __len__(self):
        return len(self.probs)


@dataclass(frozen=True)
class ThermalPoint:
    """Temperature in units of hbar*omega/k; T = 0 is the ground-state limit."""

    temperature: float

    def __post_init__(self):
        if not (self.temperature >= 0 and math.isfinite(self.temperature)):
            raise DomainError(f"temperature must be finite and non-negative, got {self.temperature}")

    @property
    def x(self) -> float:
        """hbar*omega/kT."""
        return math.inf if self.temperature == 0 else 1.0 / self.temperature


def reduce_over_time(r: Rapidity | float, grid: GridSpec,
                     t_grid: GridSpec | None = None) -> DensityKernel:
    """rho(z, z') = integral of psi_eta(z, t) psi_eta(z', t) dt by trapezoid in t."""
    t_grid = grid if t_grid is None else t_grid
    check_tail(r, grid, t_grid)
    z, t = np.meshgrid(grid.points(), t_grid.points(), indexing="ij")
    psi = boosted_ground_state(z, t, r)
    wt = t_grid.weights()
    # einsum without BLAS keeps the summation order fixed
    rho = np.einsum("ik,jk,k->ij", psi, psi, wt, optimize=False)
    rho = 0.5 * (rho + rho.T)
    kernel = DensityKernel(grid, rho, grid.weights())
    if abs(kernel.trace - 1.0) > NORM_TOLERANCE:
        raise AccuracyError(
            f"reduced kernel trace {kernel.trace!r} deviates from 1 by more than "
            f"{NORM_TOLERANCE:g} at eta={_eta(r)}; increase n_points or half_width"
        )
    return kernel


def density_spectrum(k: DensityKernel) -> ProbabilitySpectrum:
    """Eigenvalues of sqrt(w_i) rho_ij sqrt(w_j), cleaned and renormalized."""
    sw = np.sqrt(k.weights)
    m = sw[:, None] * k.matrix * sw[None, :]
    try:
        ev = np.linalg.eigvalsh(m)[::-1]
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from exc
    if not np.all(np.isfinite(ev)):
        raise NumericalError("eigensolver returned non-finite eigenvalues")
    if ev[-1] < -NEGATIVE_EIGENVALUE_LIMIT:
        raise NumericalError(
            f"eigenvalue {ev[-1]:.3g} below -{NEGATIVE_EIGENVALUE_LIMIT:g}; the grid is inadequate"
        )
    p = np.clip(ev, 0.0, 1.0)
    return ProbabilitySpectrum(p / p.sum())


def von_neumann_entropy(s: ProbabilitySpectrum | np.ndarray) -> float:
    """-sum p ln p, skipping p below 1e-15."""
    p = np.asarray(s.probs if isinstance(s, ProbabilitySpectrum) else s, dtype=float)
    p = p[p >= ENTROPY_CUTOFF]
    return float(-np.sum(p * np.log(p)))


def geometric_spectrum(r: Rapidity | float, n_terms: int) -> np.ndarray:
    """(1 - lam) lam^n for n < n_terms, lam = tanh(eta)^2."""
    lam = math.tanh(_eta(r)) ** 2
    return (1.0 - lam) * lam ** np.arange(n_terms)


def _log_tanh_abs(eta: float) -> float:
    a = abs(eta)
    if a < 1.0:
        return math.log(math.tanh(a))
    # ln tanh a = log1p(-2 / (e^{2a} + 1)) keeps precision as tanh -> 1
    return math.log1p(-2.0 / (math.exp(2 * a) + 1.0))


def _log_cosh(eta: float) -> float:
    a = abs(eta)
    return a + math.log1p(math.exp(-2 * a)) - math.log(2.0)


def entropy_closed_form(r: Rapidity | float) -> float:
    """S = 2 (cosh^2 ln cosh - sinh^2 ln|sinh|).

    Evaluated as 2 (ln cosh - sinh^2 ln tanh|eta|), the same expression after
    ln sinh = ln tanh + ln cosh, which avoids cancellation at large eta.
    S(0) = 0 is the limit value.
    """
    eta = _eta(r)
    if eta == 0.0:
        return 0.0
    return 2.0 * (_log_cosh(eta) - math.sinh(eta) ** 2 * _log_tanh_abs(eta))


def temperature_from_rapidity(r: Rapidity | float) -> ThermalPoint:
    """Solve tanh(eta)^2 = exp(-1/T) for T; eta = 0 gives T = 0."""
    eta = _eta(r)
    if eta == 0.0:
        return ThermalPoint(0.0)
    return ThermalPoint(-1.0 / (2.0 * _log_tanh_abs(eta)))


def rapidity_from_temperature(tp: ThermalPoint | float) -> Rapidity:
    """Non-negative eta with tanh(eta) = exp(-1/(2T))."""
    temperature = tp.temperature if isinstance(tp, ThermalPoint) else float(tp)
    if not (temperature > 0 and math.isfinite(temperature)):
        raise DomainError(f"temperature must be positive and finite, got {temperature}")
    half_x = 0.5 / temperature
    y = math.exp(-half_x)
    if y < 0.5:
        return Rapidity(math.atanh(y))
    # atanh(y) = (ln(1 + y) - ln(1 - y)) / 2 with 1 - y = -expm1(-x/2)
    return Rapidity(0.5 * (math.log1p(y) - math.log(-math.expm1(-half_x))))


def thermal_entropy(tp: ThermalPoint | float) -> float:
    """S = x/(e^x - 1) - ln(1 - e^-x) with x = 1/T."""
    tp = tp if isinstance(tp, ThermalPoint) else ThermalPoint(float(tp))
    x = tp.x
    if math.isinf(x):
        return 0.0
    return x / math.expm1(x) - math.log(-math.expm1(-x))


def thermal_entropy_dx(x: float) -> float:
    """dS/dx of the thermal entropy: -x e^x / (e^x - 1)^2."""
    em1 = math.expm1(x)
    return -x * (em1 + 1.0) / (em1 * em1)


@dataclass(frozen=True)
class VelocityTemperatureCurve:
    temperature: np.ndarray
    beta2: np.ndarray
    eta: np.ndarray

    def rows(self):
        for T, b2, eta in zip(self.temperature, self.beta2, self.eta):
            yield float(T), float(b2), float(eta)


def velocity_temperature_curve(temps) -> VelocityTemperatureCurve:
    """Squared velocity beta^2 = tanh(eta)^2 = exp(-1/T), sorted by T."""
    T = np.sort(np.asarray(temps, dtype=float).ravel())
    if T.size == 0:
        raise DomainError("temperature sequence is empty")
    if not np.all(np.isfinite(T)) or T[0] <= 0:
        raise DomainError("temperatures must be positive and finite")
    beta2 = np.exp(-1.0 / T)
    eta = np.array([rapidity_from_temperature(x).eta for x in T])
    return VelocityTemperatureCurve(T, beta2, eta)


def curve_inflection(t_min: float = 0.1, t_max: float = 2.0, n: int = 1901) -> float:
    """Locate the inflection of exp(-1/T) from second finite differences.

    Serves as a numerical marker between the slowly varying low-T regime and
    the fast high-T regime; analytically it sits at T = 1/2.
    """
    if not 0 < t_min < t_max:
        raise DomainError("need 0 < t_min < t_max")
    T = np.linspace(t_min, t_max, n)
    f = np.exp(-1.0 / T)
    d2 = f[2:] - 2 * f[1:-1] + f[:-2]
    Tm = T[1:-1]
    idx = np.nonzero(np.sign(d2[:-1]) != np.sign(d2[1:]))[0]
    if idx.size == 0:
        raise NumericalError("no sign change of the second difference in range")
    i = idx[0]
    return float(Tm[i] - d2[i] * (Tm[i + 1] - Tm[i]) / (d2[i + 1] - d2[i]))
