"""End-to-end checks of the library against independent numerical oracles.

Each check returns a :class:`CheckResult` with the measured error and the
tolerance it was held to. ``run_all`` is what ``covosc validate`` executes.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kinematics as kin
from .entropy import (
    curve_inflection,
    density_spectrum,
    entropy_closed_form,
    geometric_spectrum,
    reduce_over_time,
    thermal_entropy,
    velocity_temperature_curve,
    von_neumann_entropy,
)
from .errors import AccuracyError, DomainError, NumericalError
from .oscillator import GridSpec, sample_probability_grid
from .parton import boosted_momentum_state, longitudinal_parton_density


@dataclass
class CheckResult:
    name: str
    passed: bool
    error: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<22} error={self.error:.3e}  tol={self.tolerance:.1e}  {self.detail}"


def _result(name, error, tol, detail=""):
    return CheckResult(name, bool(error <= tol), float(error), tol, detail)


def geometric_entropy_oracle(eta: float, max_terms: int = 100_000) -> float:
    """-sum (1-lam) lam^n ln((1-lam) lam^n), summed term by term until negligible."""
    lam = math.tanh(eta) ** 2
    if lam == 0.0:
        return 0.0
    total = 0.0
    log_p = math.log1p(-lam)
    log_lam = math.log(lam)
    for _ in range(max_terms):
        p = math.exp(log_p)
        term = -p * log_p
        total += term
        if p < 1e-300 or (term < 1e-18 * total and p < 1e-12):
            break
        log_p += log_lam
    return total


def check_entropy_oracle(n_points: int | None = 256, tol: float = 1e-3) -> CheckResult:
    start = time.perf_counter()
    errors = []
    for eta in (0.0, 0.5, 1.0, 1.5):
        grid = GridSpec.for_rapidity(eta, n_points=n_points)
        s_num = von_neumann_entropy(density_spectrum(reduce_over_time(eta, grid)))
        errors.append(abs(s_num - entropy_closed_form(eta)))
    elapsed = time.perf_counter() - start
    res = _result("entropy_oracle", max(errors), tol, f"runtime={elapsed:.2f}s (limit 60s)")
    res.passed = res.passed and elapsed < 60.0
    return res


def check_closed_form_spots(tol: float = 1e-5) -> CheckResult:
    s0 = entropy_closed_form(0.0)
    err = abs(entropy_closed_form(1.0) - geometric_entropy_oracle(1.0))
    res = _result("closed_form_spots", err, tol, f"S(0)={s0!r} S(1)={entropy_closed_form(1.0):.7f}")
    res.passed = res.passed and s0 == 0.0
    return res


def check_thermal_identity(tol: float = 1e-12) -> CheckResult:
    err = 0.0
    for eta in np.linspace(0.05, 3.0, 100):
        T = -1.0 / math.log(math.tanh(eta) ** 2)
        err = max(err, abs(entropy_closed_form(eta) - thermal_entropy(T)))
    return _result("thermal_identity", err, tol)


def check_geometric_spectrum(n_points: int | None = None, tol: float = 1e-3) -> CheckResult:
    eta = 1.0
    probs = density_spectrum(reduce_over_time(eta, GridSpec.for_rapidity(eta, n_points))).probs[:5]
    err = float(np.max(np.abs(probs - geometric_spectrum(eta, 5))))
    err = max(err, abs(probs[0] - 0.41998))
    return _result("geometric_spectrum", err, tol, f"leading={probs[0]:.5f}")


def check_normalization(n_points: int | None = None, tol: float = 1e-8) -> CheckResult:
    err = 0.0
    for eta in (0.0, 1.0, 2.0):
        grid = GridSpec.for_rapidity(eta, n_points)
        err = max(err, abs(sample_probability_grid(eta, grid, tol=1.0).integrate() - 1.0))
    return _result("normalization", err, tol)


def check_squeeze_law(n_points: int | None = None, tol: float = 1e-6) -> CheckResult:
    u0, _ = sample_probability_grid(0.0, GridSpec.for_rapidity(0.0, n_points)).lightcone_second_moments()
    sigma0 = math.sqrt(longitudinal_parton_density(0.0, _parton_axis(0.0, n_points)).variance())
    err = 0.0
    for eta in (0.5, 1.0, 2.0):
        u2, _ = sample_probability_grid(eta, GridSpec.for_rapidity(eta, n_points)).lightcone_second_moments()
        err = max(err, abs(u2 / u0 / math.exp(2 * eta) - 1.0))
        sigma = math.sqrt(longitudinal_parton_density(eta, _parton_axis(eta, n_points)).variance())
        err = max(err, abs(sigma / sigma0 / math.exp(eta) - 1.0))
    return _result("squeeze_law", err, tol, "relative")


def _parton_axis(eta, n_points):
    return None if n_points is None else GridSpec(6.0 * math.exp(eta), n_points)


def check_temperature_curve(tol: float = 1e-14) -> CheckResult:
    temps = np.linspace(0.05, 5.0, 200)
    curve = velocity_temperature_curve(temps)
    err = float(np.max(np.abs(curve.beta2 - np.exp(-1.0 / curve.temperature))))
    half = velocity_temperature_curve([1.0 / math.log(2.0)]).beta2[0]
    err = max(err, abs(half - 0.5))
    t_inf = curve_inflection()
    monotone = bool(np.all(np.diff(curve.beta2) > 0))
    res = _result("temperature_curve", err, tol,
                  f"inflection T={t_inf:.5f} (derived proxy for the transition, tol 0.01)")
    res.passed = res.passed and abs(t_inf - 0.5) <= 0.01 and monotone
    return res


def check_duality(n_points: int | None = None, tol: float = 1e-14) -> CheckResult:
    err = 0.0
    for eta in (0.0, 1.0, 2.0):
        grid = GridSpec.for_rapidity(eta, n_points)
        field = sample_probability_grid(eta, grid)
        q = grid.points()
        QZ, Q0 = np.meshgrid(q, q, indexing="ij")
        momentum = boosted_momentum_state(QZ, Q0, eta) ** 2
        err = max(err, float(np.max(np.abs(field.values - momentum))))
    return _result("duality", err, tol)


def check_kinematics(n_samples: int = 1000, tol: float = 1e-12, seed: int = 20011) -> CheckResult:
    rng = np.random.default_rng(seed)
    z, t = rng.uniform(-10, 10, (2, n_samples))
    eta1, eta2 = rng.uniform(-2, 2, (2, n_samples))
    p = kin.SpacetimePoint(z, t)
    scale = 1.0 + np.abs(z) + np.abs(t)

    back = kin.from_lightcone(kin.to_lightcone(p))
    err = np.max((np.abs(back.z - z) + np.abs(back.t - t)) / scale)

    # group law, path independence and the invariant product u*v
    err_group = err_path = err_prod = 0.0
    for i in range(n_samples):
        pi = kin.SpacetimePoint(float(z[i]), float(t[i]))
        two = kin.boost_spacetime(kin.boost_spacetime(pi, eta1[i]), eta2[i])
        one = kin.boost_spacetime(pi, eta1[i] + eta2[i])
        mag = 1.0 + abs(one.z) + abs(one.t)
        err_group = max(err_group, (abs(two.z - one.z) + abs(two.t - one.t)) / mag)

        lc = kin.to_lightcone(pi)
        via_lc = kin.boost_lightcone(lc, eta1[i])
        via_st = kin.to_lightcone(kin.boost_spacetime(pi, eta1[i]))
        mag = 1.0 + abs(via_st.u) + abs(via_st.v)
        err_path = max(err_path, (abs(via_lc.u - via_st.u) + abs(via_lc.v - via_st.v)) / mag)
        err_prod = max(err_prod, abs(via_lc.u * via_lc.v - lc.u * lc.v) / (1.0 + abs(lc.u * lc.v)))
    err = max(err, err_group, err_path, err_prod)
    return _result("kinematics", err, tol, f"{n_samples} samples, relative to magnitude")


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "entropy_oracle": check_entropy_oracle,
    "closed_form_spots": check_closed_form_spots,
    "thermal_identity": check_thermal_identity,
    "geometric_spectrum": check_geometric_spectrum,
    "normalization": check_normalization,
    "squeeze_law": check_squeeze_law,
    "temperature_curve": check_temperature_curve,
    "duality": check_duality,
    "kinematics": check_kinematics,
}

_GRID_CHECKS = {"entropy_oracle", "geometric_spectrum", "normalization", "squeeze_law", "duality"}


def run_all(n_points: int | None = None) -> list[CheckResult]:
    """Run every check; ``n_points`` overrides the grid size of grid-based checks."""
    results = []
    for name, fn in CHECKS.items():
        kwargs = {"n_points": n_points} if (n_points is not None and name in _GRID_CHECKS) else {}
        try:
            results.append(fn(**kwargs))
        except (AccuracyError, NumericalError, DomainError) as exc:
            results.append(CheckResult(name, False, math.inf, math.nan, f"{type(exc).__name__}: {exc}"))
    return results
