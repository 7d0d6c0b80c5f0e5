"""Covariant harmonic-oscillator model of a two-quark hadron.

Lorentz-squeezed ground-state wave functions, the reduced density matrix left
after the time separation is integrated out, its entropy and thermal
interpretation, and the longitudinal parton density of a boosted hadron.
"""

from .entropy import (
    DensityKernel,
    ProbabilitySpectrum,
    ThermalPoint,
    density_spectrum,
    entropy_closed_form,
    rapidity_from_temperature,
    reduce_over_time,
    temperature_from_rapidity,
    thermal_entropy,
    velocity_temperature_curve,
    von_neumann_entropy,
)
from .errors import AccuracyError, DomainError, NumericalError
from .kinematics import (
    LightconePoint,
    Rapidity,
    SpacetimePoint,
    boost_lightcone,
    boost_spacetime,
    from_lightcone,
    to_lightcone,
)
from .oscillator import (
    GridSpec,
    SampledField2D,
    boosted_ground_state,
    ellipse_axes,
    ground_state,
    hermite_state,
    sample_probability_grid,
)
from .parton import (
    PartonDensity,
    boosted_momentum_state,
    lightcone_concentration,
    longitudinal_parton_density,
)

__version__ = "0.1.0"
