"""Path-integral propagators and wavepacket evolution for damped systems.

Three exactly solvable damped mechanical systems (linearly damped harmonic
oscillator, uniform gravity with linear drag, uniform gravity with quadratic
drag): closed-form classical trajectories and actions, quantum propagators,
Gaussian wavepacket dispersion laws, the geodesic reformulation of quadratic
damping, and independent numerical oracles for every closed form.
"""

from .core import (
    Amplitude,
    CausticError,
    GridTooNarrowError,
    Regime,
    RegimeKind,
    SpacetimePoint,
    System,
    SystemSpec,
    UnsupportedSystemError,
    classify,
    growth_rate,
)
from .classical import (
    BoundaryData,
    LagrangianForm,
    Trajectory,
    action_closed_form,
    action_numeric,
    eval_trajectory,
    integrate_ivp,
    lagrangian,
    solve_bvp,
    trajectory_from_initial_conditions,
)
from .kernel import (
    Kernel,
    propagate,
    transitivity_check,
    van_vleck_check,
)
from .wavepacket import (
    Chart,
    EvolvedDensity,
    GaussianPacket,
    Grid,
    density,
    mean_x,
    peak,
    propagate_numeric,
    sigma_t,
)
from .geometry import (
    Metric2D,
    TachyonMap,
    christoffel,
    curvature,
    geodesic_reduce,
    integrate_geodesic,
    tachyon_eom_check,
)

__version__ = "0.1.0"

__all__ = [
    "Amplitude",
    "BoundaryData",
    "CausticError",
    "Chart",
    "EvolvedDensity",
    "GaussianPacket",
    "Grid",
    "GridTooNarrowError",
    "Kernel",
    "LagrangianForm",
    "Metric2D",
    "Regime",
    "RegimeKind",
    "SpacetimePoint",
    "System",
    "SystemSpec",
    "TachyonMap",
    "Trajectory",
    "UnsupportedSystemError",
    "action_closed_form",
    "action_numeric",
    "christoffel",
    "classify",
    "curvature",
    "density",
    "eval_trajectory",
    "geodesic_reduce",
    "growth_rate",
    "integrate_geodesic",
    "integrate_ivp",
    "lagrangian",
    "mean_x",
    "peak",
    "propagate",
    "propagate_numeric",
    "sigma_t",
    "solve_bvp",
    "tachyon_eom_check",
    "trajectory_from_initial_conditions",
    "transitivity_check",
    "van_vleck_check",
    "__version__",
]
