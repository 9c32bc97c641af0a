"""Shared domain types: system specification, damping-regime classification.

All quantities are in natural units chosen by the caller; the mass m and the
action scale hbar are always explicit.  The damping rate is spelled ``lam``
(Lambda = beta/m, dimension 1/time) because ``lambda`` is reserved in Python.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

__all__ = [
    "System",
    "SystemSpec",
    "RegimeKind",
    "Regime",
    "SpacetimePoint",
    "Amplitude",
    "classify",
    "growth_rate",
    "UnsupportedSystemError",
    "CausticError",
    "GridTooNarrowError",
]

#: Complex transition amplitudes (kernel and wavefunction values) are plain
#: Python complex numbers; magnitude and phase carry the physics.
Amplitude = complex

DEFAULT_CLASSIFY_TOL = 1e-12


class UnsupportedSystemError(ValueError):
    """An operation was asked for a system it is not defined for."""


class CausticError(ValueError):
    """Boundary-value problem degenerates (sin(omega*T) vanishes)."""


class GridTooNarrowError(ValueError):
    """Quadrature grid does not contain the wavepacket to the required mass."""


class System(Enum):
    DAMPED_OSCILLATOR = "oscillator"
    LINEAR_GRAVITY = "linear_gravity"
    QUADRATIC_GRAVITY = "quadratic_gravity"


class SpacetimePoint(NamedTuple):
    """An endpoint (x, t) of a propagation interval."""

    x: float
    t: float


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class SystemSpec:
    """Which damped system is being treated, plus its physical parameters.

    Parameters irrelevant to the selected system must be left as None; the
    constructor rejects contradictory input.  lam = 0 is legal for the
    oscillator (plain SHO) and at the spec level for the gravity systems,
    but any operation that divides by lam raises ValueError for lam = 0.

    Attributes
    ----------
    system : System
        One of the three damped systems.
    m : float
        Particle mass, > 0.
    lam : float
        Damping rate Lambda = beta/m, >= 0 (1/time).
    hbar : float
        Action scale, > 0.
    omega0 : float or None
        Natural frequency of the undamped oscillator, >= 0.  Oscillator only.
    g : float or None
        Gravitational acceleration, > 0.  Gravity systems only.
    """

    system: System
    m: float
    lam: float
    hbar: float = 1.0
    omega0: Optional[float] = None
    g: Optional[float] = None

    def __post_init__(self) -> None:
        for name in ("m", "lam", "hbar"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))
        if self.m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if self.hbar <= 0.0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if self.lam < 0.0:
            raise ValueError(f"damping rate lam must be >= 0, got {self.lam}")
        if self.system is System.DAMPED_OSCILLATOR:
            if self.g is not None:
                raise ValueError("oscillator spec must not carry g")
            if self.omega0 is None:
                raise ValueError("oscillator spec requires omega0")
            object.__setattr__(self, "omega0", _require_finite("omega0", self.omega0))
            if self.omega0 < 0.0:
                raise ValueError(f"omega0 must be >= 0, got {self.omega0}")
        else:
            if self.omega0 is not None:
                raise ValueError("gravity spec must not carry omega0")
            if self.g is None:
                raise ValueError("gravity spec requires g")
            object.__setattr__(self, "g", _require_finite("g", self.g))
            if self.g <= 0.0:
                raise ValueError(f"g must be positive, got {self.g}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def oscillator(cls, omega0: float, lam: float = 0.0, m: float = 1.0,
                   hbar: float = 1.0) -> "SystemSpec":
        """Linearly damped harmonic oscillator m*x'' + m*lam*x' + m*omega0^2*x = 0."""
        return cls(System.DAMPED_OSCILLATOR, m=m, lam=lam, hbar=hbar, omega0=omega0)

    @classmethod
    def linear_gravity(cls, g: float, lam: float, m: float = 1.0,
                       hbar: float = 1.0) -> "SystemSpec":
        """Uniform gravity with Stokes drag: x'' + lam*x' = g."""
        return cls(System.LINEAR_GRAVITY, m=m, lam=lam, hbar=hbar, g=g)

    @classmethod
    def quadratic_gravity(cls, g: float, lam: float, m: float = 1.0,
                          hbar: float = 1.0) -> "SystemSpec":
        """Uniform gravity with quadratic drag: x'' + lam*x'^2 = g."""
        return cls(System.QUADRATIC_GRAVITY, m=m, lam=lam, hbar=hbar, g=g)

    def require_positive_lam(self, what: str) -> float:
        if self.lam <= 0.0:
            raise ValueError(f"{what} requires lam > 0 (got lam={self.lam})")
        return self.lam


class RegimeKind(Enum):
    UNDER_DAMPED = "UD"
    CRITICALLY_DAMPED = "CD"
    OVER_DAMPED = "OD"


@dataclass(frozen=True)
class Regime:
    """Oscillator damping regime with its characteristic rate.

    rate is omega = sqrt(omega0^2 - lam^2/4) for UD, gamma =
    sqrt(lam^2/4 - omega0^2) for OD, and None for CD.  The identity
    gamma^2 = lam^2/4 - omega0^2 = -omega^2 ties the two together.
    """

    kind: RegimeKind
    rate: Optional[float]

    def __post_init__(self) -> None:
        if self.kind is RegimeKind.CRITICALLY_DAMPED:
            if self.rate is not None:
                raise ValueError("critically damped regime carries no rate")
        else:
            if self.rate is None or self.rate <= 0.0:
                raise ValueError(f"{self.kind.value} regime requires rate > 0")


def classify(spec: SystemSpec, tol: float = DEFAULT_CLASSIFY_TOL) -> Regime:
    """Classify the damped oscillator by comparing lam against 2*omega0.

    |lam - 2*omega0| <= tol * max(lam, 2*omega0) counts as critically damped;
    the comparison is scale invariant.  Raises UnsupportedSystemError for the
    gravity systems.
    """
    if spec.system is not System.DAMPED_OSCILLATOR:
        raise UnsupportedSystemError(
            f"regime classification applies to the oscillator, not {spec.system.value}"
        )
    lam, omega0 = spec.lam, spec.omega0
    scale = max(lam, 2.0 * omega0)
    if abs(lam - 2.0 * omega0) <= tol * scale:
        return Regime(RegimeKind.CRITICALLY_DAMPED, None)
    disc = lam * lam / 4.0 - omega0 * omega0
    if disc < 0.0:
        return Regime(RegimeKind.UNDER_DAMPED, math.sqrt(-disc))
    return Regime(RegimeKind.OVER_DAMPED, math.sqrt(disc))


def growth_rate(spec: SystemSpec) -> float:
    """Characteristic rate gamma = sqrt(g*lam) of quadratic damping.

    This is the frequency of the equivalent inverted oscillator in the
    transformed coordinate X = exp(lam*x)/lam.
    """
    if spec.system is not System.QUADRATIC_GRAVITY:
        raise UnsupportedSystemError("growth_rate is defined for quadratic gravity")
    spec.require_positive_lam("growth rate sqrt(g*lam)")
    return math.sqrt(spec.g * spec.lam)
