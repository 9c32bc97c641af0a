"""Gaussian wavepacket evolution under each damped-system kernel.

Closed-form probability densities |psi(x,t)|^2, packet widths sigma_t, peak
trajectories and expectation values, plus a quadrature oracle that applies
the propagation integral psi(u_f,t) = Int K(u_f,t; u,0) psi(u,0) du
numerically.

Chart convention: the oscillator and linear-gravity packets live in x; the
quadratic-damping packet is Gaussian in X = e^{lam x}/lam, and all its
integrals use the measure dX over the full real line (the chart in which
the dynamics is an inverted oscillator).  A packet of width sigma0 centered
at X_a = e^{lam a}/lam in that chart is exactly the stated x-space profile
exp[-(e^{lam x} - e^{lam a})^2 / (4 lam^2 sigma0^2)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Union

import numpy as np

from .core import (
    GridTooNarrowError,
    RegimeKind,
    System,
    SystemSpec,
    classify,
    growth_rate,
)
from .kernel import Kernel

__all__ = [
    "Chart",
    "GaussianPacket",
    "Grid",
    "EvolvedDensity",
    "QuadraticGravityMeans",
    "SampledWavefunction",
    "chart_center",
    "density",
    "density_chart",
    "sigma_t",
    "peak",
    "peak_chart",
    "mean_x",
    "propagate_numeric",
    "normalization_numeric",
    "mean_x_numeric",
]


class Chart(Enum):
    #: the physical position x
    POSITION = "x"
    #: X = e^{lam x}/lam, the inverted-oscillator coordinate of quadratic damping
    EXP_SCALED = "X_of_x"


def _required_chart(spec: SystemSpec) -> Chart:
    if spec.system is System.QUADRATIC_GRAVITY:
        return Chart.EXP_SCALED
    return Chart.POSITION


@dataclass(frozen=True)
class GaussianPacket:
    """Initial packet: center a (a position, in x), width sigma0 in its chart.

    The t = 0 profile is (2 pi sigma0^2)^{-1/4} exp(-(u - u_a)^2/(4 sigma0^2))
    in the chart coordinate u, normalized to unit mass in the chart measure.
    """

    a: float
    sigma0: float
    chart: Chart = Chart.POSITION

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.sigma0)):
            raise ValueError("packet parameters must be finite")
        if self.sigma0 <= 0.0:
            raise ValueError(f"sigma0 must be positive, got {self.sigma0}")

    @classmethod
    def for_system(cls, spec: SystemSpec, a: float, sigma0: float) -> "GaussianPacket":
        return cls(a=a, sigma0=sigma0, chart=_required_chart(spec))


def _check_chart(spec: SystemSpec, packet: GaussianPacket) -> None:
    want = _required_chart(spec)
    if packet.chart is not want:
        raise ValueError(
            f"{spec.system.value} evolves packets in the {want.value} chart, "
            f"got {packet.chart.value}"
        )


def chart_center(spec: SystemSpec, packet: GaussianPacket) -> float:
    """Packet center in its chart coordinate at t = 0."""
    _check_chart(spec, packet)
    if packet.chart is Chart.EXP_SCALED:
        lam = spec.require_positive_lam("chart X = exp(lam x)/lam")
        return math.exp(lam * packet.a) / lam
    return packet.a


def _oscillator_factors(spec: SystemSpec, t):
    """Envelope factors F, G with peak = a e^{-lam t/2} F and
    sigma_t^2 = sigma0^2 e^{-lam t} (F^2 + (hbar G / (2 m sigma0^2))^2)."""
    t = np.asarray(t, dtype=float)
    lam = spec.lam
    regime = classify(spec)
    if regime.kind is RegimeKind.UNDER_DAMPED:
        w = regime.rate
        F = np.cos(w * t) + (lam / (2.0 * w)) * np.sin(w * t)
        G = np.sin(w * t) / w
    elif regime.kind is RegimeKind.CRITICALLY_DAMPED:
        F = 1.0 + 0.5 * lam * t
        G = t
    else:
        gmm = regime.rate
        F = np.cosh(gmm * t) + (lam / (2.0 * gmm)) * np.sinh(gmm * t)
        G = np.sinh(gmm * t) / gmm
    return F, G


def sigma_t(spec: SystemSpec, packet: GaussianPacket, t):
    """Width of the evolved packet in its chart coordinate (sigma_0 at t=0)."""
    _check_chart(spec, packet)
    t = np.asarray(t, dtype=float)
    s0 = packet.sigma0
    spread = spec.hbar / (2.0 * spec.m * s0 * s0)
    if spec.system is System.DAMPED_OSCILLATOR:
        F, G = _oscillator_factors(spec, t)
        out = s0 * np.sqrt(np.exp(-spec.lam * t) * (F * F + (spread * G) ** 2))
    elif spec.system is System.LINEAR_GRAVITY:
        lam = spec.require_positive_lam("linear-gravity packet width")
        out = s0 * np.sqrt(1.0 + (spread * (1.0 - np.exp(-lam * t)) / lam) ** 2)
    else:
        gmm = growth_rate(spec)
        out = s0 * np.sqrt(np.cosh(gmm * t) ** 2 + (spread * np.sinh(gmm * t) / gmm) ** 2)
    return out if out.ndim else float(out)


def peak_chart(spec: SystemSpec, packet: GaussianPacket, t):
    """Center of the evolved Gaussian in its chart coordinate."""
    _check_chart(spec, packet)
    t = np.asarray(t, dtype=float)
    if spec.system is System.DAMPED_OSCILLATOR:
        F, _ = _oscillator_factors(spec, t)
        out = packet.a * np.exp(-0.5 * spec.lam * t) * F
    elif spec.system is System.LINEAR_GRAVITY:
        lam = spec.lam
        g = spec.g
        out = packet.a + (g / lam) * t - (g / lam ** 2) * (1.0 - np.exp(-lam * t))
    else:
        gmm = growth_rate(spec)
        out = chart_center(spec, packet) * np.cosh(gmm * t)
    return out if out.ndim else float(out)


def peak(spec: SystemSpec, packet: GaussianPacket, t):
    """Position (in x) of maximum probability density at time t."""
    if spec.system is System.QUADRATIC_GRAVITY:
        _check_chart(spec, packet)
        gmm = growth_rate(spec)
        t = np.asarray(t, dtype=float)
        out = packet.a + np.log(np.cosh(gmm * t)) / spec.lam
        return out if out.ndim else float(out)
    return peak_chart(spec, packet, t)


class QuadraticGravityMeans(NamedTuple):
    """Expectation values for the quadratic-damping packet.

    exp_mean is <e^{lam x}> = e^{lam a} cosh(gamma t), exact in the dX
    measure.  heuristic_mean is a + ln(cosh(gamma t))/lam, obtained by the
    coefficient-matching expansion; it coincides with the density peak but
    is not the dX-measure mean of x (Jensen gap, see mean_x_numeric).
    """

    exp_mean: float
    heuristic_mean: float


def mean_x(spec: SystemSpec, packet: GaussianPacket, t
           ) -> Union[float, QuadraticGravityMeans]:
    """Mean position of the packet.

    For the oscillator and linear gravity the density is a symmetric
    Gaussian in x, so the mean equals the peak.  For quadratic damping two
    labeled values are returned, neither silently preferred.
    """
    if spec.system is System.QUADRATIC_GRAVITY:
        _check_chart(spec, packet)
        gmm = growth_rate(spec)
        lc = math.log(math.cosh(gmm * float(t)))
        return QuadraticGravityMeans(
            exp_mean=math.exp(spec.lam * packet.a) * math.cosh(gmm * float(t)),
            heuristic_mean=packet.a + lc / spec.lam,
        )
    return peak(spec, packet, t)


def density_chart(spec: SystemSpec, packet: GaussianPacket, u, t):
    """|psi(u, t)|^2 in the chart coordinate, normalized in the chart measure."""
    s = sigma_t(spec, packet, t)
    mu = peak_chart(spec, packet, t)
    u = np.asarray(u, dtype=float)
    out = np.exp(-((u - mu) ** 2) / (2.0 * s * s)) / np.sqrt(2.0 * np.pi * s * s)
    return out if out.ndim else float(out)


def density(spec: SystemSpec, packet: GaussianPacket, x, t):
    """|psi(x, t)|^2 as a function of position.

    For quadratic damping this is the dX-measure density expressed through
    x, i.e. exp[-(e^{lam x} - e^{lam a} cosh(gamma t))^2 / (2 lam^2
    sigma_t^2)] / sqrt(2 pi sigma_t^2).
    """
    if spec.system is System.QUADRATIC_GRAVITY:
        _check_chart(spec, packet)
        lam = spec.lam
        u = np.exp(lam * np.asarray(x, dtype=float)) / lam
        return density_chart(spec, packet, u, t)
    return density_chart(spec, packet, x, t)


class EvolvedDensity:
    """Snapshot of the evolved density at time t: callable x -> |psi(x,t)|^2."""

    def __init__(self, spec: SystemSpec, packet: GaussianPacket, t: float):
        _check_chart(spec, packet)
        self.spec = spec
        self.packet = packet
        self.t = float(t)

    def __call__(self, x):
        return density(self.spec, self.packet, x, self.t)

    def peak(self) -> float:
        return float(peak(self.spec, self.packet, self.t))

    def sigma(self) -> float:
        return float(sigma_t(self.spec, self.packet, self.t))

    def mean(self):
        return mean_x(self.spec, self.packet, self.t)


class Grid(NamedTuple):
    """Quadrature/output grid in the chart coordinate."""

    x_min: float
    x_max: float
    n: int


class SampledWavefunction(NamedTuple):
    points: np.ndarray   # chart coordinate
    values: np.ndarray   # complex psi
    chart: Chart


def _initial_profile(packet: GaussianPacket, center: float, u):
    s0 = packet.sigma0
    return ((2.0 * np.pi * s0 * s0) ** -0.25
            * np.exp(-((u - center) ** 2) / (4.0 * s0 * s0)))


_GL_ORDER = 32
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(_GL_ORDER)


def propagate_numeric(spec: SystemSpec, packet: GaussianPacket, t: float,
                      grid: Grid, conv_tol: float = 1e-10,
                      max_panels: int = 512) -> SampledWavefunction:
    """Quadrature oracle for the propagation integral at time t > 0.

    Integrates K(u_f, t; u, 0) psi(u, 0) du over the grid interval with
    composite Gauss-Legendre panels, doubling the panel count until two
    successive results agree below conv_tol everywhere.  The oscillatory
    kernel factor is tamed by the packet's Gaussian envelope.  The grid
    must contain all but 1e-12 of the initial packet's mass, and n >= 256.
    """
    _check_chart(spec, packet)
    if t <= 0.0:
        raise ValueError("quadrature propagation requires t > 0")
    if grid.n < 256:
        raise ValueError(f"grid must have n >= 256 points, got {grid.n}")
    center = chart_center(spec, packet)
    z_lo = (center - grid.x_min) / (math.sqrt(2.0) * packet.sigma0)
    z_hi = (grid.x_max - center) / (math.sqrt(2.0) * packet.sigma0)
    mass_out = 0.5 * (math.erfc(z_lo) + math.erfc(z_hi))
    if mass_out > 1e-12:
        raise GridTooNarrowError(
            f"initial packet mass {mass_out:.3e} outside the grid exceeds 1e-12"
        )

    kern = Kernel(spec)
    out = np.linspace(grid.x_min, grid.x_max, grid.n)
    prev = None
    n_panels = 8
    while True:
        edges = np.linspace(grid.x_min, grid.x_max, n_panels + 1)
        half = 0.5 * (edges[1:] - edges[:-1])
        mid = 0.5 * (edges[1:] + edges[:-1])
        u = (half[:, None] * _GL_NODES[None, :] + mid[:, None]).ravel()
        w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
        weighted = w * _initial_profile(packet, center, u)
        psi = kern.amplitude_chart(u[None, :], 0.0, out[:, None], t) @ weighted
        if prev is not None and np.max(np.abs(psi - prev)) < conv_tol:
            return SampledWavefunction(out, psi, packet.chart)
        if n_panels >= max_panels:
            raise RuntimeError(
                f"quadrature did not converge below {conv_tol} with "
                f"{n_panels} panels"
            )
        prev = psi
        n_panels *= 2


def normalization_numeric(spec: SystemSpec, packet: GaussianPacket, t: float,
                          half_width: float = 12.0, n_panels: int = 16) -> float:
    """Int |psi|^2 dmu by Gauss-Legendre panels over +-half_width sigma_t."""
    s = float(sigma_t(spec, packet, t))
    mu = float(peak_chart(spec, packet, t))
    edges = np.linspace(mu - half_width * s, mu + half_width * s, n_panels + 1)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        u = 0.5 * (b - a) * _GL_NODES + 0.5 * (a + b)
        w = 0.5 * (b - a) * _GL_WEIGHTS
        total += float(np.dot(w, density_chart(spec, packet, u, t)))
    return total


def mean_x_numeric(spec: SystemSpec, packet: GaussianPacket, t: float,
                   n_panels: int = 512) -> tuple[float, float]:
    """Diagnostic dX-measure mean of x for quadratic damping.

    x(X) = ln(lam X)/lam exists only for X > 0, so the integral runs over
    the positive half line; the (unphysical) packet mass at X <= 0 is
    returned alongside.  Quantifies the Jensen gap against the heuristic
    mean a + ln(cosh(gamma t))/lam.
    """
    if spec.system is not System.QUADRATIC_GRAVITY:
        raise ValueError("mean_x_numeric is a quadratic-damping diagnostic")
    _check_chart(spec, packet)
    lam = spec.lam
    s = float(sigma_t(spec, packet, t))
    mu = float(peak_chart(spec, packet, t))
    hi = mu + 12.0 * s
    # log singularity at X -> 0+ is integrable; dense panels near zero
    edges = np.concatenate([
        np.geomspace(1e-12 * s, min(s, hi) * 0.5, n_panels // 2),
        np.linspace(min(s, hi) * 0.5, hi, n_panels // 2),
    ])
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        u = 0.5 * (b - a) * _GL_NODES + 0.5 * (a + b)
        w = 0.5 * (b - a) * _GL_WEIGHTS
        total += float(np.dot(w, np.log(lam * u) / lam
                              * density_chart(spec, packet, u, t)))
    mass_nonpositive = 0.5 * math.erfc(mu / (math.sqrt(2.0) * s))
    return total, mass_nonpositive
