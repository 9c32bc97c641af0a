"""Classical side of the damped systems: trajectories, actions, oracles.

Closed-form general solutions and boundary-value constants for the damped
oscillator (all three regimes), linear-drag gravity and quadratic-drag
gravity, the time-dependent Lagrangians that generate them, the closed-form
classical actions, and two independent numerical oracles (Simpson quadrature
of the action integral and a fixed-step RK4 integrator).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq

from .core import (
    CausticError,
    Regime,
    RegimeKind,
    SpacetimePoint,
    System,
    SystemSpec,
    classify,
    growth_rate,
)

__all__ = [
    "BoundaryData",
    "Trajectory",
    "LagrangianForm",
    "ActionCoefficients",
    "solve_bvp",
    "eval_trajectory",
    "trajectory_from_initial_conditions",
    "lagrangian",
    "action_closed_form",
    "action_coefficients",
    "chart_coordinate",
    "action_numeric",
    "integrate_ivp",
    "equation_of_motion_residual",
    "CAUSTIC_TOL",
]

# |sin(omega*T)| below this is treated as a caustic (hard error, never
# huge-magnitude garbage).
CAUSTIC_TOL = 1e-12


@dataclass(frozen=True)
class BoundaryData:
    """Endpoints (x_i, t_i) -> (x_f, t_f) of a propagation interval, t_f > t_i."""

    xi: float
    ti: float
    xf: float
    tf: float

    def __post_init__(self) -> None:
        for name in ("xi", "ti", "xf", "tf"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.tf <= self.ti:
            raise ValueError(f"tf must exceed ti (got ti={self.ti}, tf={self.tf})")

    @classmethod
    def from_points(cls, p_i: SpacetimePoint, p_f: SpacetimePoint) -> "BoundaryData":
        return cls(xi=p_i.x, ti=p_i.t, xf=p_f.x, tf=p_f.t)

    @property
    def T(self) -> float:
        return self.tf - self.ti


def _log_cosh(z: float) -> float:
    # overflow-safe ln(cosh z)
    az = abs(z)
    return az + math.log1p(math.exp(-2.0 * az)) - math.log(2.0)


@dataclass(frozen=True)
class Trajectory:
    """Closed-form solution x(t) with its two integration constants.

    The functional form depends on the system (and, for the oscillator, on
    the damping regime):

    * oscillator UD: x = e^{-lam t/2} (A cos(omega t) + B sin(omega t))
    * oscillator CD: x = e^{-lam t/2} (A + B t)
    * oscillator OD: x = e^{-lam t/2} (A cosh(gamma t) + B sinh(gamma t))
    * linear gravity: x = A + B e^{-lam t} + (g/lam) t
    * quadratic gravity: x = ln(cosh(sqrt(g lam) t + A))/lam + B
    """

    spec: SystemSpec
    A: float
    B: float
    regime: Optional[Regime] = None
    bd: Optional[BoundaryData] = None

    def position(self, t: float) -> float:
        spec = self.spec
        if spec.system is System.DAMPED_OSCILLATOR:
            env = math.exp(-0.5 * spec.lam * t)
            k = self.regime.kind
            if k is RegimeKind.UNDER_DAMPED:
                w = self.regime.rate
                return env * (self.A * math.cos(w * t) + self.B * math.sin(w * t))
            if k is RegimeKind.CRITICALLY_DAMPED:
                return env * (self.A + self.B * t)
            gmm = self.regime.rate
            return env * (self.A * math.cosh(gmm * t) + self.B * math.sinh(gmm * t))
        if spec.system is System.LINEAR_GRAVITY:
            return self.A + self.B * math.exp(-spec.lam * t) + (spec.g / spec.lam) * t
        gmm = growth_rate(spec)
        return _log_cosh(gmm * t + self.A) / spec.lam + self.B

    def velocity(self, t: float) -> float:
        spec = self.spec
        if spec.system is System.DAMPED_OSCILLATOR:
            env = math.exp(-0.5 * spec.lam * t)
            k = self.regime.kind
            if k is RegimeKind.UNDER_DAMPED:
                w = self.regime.rate
                u = self.A * math.cos(w * t) + self.B * math.sin(w * t)
                du = w * (-self.A * math.sin(w * t) + self.B * math.cos(w * t))
            elif k is RegimeKind.CRITICALLY_DAMPED:
                u = self.A + self.B * t
                du = self.B
            else:
                gmm = self.regime.rate
                u = self.A * math.cosh(gmm * t) + self.B * math.sinh(gmm * t)
                du = gmm * (self.A * math.sinh(gmm * t) + self.B * math.cosh(gmm * t))
            return env * (du - 0.5 * spec.lam * u)
        if spec.system is System.LINEAR_GRAVITY:
            return -spec.lam * self.B * math.exp(-spec.lam * t) + spec.g / spec.lam
        gmm = growth_rate(spec)
        return (gmm / spec.lam) * math.tanh(gmm * t + self.A)


def eval_trajectory(traj: Trajectory, t: float) -> float:
    """Evaluate x(t); extrapolation outside the boundary interval is flagged."""
    bd = traj.bd
    if bd is not None and not (bd.ti <= t <= bd.tf):
        warnings.warn(
            f"evaluating trajectory outside its boundary interval "
            f"[{bd.ti}, {bd.tf}] at t={t}",
            stacklevel=2,
        )
    return traj.position(t)


def _oscillator_bvp(spec: SystemSpec, bd: BoundaryData, regime: Regime) -> Trajectory:
    lam = spec.lam
    ei = math.exp(0.5 * lam * bd.ti)
    ef = math.exp(0.5 * lam * bd.tf)
    if regime.kind is RegimeKind.UNDER_DAMPED:
        w = regime.rate
        s = math.sin(w * bd.T)
        if abs(s) < CAUSTIC_TOL:
            raise CausticError(
                f"sin(omega*T) = {s:.3e} at omega*T = {w * bd.T}: "
                "boundary-value problem is degenerate"
            )
        A = (bd.xi * ei * math.sin(w * bd.tf) - bd.xf * ef * math.sin(w * bd.ti)) / s
        B = (bd.xf * ef * math.cos(w * bd.ti) - bd.xi * ei * math.cos(w * bd.tf)) / s
    elif regime.kind is RegimeKind.CRITICALLY_DAMPED:
        A = (bd.xi * bd.tf * ei - bd.xf * bd.ti * ef) / bd.T
        B = (bd.xf * ef - bd.xi * ei) / bd.T
    else:
        gmm = regime.rate
        s = math.sinh(gmm * bd.T)
        A = (bd.xi * ei * math.sinh(gmm * bd.tf) - bd.xf * ef * math.sinh(gmm * bd.ti)) / s
        B = (bd.xf * ef * math.cosh(gmm * bd.ti) - bd.xi * ei * math.cosh(gmm * bd.tf)) / s
    return Trajectory(spec, A, B, regime=regime, bd=bd)


def _quadratic_bvp_constant(spec: SystemSpec, bd: BoundaryData) -> float:
    """Constant A of the cosh-branch solution through both endpoints.

    The boundary difference gives tanh A = (cosh(g tf) - r cosh(g ti)) /
    (r sinh(g ti) - sinh(g tf)) with r = exp(lam (xf - xi)); the gap
    function f(A) = lncosh(g tf + A) - lncosh(g ti + A) is strictly
    increasing with range (-g T, g T), so a solution exists iff the mean
    speed stays below the terminal speed sqrt(g/lam).  Brent's method on
    the gap function backs up the arctanh expression when the latter is
    ill conditioned or overflows.
    """
    gmm = growth_rate(spec)
    target = spec.lam * (bd.xf - bd.xi)
    limit = gmm * bd.T
    if abs(target) >= limit * (1.0 - 1e-14):
        raise ValueError(
            "no cosh-branch trajectory: required mean speed "
            f"{abs(bd.xf - bd.xi) / bd.T:.6g} is not below the terminal speed "
            f"{math.sqrt(spec.g / spec.lam):.6g}"
        )

    def gap(a: float) -> float:
        return _log_cosh(gmm * bd.tf + a) - _log_cosh(gmm * bd.ti + a) - target

    # algebraic branch (safe only while cosh/sinh do not overflow)
    zi, zf = gmm * bd.ti, gmm * bd.tf
    if max(abs(zi), abs(zf)) < 300.0:
        r = math.exp(target)
        den = r * math.sinh(zi) - math.sinh(zf)
        if den != 0.0:
            val = (math.cosh(zf) - r * math.cosh(zi)) / den
            if abs(val) < 1.0:
                a = math.atanh(val)
                if abs(gap(a)) <= 1e-12 * max(1.0, abs(target)):
                    return a
    # bracketed fallback on the monotone gap function
    lo, hi = -1.0 - abs(zi) - abs(zf), 1.0 + abs(zi) + abs(zf)
    while gap(lo) > 0.0:
        lo *= 2.0
    while gap(hi) < 0.0:
        hi *= 2.0
    return brentq(gap, lo, hi, xtol=1e-14, rtol=8.9e-16)


def solve_bvp(spec: SystemSpec, bd: BoundaryData) -> Trajectory:
    """Trajectory through x(t_i) = x_i and x(t_f) = x_f.

    Raises CausticError for the under-damped oscillator when sin(omega*T)
    vanishes, ValueError for the gravity systems at lam = 0 (the closed
    forms divide by lam), and ValueError for quadratic gravity when the
    endpoints demand a mean speed at or above terminal.
    """
    if spec.system is System.DAMPED_OSCILLATOR:
        return _oscillator_bvp(spec, bd, classify(spec))
    if spec.system is System.LINEAR_GRAVITY:
        lam = spec.require_positive_lam("linear-gravity boundary-value problem")
        den = math.exp(-lam * bd.tf) - math.exp(-lam * bd.ti)
        B = ((bd.xf - bd.xi) - (spec.g / lam) * bd.T) / den
        A = bd.xi - (spec.g / lam) * bd.ti - B * math.exp(-lam * bd.ti)
        return Trajectory(spec, A, B, bd=bd)
    spec.require_positive_lam("quadratic-gravity boundary-value problem")
    A = _quadratic_bvp_constant(spec, bd)
    B = bd.xi - _log_cosh(growth_rate(spec) * bd.ti + A) / spec.lam
    return Trajectory(spec, A, B, bd=bd)


def trajectory_from_initial_conditions(spec: SystemSpec, x0: float, v0: float,
                                       t0: float = 0.0) -> Trajectory:
    """Closed-form trajectory with x(t0) = x0 and x'(t0) = v0."""
    if t0 != 0.0:
        raise NotImplementedError("initial conditions are supported at t0 = 0")
    if spec.system is System.DAMPED_OSCILLATOR:
        regime = classify(spec)
        A = x0
        shift = v0 + 0.5 * spec.lam * x0
        if regime.kind is RegimeKind.CRITICALLY_DAMPED:
            B = shift
        else:
            B = shift / regime.rate
        return Trajectory(spec, A, B, regime=regime)
    if spec.system is System.LINEAR_GRAVITY:
        lam = spec.require_positive_lam("linear-gravity trajectory")
        B = (spec.g / lam - v0) / lam
        return Trajectory(spec, x0 - B, B)
    spec.require_positive_lam("quadratic-gravity trajectory")
    gmm = growth_rate(spec)
    ratio = spec.lam * v0 / gmm
    if abs(ratio) >= 1.0:
        raise ValueError(
            f"initial speed {abs(v0):.6g} is not below the terminal speed "
            f"{gmm / spec.lam:.6g}; the cosh-branch form does not apply"
        )
    A = math.atanh(ratio)
    return Trajectory(spec, A, x0 - _log_cosh(A) / spec.lam)


class LagrangianForm(Enum):
    #: time-dependent exponential-weight form; the quantization route
    EXPONENTIAL = "exponential"
    #: square-root form for quadratic damping (classical consistency only)
    SQUARE_ROOT = "square_root"


def lagrangian(spec: SystemSpec, x: float, v: float, t: float,
               form: LagrangianForm = LagrangianForm.EXPONENTIAL) -> float:
    """Lagrangian value at (x, v, t).

    Exponential form, per system::

        oscillator:        (m v^2/2 - m omega0^2 x^2/2) e^{lam t}
        linear gravity:    (m v^2/2 + m g x)            e^{lam t}
        quadratic gravity: (m v^2/2 + m g/(2 lam))      e^{2 lam x}

    Square-root form (quadratic gravity only; defined up to a constant
    factor, used only as a classical consistency check)::

        -sqrt(1 - (lam/g) v^2) e^{-lam x}
    """
    if form is LagrangianForm.SQUARE_ROOT:
        if spec.system is not System.QUADRATIC_GRAVITY:
            raise ValueError("square-root Lagrangian exists for quadratic gravity only")
        arg = 1.0 - (spec.lam / spec.g) * v * v
        if arg < 0.0:
            raise ValueError(
                f"square-root Lagrangian undefined: (lam/g) v^2 = {1.0 - arg:.6g} > 1"
            )
        return -math.sqrt(arg) * math.exp(-spec.lam * x)
    if spec.system is System.DAMPED_OSCILLATOR:
        return (0.5 * spec.m * v * v
                - 0.5 * spec.m * spec.omega0 ** 2 * x * x) * math.exp(spec.lam * t)
    if spec.system is System.LINEAR_GRAVITY:
        return (0.5 * spec.m * v * v + spec.m * spec.g * x) * math.exp(spec.lam * t)
    spec.require_positive_lam("quadratic-gravity Lagrangian")
    return (0.5 * spec.m * v * v
            + spec.m * spec.g / (2.0 * spec.lam)) * math.exp(2.0 * spec.lam * x)


class ActionCoefficients(NamedTuple):
    """Coefficients of the classical action as a quadratic form.

    S(u_i, u_f) = cii u_i^2 + cff u_f^2 + cif u_i u_f + ci u_i + cf u_f + c0,
    where u is the chart coordinate: u = x for the oscillator and linear
    gravity, u = X = exp(lam x)/lam for quadratic gravity.
    """

    cii: float
    cff: float
    cif: float
    ci: float
    cf: float
    c0: float

    def evaluate(self, ui, uf):
        return (self.cii * ui * ui + self.cff * uf * uf + self.cif * ui * uf
                + self.ci * ui + self.cf * uf + self.c0)

    def mixed_fd(self, ui: float, uf: float, h: float) -> float:
        """Central 4-corner estimate of d^2 S / du_i du_f at step h.

        The 24 signed corner terms are combined in one compensated sum, so
        every term that cancels algebraically across the stencil cancels
        exactly in floating point; only the genuine cross terms survive.
        For these quadratic actions the stencil has no truncation error.
        """
        terms = []
        for s1 in (1.0, -1.0):
            a = ui + s1 * h
            for s2 in (1.0, -1.0):
                b = uf + s2 * h
                sign = s1 * s2
                terms += [
                    sign * self.cii * a * a,
                    sign * self.cff * b * b,
                    sign * self.cif * a * b,
                    sign * self.ci * a,
                    sign * self.cf * b,
                    sign * self.c0,
                ]
        return math.fsum(terms) / (4.0 * h * h)


def chart_coordinate(spec: SystemSpec, x):
    """Coordinate the action is quadratic in: x itself, or X = e^{lam x}/lam."""
    if spec.system is System.QUADRATIC_GRAVITY:
        lam = spec.require_positive_lam("coordinate transform X = exp(lam x)/lam")
        return np.exp(lam * np.asarray(x, dtype=float)) / lam
    return np.asarray(x, dtype=float)


def action_coefficients(spec: SystemSpec, ti: float, tf: float) -> ActionCoefficients:
    """Quadratic-form coefficients of the classical action on [ti, tf].

    Raises CausticError for the under-damped oscillator at sin(omega*T) = 0
    and ValueError for the gravity systems at lam = 0.
    """
    T = tf - ti
    if T <= 0.0:
        raise ValueError(f"tf must exceed ti (got ti={ti}, tf={tf})")
    m, lam = spec.m, spec.lam
    if spec.system is System.DAMPED_OSCILLATOR:
        ei = math.exp(lam * ti)
        ef = math.exp(lam * tf)
        em = math.exp(0.5 * lam * (ti + tf))
        regime = classify(spec)
        if regime.kind is RegimeKind.UNDER_DAMPED:
            w = regime.rate
            s = math.sin(w * T)
            if abs(s) < CAUSTIC_TOL:
                raise CausticError(
                    f"sin(omega*T) = {s:.3e}: classical action is singular"
                )
            p = 0.5 * m * w / s * math.cos(w * T)
            cross = -m * w / s * em
        elif regime.kind is RegimeKind.CRITICALLY_DAMPED:
            p = 0.5 * m / T
            cross = -m / T * em
        else:
            gmm = regime.rate
            s = math.sinh(gmm * T)
            p = 0.5 * m * gmm / s * math.cosh(gmm * T)
            cross = -m * gmm / s * em
        damp = 0.25 * m * lam
        return ActionCoefficients(
            cii=p * ei + damp * ei,
            cff=p * ef - damp * ef,
            cif=cross,
            ci=0.0, cf=0.0, c0=0.0,
        )
    if spec.system is System.LINEAR_GRAVITY:
        spec.require_positive_lam("linear-gravity action")
        g = spec.g
        ei = math.exp(lam * ti)
        ef = math.exp(lam * tf)
        P = 0.5 * m * lam * ei * ef / (ef - ei)
        drift = (g / lam) * T
        return ActionCoefficients(
            cii=P,
            cff=P,
            cif=-2.0 * P,
            ci=2.0 * P * drift - (m * g / lam) * ei,
            cf=-2.0 * P * drift + (m * g / lam) * ef,
            c0=P * drift * drift - (m * g * g / (2.0 * lam ** 3)) * (ef - ei),
        )
    gmm = growth_rate(spec)
    s = math.sinh(gmm * T)
    p = 0.5 * m * gmm / s * math.cosh(gmm * T)
    return ActionCoefficients(cii=p, cff=p, cif=-m * gmm / s, ci=0.0, cf=0.0, c0=0.0)


def action_closed_form(spec: SystemSpec, bd: BoundaryData) -> float:
    """Classical action of the extremal path between the endpoints."""
    coeffs = action_coefficients(spec, bd.ti, bd.tf)
    ui = float(chart_coordinate(spec, bd.xi))
    uf = float(chart_coordinate(spec, bd.xf))
    return float(coeffs.evaluate(ui, uf))


def action_numeric(spec: SystemSpec, traj: Trajectory, n_steps: int = 1024) -> float:
    """Simpson-rule action integral along a trajectory; O(n^-4) convergent.

    The trajectory must carry its boundary interval (as produced by
    solve_bvp).  n_steps is the number of panels, at least 16, rounded up
    to even.
    """
    if traj.bd is None:
        raise ValueError("action_numeric requires a trajectory with boundary data")
    if n_steps < 16:
        raise ValueError(f"n_steps must be >= 16, got {n_steps}")
    n = n_steps + (n_steps % 2)
    t = np.linspace(traj.bd.ti, traj.bd.tf, n + 1)
    vals = np.array([
        lagrangian(spec, traj.position(tk), traj.velocity(tk), tk) for tk in t
    ])
    h = (traj.bd.tf - traj.bd.ti) / n
    weights = np.ones(n + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float(h / 3.0 * np.dot(weights, vals))


class IvpResult(NamedTuple):
    t: np.ndarray
    x: np.ndarray
    v: np.ndarray


def acceleration(spec: SystemSpec) -> Callable[[float, float], float]:
    """Right-hand side a(x, v) of the equation of motion x'' = a(x, v)."""
    if spec.system is System.DAMPED_OSCILLATOR:
        lam, w0sq = spec.lam, spec.omega0 ** 2
        return lambda x, v: -lam * v - w0sq * x
    if spec.system is System.LINEAR_GRAVITY:
        lam, g = spec.lam, spec.g
        return lambda x, v: g - lam * v
    lam, g = spec.lam, spec.g
    return lambda x, v: g - lam * v * v


def integrate_ivp(spec: SystemSpec, x0: float, v0: float,
                  t_span: tuple[float, float], dt: Optional[float] = None) -> IvpResult:
    """Classical RK4 solution of the equation of motion.

    By default 10^4 steps span the requested interval.  Used as the
    independent oracle for every closed-form trajectory; the deviation
    scales as dt^4.
    """
    t0, t1 = float(t_span[0]), float(t_span[1])
    if t1 == t0:
        raise ValueError("empty time span")
    if dt is None:
        dt = (t1 - t0) / 10_000
    if dt == 0.0 or (t1 - t0) * dt < 0.0:
        raise ValueError(f"dt must advance the integration, got dt={dt}")
    acc = acceleration(spec)
    n = max(1, int(round((t1 - t0) / dt)))
    h = (t1 - t0) / n
    ts = np.empty(n + 1)
    xs = np.empty(n + 1)
    vs = np.empty(n + 1)
    t, x, v = t0, float(x0), float(v0)
    ts[0], xs[0], vs[0] = t, x, v
    for k in range(1, n + 1):
        k1x = v
        k1v = acc(x, v)
        k2x = v + 0.5 * h * k1v
        k2v = acc(x + 0.5 * h * k1x, v + 0.5 * h * k1v)
        k3x = v + 0.5 * h * k2v
        k3v = acc(x + 0.5 * h * k2x, v + 0.5 * h * k2v)
        k4x = v + h * k3v
        k4v = acc(x + h * k3x, v + h * k3v)
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        t = t0 + k * h
        ts[k], xs[k], vs[k] = t, x, v
    return IvpResult(ts, xs, vs)


def equation_of_motion_residual(spec: SystemSpec, traj: Trajectory, t: float,
                                h: Optional[float] = None) -> float:
    """|x'' - a(x, x')| with x'' from a central difference of the velocity.

    h defaults to 1e-5 * max(1, |t|).  The closed-form velocity is used for
    the first-derivative terms; differencing it once keeps the finite
    difference noise near 1e-11 instead of the 1e-5 a double difference of
    positions would carry.
    """
    if h is None:
        h = 1e-5 * max(1.0, abs(t))
    acc_fd = (traj.velocity(t + h) - traj.velocity(t - h)) / (2.0 * h)
    return abs(acc_fd - acceleration(spec)(traj.position(t), traj.velocity(t)))
