"""Quadratic damping as geodesic motion in a fictitious 2-D space.

The line element ds^2 = f(x) dx^2 + h(x) dy^2 with f = e^{2 lam x} and
h = -(C^2 lam / g) e^{-2 lam x} turns the quadratically damped equation of
motion x'' + lam x'^2 = g into the x-component of a geodesic equation; the
damping rate shows up as curvature, R = -4 lam^2 e^{-2 lam x}.  The metric
is Lorentzian (h < 0) and all curvature algebra uses the signed inverse.

Also here: the zero-dimensional tachyon-matter correspondence.  The action
-Int dt e^{-alpha x} sqrt(1 - x'^2) has equation of motion x'' + alpha x'^2
= alpha, which the scaling x -> b x with alpha = sqrt(g lam), b =
sqrt(lam/g) maps onto the quadratic-damping equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .core import System, SystemSpec

__all__ = [
    "Metric2D",
    "ChristoffelSymbols",
    "CurvatureComponents",
    "GeodesicResult",
    "TachyonMap",
    "christoffel",
    "christoffel_fd",
    "geodesic_reduce",
    "integrate_geodesic",
    "curvature",
    "curvature_fd",
    "tachyon_lagrangian",
    "tachyon_eom_check",
    "geodesic_accel_fit",
]


@dataclass(frozen=True)
class Metric2D:
    """diag(f(x), h(x)) metric encoding quadratic damping, f = e^{2 lam x},
    h = -(C^2 lam / g) e^{-2 lam x}.

    The defining conditions f'/2f = lam and C^2 h'/(2 f h^2) = g hold
    identically; the geodesic constant C drops out of the x motion.
    """

    lam: float
    g: float
    C: float = 1.0

    def __post_init__(self) -> None:
        if self.lam <= 0.0:
            raise ValueError(f"metric requires lam > 0, got {self.lam}")
        if self.g <= 0.0:
            raise ValueError(f"metric requires g > 0, got {self.g}")
        if self.C == 0.0:
            raise ValueError("geodesic constant C must be nonzero")

    @classmethod
    def for_system(cls, spec: SystemSpec, C: float = 1.0) -> "Metric2D":
        if spec.system is not System.QUADRATIC_GRAVITY:
            raise ValueError("the geodesic picture applies to quadratic damping")
        return cls(lam=spec.lam, g=spec.g, C=C)

    def f(self, x):
        return np.exp(2.0 * self.lam * np.asarray(x, dtype=float))

    def h(self, x):
        return -(self.C ** 2 * self.lam / self.g) * np.exp(
            -2.0 * self.lam * np.asarray(x, dtype=float))

    def f_prime(self, x):
        return 2.0 * self.lam * self.f(x)

    def h_prime(self, x):
        return -2.0 * self.lam * self.h(x)


class ChristoffelSymbols(NamedTuple):
    """The three independent nonzero components (G_y_xy = G_y_yx)."""

    g_x_xx: float
    g_x_yy: float
    g_y_xy: float


def christoffel(metric: Metric2D, x: float) -> ChristoffelSymbols:
    """Closed-form Christoffel symbols f'/2f, -h'/2f, h'/2h."""
    f = float(metric.f(x))
    h = float(metric.h(x))
    fp = float(metric.f_prime(x))
    hp = float(metric.h_prime(x))
    return ChristoffelSymbols(
        g_x_xx=fp / (2.0 * f),
        g_x_yy=-hp / (2.0 * f),
        g_y_xy=hp / (2.0 * h),
    )


def christoffel_fd(metric: Metric2D, x: float, step: float = 1e-6
                   ) -> ChristoffelSymbols:
    """Christoffel symbols with f', h' from central differences (oracle)."""
    f = float(metric.f(x))
    h = float(metric.h(x))
    fp = float(metric.f(x + step) - metric.f(x - step)) / (2.0 * step)
    hp = float(metric.h(x + step) - metric.h(x - step)) / (2.0 * step)
    return ChristoffelSymbols(
        g_x_xx=fp / (2.0 * f),
        g_x_yy=-hp / (2.0 * f),
        g_y_xy=hp / (2.0 * h),
    )


def geodesic_reduce(metric: Metric2D, x: float = 0.0) -> tuple[float, float]:
    """Coefficients (lam_eff, g_eff) of the reduced x equation
    x'' + (f'/2f) x'^2 - C^2 h'/(2 f h^2) = 0.

    Both are constant in x and equal (lam, g) by construction; evaluating
    at arbitrary x lets the finite-difference oracle confirm constancy.
    """
    f = float(metric.f(x))
    h = float(metric.h(x))
    fp = float(metric.f_prime(x))
    hp = float(metric.h_prime(x))
    return fp / (2.0 * f), metric.C ** 2 * hp / (2.0 * f * h * h)


class GeodesicResult(NamedTuple):
    t: np.ndarray
    x: np.ndarray
    vx: np.ndarray
    y: np.ndarray
    vy: np.ndarray

    def conserved(self, metric: Metric2D) -> np.ndarray:
        """First integral h(x) y' of the y geodesic equation (equals C)."""
        return np.asarray(metric.h(self.x)) * self.vy


def integrate_geodesic(metric: Metric2D, x0: float, vx0: float,
                       t_span: tuple[float, float], dt: Optional[float] = None,
                       y0: float = 0.0) -> GeodesicResult:
    """RK4 on both geodesic equations, with y'(0) = C/h(x0).

    The x component reproduces the quadratically damped motion with the
    same (x0, vx0) and is independent of C; h(x) y' is conserved.
    """
    t0, t1 = float(t_span[0]), float(t_span[1])
    if t1 <= t0:
        raise ValueError("t_span must advance")
    if dt is None:
        dt = (t1 - t0) / 10_000
    lam, C = metric.lam, metric.C

    def rhs(state):
        x, vx, y, vy = state
        h = float(metric.h(x))
        hp = -2.0 * lam * h
        f = float(metric.f(x))
        ax = -lam * vx * vx + (hp / (2.0 * f)) * vy * vy
        ay = -(hp / h) * vx * vy
        return np.array([vx, ax, vy, ay])

    n = max(1, int(round((t1 - t0) / dt)))
    hstep = (t1 - t0) / n
    state = np.array([x0, vx0, y0, C / float(metric.h(x0))])
    ts = np.empty(n + 1)
    out = np.empty((n + 1, 4))
    ts[0], out[0] = t0, state
    for k in range(1, n + 1):
        k1 = rhs(state)
        k2 = rhs(state + 0.5 * hstep * k1)
        k3 = rhs(state + 0.5 * hstep * k2)
        k4 = rhs(state + hstep * k3)
        state = state + hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        ts[k], out[k] = t0 + k * hstep, state
    return GeodesicResult(ts, out[:, 0], out[:, 1], out[:, 2], out[:, 3])


class CurvatureComponents(NamedTuple):
    r_xx: float
    r_yy: float
    scalar: float


def curvature(metric: Metric2D, x: float) -> CurvatureComponents:
    """Closed-form Ricci components and scalar.

    R_xx = -2 lam^2, R_yy = (2 C^2 lam^3 / g) e^{-4 lam x}, and
    R = -4 lam^2 e^{-2 lam x}.  The R_yy exponent follows from the single
    independent Riemann component in two dimensions and is the only value
    consistent with R_xx and R under contraction with the signed inverse
    metric.
    """
    lam = metric.lam
    return CurvatureComponents(
        r_xx=-2.0 * lam * lam,
        r_yy=(2.0 * metric.C ** 2 * lam ** 3 / metric.g) * math.exp(-4.0 * lam * x),
        scalar=-4.0 * lam * lam * math.exp(-2.0 * lam * x),
    )


def curvature_fd(metric: Metric2D, x: float, step: float = 1e-4
                 ) -> CurvatureComponents:
    """Ricci data assembled from the Christoffel symbols by finite differences.

    In 2-D there is one independent Riemann component; both Ricci entries
    come from it,

        R^x_yxy = d_x G^x_yy + G^x_xx G^x_yy - G^x_yy G^y_xy
        R^y_xyx = -d_x G^y_xy + G^y_xy G^x_xx - (G^y_xy)^2

    with the derivatives taken as second-order central differences of the
    symbols, and R = R_xx/f + R_yy/h (signed inverse metric).
    """
    c0 = christoffel(metric, x)
    cp = christoffel(metric, x + step)
    cm = christoffel(metric, x - step)
    d_g_x_yy = (cp.g_x_yy - cm.g_x_yy) / (2.0 * step)
    d_g_y_xy = (cp.g_y_xy - cm.g_y_xy) / (2.0 * step)
    r_yy = d_g_x_yy + c0.g_x_xx * c0.g_x_yy - c0.g_x_yy * c0.g_y_xy
    r_xx = -d_g_y_xy + c0.g_y_xy * c0.g_x_xx - c0.g_y_xy ** 2
    scalar = r_xx / float(metric.f(x)) + r_yy / float(metric.h(x))
    return CurvatureComponents(r_xx=r_xx, r_yy=r_yy, scalar=scalar)


@dataclass(frozen=True)
class TachyonMap:
    """Scaling between the tachyon equation x'' + alpha x'^2 = alpha and the
    quadratic-damping equation x'' + lam x'^2 = g: alpha = sqrt(g lam),
    b = sqrt(lam/g), so that alpha b = lam and alpha/b = g exactly."""

    alpha: float
    b: float

    @classmethod
    def from_rates(cls, lam: float, g: float) -> "TachyonMap":
        if lam <= 0.0 or g <= 0.0:
            raise ValueError("tachyon map requires lam > 0 and g > 0")
        return cls(alpha=math.sqrt(g * lam), b=math.sqrt(lam / g))

    @classmethod
    def for_system(cls, spec: SystemSpec) -> "TachyonMap":
        if spec.system is not System.QUADRATIC_GRAVITY:
            raise ValueError("the tachyon map applies to quadratic damping")
        return cls.from_rates(spec.lam, spec.g)


def tachyon_lagrangian(tmap: TachyonMap, x_scaled, v_scaled):
    """-e^{-alpha x} sqrt(1 - v^2) in scaled units; |v| must stay below 1."""
    v = np.asarray(v_scaled, dtype=float)
    arg = 1.0 - v * v
    if np.any(arg < 0.0):
        raise ValueError("scaled speed reached |v| >= 1; square root undefined")
    out = -np.exp(-tmap.alpha * np.asarray(x_scaled, dtype=float)) * np.sqrt(arg)
    return out if out.ndim else float(out)


def tachyon_eom_check(tmap: TachyonMap, t: np.ndarray, x: np.ndarray,
                      v: np.ndarray) -> float:
    """Max residual of x'' + alpha x'^2 = alpha along a rescaled trajectory.

    Takes a sampled quadratically damped trajectory (unscaled), applies the
    scaling x -> b x, and differences the scaled velocity samples centrally.
    The samples must be uniformly spaced in t.
    """
    t = np.asarray(t, dtype=float)
    xs = tmap.b * np.asarray(x, dtype=float)
    vs = tmap.b * np.asarray(v, dtype=float)
    if np.any(np.abs(vs) >= 1.0):
        raise ValueError("scaled speed reached |v| >= 1; outside the tachyon domain")
    dt = t[1] - t[0]
    if not np.allclose(np.diff(t), dt, rtol=1e-9):
        raise ValueError("samples must be uniform in time")
    acc = (vs[2:] - vs[:-2]) / (2.0 * dt)
    residual = acc + tmap.alpha * vs[1:-1] ** 2 - tmap.alpha
    del xs  # position does not enter the tachyon equation of motion
    return float(np.max(np.abs(residual)))


def geodesic_accel_fit(accel_values: np.ndarray, v_grid: np.ndarray
                       ) -> tuple[float, float, float]:
    """Least-squares fit of a(v) = g_eff - lam_eff v^2 to sampled accelerations.

    Geodesics of a diag(f(x), h(x)) metric can only produce x-accelerations
    even in v; fitting the linear-damping field a(v) = g - lam v leaves an
    irreducible residual, which is the documented obstruction to a geodesic
    form for linear damping.  Returns (g_eff, lam_eff, rms residual).
    """
    v = np.asarray(v_grid, dtype=float)
    a = np.asarray(accel_values, dtype=float)
    design = np.column_stack([np.ones_like(v), -v * v])
    coef, *_ = np.linalg.lstsq(design, a, rcond=None)
    rms = float(np.sqrt(np.mean((design @ coef - a) ** 2)))
    return float(coef[0]), float(coef[1]), rms
