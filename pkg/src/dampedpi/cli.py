"""Command-line front end: CSV emitters for the figures and oracle suites.

Subcommands
-----------
evolve   write density.csv (t,x,psi2) and sigma.csv (t,lambda,sigma_t)
verify   run an oracle suite (classical/kernel/wavepacket/geometry/all)
         and report per-check residuals; exit 0 iff all pass
sweep    long-format sigma_t family over a parameter (lambda/sigma0/omega0)

Exit codes: 0 success, 1 validation error, 2 oracle failure, 3 I/O error.
Output CSVs carry a '#'-prefixed metadata header echoing the full config,
so every figure is reproducible from its own output file; identical configs
produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .core import System, SystemSpec, classify
from .classical import (
    BoundaryData,
    action_closed_form,
    action_numeric,
    equation_of_motion_residual,
    integrate_ivp,
    solve_bvp,
    trajectory_from_initial_conditions,
)
from .kernel import Kernel, transitivity_check, van_vleck_check
from .wavepacket import (
    GaussianPacket,
    Grid,
    density,
    density_chart,
    normalization_numeric,
    peak,
    peak_chart,
    propagate_numeric,
    sigma_t,
)
from .geometry import (
    Metric2D,
    TachyonMap,
    christoffel,
    christoffel_fd,
    curvature,
    curvature_fd,
    integrate_geodesic,
    tachyon_eom_check,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_ORACLE = 2
EXIT_IO = 3

_SYSTEM_NAMES = {s.value: s for s in System}


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters; deterministic (no randomness in outputs)."""

    system: str = "oscillator"
    m: float = 1.0
    lam: float = 0.2
    omega0: float = 0.5
    g: float = 9.8
    hbar: float = 1.0
    a: float = 1.0
    sigma0: float = 0.5
    t_max: float = 50.0
    n_t: int = 201
    x_min: float = -5.0
    x_max: float = 5.0
    n_x: int = 201

    def __post_init__(self) -> None:
        if self.system not in _SYSTEM_NAMES:
            raise ValueError(
                f"unknown system {self.system!r}; choose from "
                f"{sorted(_SYSTEM_NAMES)}"
            )
        if self.n_t < 2 or self.n_x < 2:
            raise ValueError("n_t and n_x must be at least 2")
        if self.t_max <= 0.0:
            raise ValueError("t_max must be positive")
        if self.x_max <= self.x_min:
            raise ValueError("x_max must exceed x_min")
        self.to_spec()  # validates the physical parameters

    def to_spec(self) -> SystemSpec:
        system = _SYSTEM_NAMES[self.system]
        if system is System.DAMPED_OSCILLATOR:
            return SystemSpec.oscillator(omega0=self.omega0, lam=self.lam,
                                         m=self.m, hbar=self.hbar)
        if system is System.LINEAR_GRAVITY:
            return SystemSpec.linear_gravity(g=self.g, lam=self.lam,
                                             m=self.m, hbar=self.hbar)
        return SystemSpec.quadratic_gravity(g=self.g, lam=self.lam,
                                            m=self.m, hbar=self.hbar)

    def to_packet(self) -> GaussianPacket:
        return GaussianPacket.for_system(self.to_spec(), self.a, self.sigma0)


def config_header(cfg: RunConfig) -> list[str]:
    lines = [f"# dampedpi_version={__version__}"]
    for f in fields(RunConfig):
        lines.append(f"# {f.name}={getattr(cfg, f.name)!r}")
    return lines


def parse_config_header(text: str) -> RunConfig:
    """Rebuild a RunConfig from the '#'-comment block of an output file."""
    values: dict[str, object] = {}
    field_types = {f.name: f.type for f in fields(RunConfig)}
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith("#") or "=" not in line:
            continue
        key, _, raw = line.lstrip("# ").partition("=")
        if key not in field_types:
            continue
        if key == "system":
            values[key] = raw.strip().strip("'\"")
        elif key in ("n_t", "n_x"):
            values[key] = int(raw)
        else:
            values[key] = float(raw)
    return RunConfig(**values)


def _read_config_file(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"config line is not key=value: {line!r}")
        out[key.strip()] = value.strip()
    return out


_FLOAT_KEYS = ("m", "lam", "omega0", "g", "hbar", "a", "sigma0",
               "t_max", "x_min", "x_max")
_INT_KEYS = ("n_t", "n_x")


def _build_config(args: argparse.Namespace) -> RunConfig:
    values: dict[str, object] = {}
    if getattr(args, "config", None):
        for key, raw in _read_config_file(args.config).items():
            if key == "system":
                values[key] = raw
            elif key in _FLOAT_KEYS:
                values[key] = float(raw)
            elif key in _INT_KEYS:
                values[key] = int(raw)
            else:
                raise ValueError(f"unknown config key {key!r}")
    for key in ("system", *_FLOAT_KEYS, *_INT_KEYS):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return RunConfig(**values)


def _fmt(x: float) -> str:
    return repr(float(x))


# ---------------------------------------------------------------------------
# evolve / sweep


def cmd_evolve(cfg: RunConfig, out_dir: Path) -> int:
    spec = cfg.to_spec()
    packet = cfg.to_packet()
    header = config_header(cfg)
    ts = np.linspace(0.0, cfg.t_max, cfg.n_t)
    xs = np.linspace(cfg.x_min, cfg.x_max, cfg.n_x)

    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "density.csv", "w", newline="\n") as fh:
        fh.write("\n".join(header) + "\n")
        fh.write("t,x,psi2\n")
        for t in ts:
            rho = np.asarray(density(spec, packet, xs, t), dtype=float)
            for x, r in zip(xs, rho):
                fh.write(f"{_fmt(t)},{_fmt(x)},{_fmt(r)}\n")
    with open(out_dir / "sigma.csv", "w", newline="\n") as fh:
        fh.write("\n".join(header) + "\n")
        fh.write("t,lambda,sigma_t\n")
        sig = np.asarray(sigma_t(spec, packet, ts), dtype=float)
        for t, s in zip(ts, sig):
            fh.write(f"{_fmt(t)},{_fmt(cfg.lam)},{_fmt(s)}\n")
    return EXIT_OK


def _localization_onset(spec: SystemSpec, packet: GaussianPacket,
                        t_max: float) -> Optional[float]:
    """Last downward crossing of sigma_t through sigma_0 on [0, t_max]."""
    ts = np.linspace(0.0, t_max, 4001)
    sig = np.asarray(sigma_t(spec, packet, ts), dtype=float)
    above = sig >= packet.sigma0
    if above[-1]:
        return None
    if not above.any():
        return 0.0
    k = int(np.max(np.nonzero(above)))
    lo, hi = ts[k], ts[k + 1]
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if float(sigma_t(spec, packet, mid)) >= packet.sigma0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cmd_sweep(cfg: RunConfig, param: str, values: list[float],
              out_path: Path) -> int:
    if param not in ("lambda", "sigma0", "omega0"):
        raise ValueError(f"unknown sweep parameter {param!r}; "
                         "choose lambda, sigma0 or omega0")
    ts = np.linspace(0.0, cfg.t_max, cfg.n_t)
    rows: list[tuple[float, float, float]] = []
    onsets: list[tuple[float, Optional[float]]] = []
    for value in values:
        if param == "lambda":
            sub = replace(cfg, lam=value)
        elif param == "sigma0":
            sub = replace(cfg, sigma0=value)
        else:
            if cfg.system != "oscillator":
                raise ValueError("omega0 sweeps apply to the oscillator")
            sub = replace(cfg, omega0=value)
        spec = sub.to_spec()
        packet = sub.to_packet()
        sig = np.asarray(sigma_t(spec, packet, ts), dtype=float)
        rows.extend((t, value, s) for t, s in zip(ts, sig))
        if sub.system == "oscillator" and sub.lam > 0.0:
            onsets.append((value, _localization_onset(spec, packet, sub.t_max)))

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", newline="\n") as fh:
        fh.write("\n".join(config_header(cfg)) + "\n")
        fh.write(f"# sweep_param={param}\n")
        fh.write(f"# sweep_values={','.join(_fmt(v) for v in values)}\n")
        for value, onset in onsets:
            shown = _fmt(onset) if onset is not None else "none"
            fh.write(f"# localization_onset {param}={_fmt(value)} t={shown}\n")
        fh.write(f"t,{param},sigma_t\n")
        for t, v, s in rows:
            fh.write(f"{_fmt(t)},{_fmt(v)},{_fmt(s)}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites


def _check(name: str, residual: float, threshold: float) -> dict:
    return {
        "check": name,
        "residual": float(residual),
        "threshold": float(threshold),
        "pass": bool(residual <= threshold),
    }


def _gravity_lam(cfg: RunConfig) -> float:
    return cfg.lam if cfg.lam > 0.0 else 1.0


def _suite_specs(cfg: RunConfig) -> list[tuple[str, SystemSpec]]:
    lam_g = _gravity_lam(cfg)
    return [
        ("oscillator_ud", SystemSpec.oscillator(cfg.omega0, lam=cfg.lam,
                                                m=cfg.m, hbar=cfg.hbar)),
        ("oscillator_cd", SystemSpec.oscillator(cfg.omega0, lam=2.0 * cfg.omega0,
                                                m=cfg.m, hbar=cfg.hbar)),
        ("oscillator_od", SystemSpec.oscillator(cfg.omega0, lam=3.0 * cfg.omega0,
                                                m=cfg.m, hbar=cfg.hbar)),
        ("linear_gravity", SystemSpec.linear_gravity(cfg.g, lam=lam_g,
                                                     m=cfg.m, hbar=cfg.hbar)),
        ("quadratic_gravity", SystemSpec.quadratic_gravity(cfg.g, lam=lam_g,
                                                           m=cfg.m, hbar=cfg.hbar)),
    ]


def _random_bds(spec: SystemSpec, rng: np.random.Generator, count: int
                ) -> list[BoundaryData]:
    from .core import RegimeKind, System as Sys

    out = []
    while len(out) < count:
        xi, xf = rng.uniform(-1.5, 1.5, size=2)
        ti = rng.uniform(0.0, 1.0)
        T = rng.uniform(0.4, 2.2)
        if spec.system is Sys.DAMPED_OSCILLATOR:
            regime = classify(spec)
            if regime.kind is RegimeKind.UNDER_DAMPED:
                if abs(math.sin(regime.rate * T)) < 0.1:
                    continue
        if spec.system is Sys.QUADRATIC_GRAVITY:
            # keep the endpoints below the terminal mean speed
            vmax = math.sqrt(spec.g / spec.lam)
            if abs(xf - xi) / T >= 0.8 * vmax:
                continue
        out.append(BoundaryData(xi, ti, xf, ti + T))
    return out


def suite_classical(cfg: RunConfig) -> list[dict]:
    checks = []
    rng = np.random.default_rng(0)
    for name, spec in _suite_specs(cfg):
        bd = _random_bds(spec, rng, 1)[0]
        traj = solve_bvp(spec, bd)
        scale = max(1.0, abs(bd.xi), abs(bd.xf))
        bres = max(abs(traj.position(bd.ti) - bd.xi),
                   abs(traj.position(bd.tf) - bd.xf)) / scale
        checks.append(_check(f"{name}_bvp_boundary", bres, 1e-10))
        el = max(equation_of_motion_residual(spec, traj, t)
                 for t in np.linspace(bd.ti, bd.tf, 17))
        checks.append(_check(f"{name}_el_residual", el, 1e-6))
        s_closed = action_closed_form(spec, bd)
        s_simpson = action_numeric(spec, traj, 4096)
        tol = 1e-6 if name == "quadratic_gravity" else 1e-8
        checks.append(_check(f"{name}_action_vs_simpson",
                             abs(s_closed - s_simpson) / max(1.0, abs(s_closed)),
                             tol))
        ivp = integrate_ivp(spec, bd.xi, traj.velocity(bd.ti),
                            (bd.ti, bd.tf), dt=1e-3)
        dev = max(abs(traj.position(t) - x) for t, x in
                  zip(ivp.t[::200], ivp.x[::200]))
        checks.append(_check(f"{name}_rk4_vs_closed", dev, 1e-8))

    lam_g = _gravity_lam(cfg)
    lin = SystemSpec.linear_gravity(cfg.g, lam=lam_g, m=cfg.m, hbar=cfg.hbar)
    vterm = cfg.g / lam_g
    ivp = integrate_ivp(lin, 0.0, 0.0, (0.0, 10.0 / lam_g), dt=1e-3)
    checks.append(_check("linear_gravity_terminal_velocity",
                         abs(ivp.v[-1] - vterm) / vterm, 1e-3))
    quad = SystemSpec.quadratic_gravity(cfg.g, lam=lam_g, m=cfg.m, hbar=cfg.hbar)
    vterm_q = math.sqrt(cfg.g / lam_g)
    ivp = integrate_ivp(quad, 0.0, 0.0, (0.0, 10.0 / lam_g), dt=1e-3)
    checks.append(_check("quadratic_gravity_terminal_velocity",
                         abs(ivp.v[-1] - vterm_q) / vterm_q, 1e-3))
    fwd = integrate_ivp(quad, 0.0, 0.5, (0.0, 2.0), dt=5e-4)
    back = integrate_ivp(quad, fwd.x[-1], -fwd.v[-1], (0.0, 2.0), dt=5e-4)
    checks.append(_check("quadratic_gravity_time_reversal",
                         max(abs(back.x[-1] - 0.0), abs(-back.v[-1] - 0.5)),
                         1e-8))
    return checks


def suite_kernel(cfg: RunConfig) -> list[dict]:
    checks = []
    rng = np.random.default_rng(1)
    for name, spec in _suite_specs(cfg):
        kern = Kernel(spec)
        vv = max(van_vleck_check(kern, bd) for bd in _random_bds(spec, rng, 50))
        checks.append(_check(f"{name}_van_vleck", vv, 1e-6))
        tr = 0.0
        for bd in _random_bds(spec, rng, 20):
            t_mid = bd.ti + rng.uniform(0.2, 0.8) * bd.T
            tr = max(tr, transitivity_check(kern, bd, t_mid))
        checks.append(_check(f"{name}_transitivity", tr, 1e-10))

    sho = SystemSpec.oscillator(cfg.omega0, lam=0.0, m=cfg.m, hbar=cfg.hbar)
    near = SystemSpec.oscillator(cfg.omega0, lam=1e-8, m=cfg.m, hbar=cfg.hbar)
    k0, k1 = Kernel(sho), Kernel(near)
    dev = 0.0
    for bd in _random_bds(sho, rng, 20):
        a, b = k0(bd), k1(bd)
        dev = max(dev, abs(a - b) / abs(a))
    checks.append(_check("sho_reduction_lambda_1e-8", dev, 1e-6))

    cd = SystemSpec.oscillator(cfg.omega0, lam=2.0 * cfg.omega0,
                               m=cfg.m, hbar=cfg.hbar)
    ud = SystemSpec.oscillator(cfg.omega0, lam=2.0 * cfg.omega0 * (1.0 - 1e-5),
                               m=cfg.m, hbar=cfg.hbar)
    kcd, kud = Kernel(cd), Kernel(ud)
    dev = 0.0
    for bd in _random_bds(cd, rng, 20):
        a, b = kcd(bd), kud(bd)
        dev = max(dev, abs(a - b) / abs(a))
    checks.append(_check("cd_as_ud_limit", dev, 1e-5))
    return checks


def suite_wavepacket(cfg: RunConfig) -> list[dict]:
    checks = []
    lam_g = _gravity_lam(cfg)
    cases = [
        ("oscillator_ud",
         SystemSpec.oscillator(cfg.omega0, lam=cfg.lam, m=cfg.m, hbar=cfg.hbar),
         cfg.a),
        ("linear_gravity",
         SystemSpec.linear_gravity(cfg.g, lam=lam_g, m=cfg.m, hbar=cfg.hbar),
         0.0),
        ("quadratic_gravity",
         SystemSpec.quadratic_gravity(cfg.g, lam=lam_g, m=cfg.m, hbar=cfg.hbar),
         0.0),
    ]
    for name, spec, a in cases:
        packet = GaussianPacket.for_system(spec, a, cfg.sigma0)
        t_probe = 1.0
        center = peak_chart(spec, packet, 0.0)
        grid = Grid(center - 10.0 * cfg.sigma0, center + 10.0 * cfg.sigma0, 512)
        sampled = propagate_numeric(spec, packet, t_probe, grid)
        rho_num = np.abs(sampled.values) ** 2
        rho_ref = np.asarray(
            density_chart(spec, packet, sampled.points, t_probe), dtype=float)
        ipk = int(np.argmax(rho_ref))
        peak_err = abs(rho_num[ipk] - rho_ref[ipk]) / rho_ref[ipk]
        checks.append(_check(f"{name}_quadrature_peak", peak_err, 1e-6))
        tails = rho_ref < 1e-3 * rho_ref[ipk]
        tail_err = float(np.max(np.abs(rho_num[tails] - rho_ref[tails]))) \
            if tails.any() else 0.0
        checks.append(_check(f"{name}_quadrature_tails", tail_err, 1e-8))
        norm_err = max(abs(normalization_numeric(spec, packet, t) - 1.0)
                       for t in (0.0, 0.5, 1.0, 2.0, 5.0))
        checks.append(_check(f"{name}_normalization", norm_err, 1e-8))
        ivp = integrate_ivp(spec, a, 0.0, (0.0, 10.0), dt=2.5e-4)
        sel = slice(None, None, 100)
        dev = float(np.max(np.abs(
            np.asarray(peak(spec, packet, ivp.t[sel])) - ivp.x[sel])))
        checks.append(_check(f"{name}_peak_follows_classical", dev, 1e-6))
    return checks


def suite_geometry(cfg: RunConfig) -> list[dict]:
    checks = []
    lam_g = _gravity_lam(cfg)
    metric = Metric2D(lam=lam_g, g=cfg.g, C=1.0)
    xs = np.linspace(-2.0, 2.0, 5)
    cond = 0.0
    for x in xs:
        sym = christoffel_fd(metric, float(x))
        lam_eff = sym.g_x_xx
        # C^2 h'/(2 f h^2) recovered from the FD symbol G^y_xy = h'/2h
        g_eff = metric.C ** 2 * sym.g_y_xy / (float(metric.f(x)) * float(metric.h(x)))
        cond = max(cond, abs(lam_eff - lam_g) / lam_g, abs(g_eff - cfg.g) / cfg.g)
    checks.append(_check("metric_defining_conditions_fd", cond, 1e-8))

    curv = max(
        abs(curvature_fd(metric, float(x)).scalar - curvature(metric, float(x)).scalar)
        / abs(curvature(metric, float(x)).scalar)
        for x in xs
    )
    checks.append(_check("ricci_scalar_fd", curv, 1e-5))

    quad = SystemSpec.quadratic_gravity(cfg.g, lam=lam_g, m=cfg.m, hbar=cfg.hbar)
    ivp = integrate_ivp(quad, 0.0, 0.0, (0.0, 2.0), dt=1e-3)
    geo = integrate_geodesic(metric, 0.0, 0.0, (0.0, 2.0), dt=1e-3)
    checks.append(_check("geodesic_matches_rk4",
                         float(np.max(np.abs(geo.x - ivp.x))), 1e-6))
    geo10 = integrate_geodesic(Metric2D(lam=lam_g, g=cfg.g, C=10.0),
                               0.0, 0.0, (0.0, 2.0), dt=1e-3)
    checks.append(_check("geodesic_c_independence",
                         float(np.max(np.abs(geo.x - geo10.x))), 1e-9))
    cons = geo.conserved(metric)
    checks.append(_check("geodesic_first_integral",
                         float(np.max(np.abs(cons - metric.C)) / abs(metric.C)),
                         1e-8))

    tmap = TachyonMap.from_rates(lam_g, cfg.g)
    ivp_t = integrate_ivp(quad, 0.0, 0.0, (0.0, 3.0), dt=2e-4)
    checks.append(_check("tachyon_eom_residual",
                         tachyon_eom_check(tmap, ivp_t.t, ivp_t.x, ivp_t.v),
                         1e-6))
    ivp_term = integrate_ivp(quad, 0.0, 0.0, (0.0, 10.0 / tmap.alpha), dt=1e-3)
    checks.append(_check("tachyon_terminal_speed",
                         abs(tmap.b * ivp_term.v[-1] - 1.0), 1e-3))
    return checks


_SUITES = {
    "classical": suite_classical,
    "kernel": suite_kernel,
    "wavepacket": suite_wavepacket,
    "geometry": suite_geometry,
}


def cmd_verify(cfg: RunConfig, suite: str, out_path: Optional[Path]) -> int:
    if suite == "all":
        names = list(_SUITES)
    elif suite in _SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from "
                         f"{sorted(_SUITES)} or 'all'")
    checks: list[dict] = []
    for name in names:
        checks.extend(_SUITES[name](cfg))
    all_pass = True
    for c in checks:
        status = "PASS" if c["pass"] else "FAIL"
        all_pass &= c["pass"]
        print(f"{status}  {c['check']:45s} residual={c['residual']:.3e} "
              f"threshold={c['threshold']:.1e}")
    if out_path is not None:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(json.dumps(checks, indent=2) + "\n")
    if not all_pass:
        if out_path is None:
            print(json.dumps([c for c in checks if not c["pass"]], indent=2))
        return EXIT_ORACLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors (exit 1, not argparse's default 2)
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--system", choices=sorted(_SYSTEM_NAMES))
    p.add_argument("--lambda", dest="lam", type=float,
                   help="damping rate Lambda = beta/m")
    p.add_argument("--omega0", type=float)
    p.add_argument("--g", type=float)
    p.add_argument("--m", type=float)
    p.add_argument("--hbar", type=float)
    p.add_argument("--a", type=float, help="initial packet center")
    p.add_argument("--sigma0", type=float, help="initial packet width")
    p.add_argument("--tmax", dest="t_max", type=float)
    p.add_argument("--nt", dest="n_t", type=int)
    p.add_argument("--xmin", dest="x_min", type=float)
    p.add_argument("--xmax", dest="x_max", type=float)
    p.add_argument("--nx", dest="n_x", type=int)
    p.add_argument("--config", help="key=value config file; flags take precedence")
    p.add_argument("--out", help="output path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dampedpi",
                     description="damped-system propagators, wavepacket "
                                 "dispersion and verification oracles")
    sub = parser.add_subparsers(dest="command", required=True)
    pe = sub.add_parser("evolve", help="emit density and sigma_t CSV series")
    _add_common(pe)
    pv = sub.add_parser("verify", help="run oracle suites")
    _add_common(pv)
    pv.add_argument("--suite", default="all",
                    choices=[*sorted(_SUITES), "all"])
    ps = sub.add_parser("sweep", help="sigma_t family over a parameter")
    _add_common(ps)
    ps.add_argument("--param", required=True)
    ps.add_argument("--values", required=True,
                    help="comma-separated parameter values")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _build_config(args)
        if args.command == "evolve":
            return cmd_evolve(cfg, Path(args.out or "."))
        if args.command == "verify":
            out = Path(args.out) if args.out else None
            return cmd_verify(cfg, args.suite, out)
        values = [float(v) for v in args.values.split(",") if v.strip()]
        if not values:
            raise ValueError("--values must list at least one number")
        return cmd_sweep(cfg, args.param, values,
                         Path(args.out or "sweep.csv"))
    except (ValueError, FileNotFoundError) as exc:
        if isinstance(exc, FileNotFoundError):
            print(f"dampedpi: I/O error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"dampedpi: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"dampedpi: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
