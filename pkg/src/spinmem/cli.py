"""Command-line front end: spectra, efficiencies, sweeps, figures, optimisation."""
from __future__ import annotations

import argparse
import dataclasses
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__, atomic, cavity, field as fieldmod
from .errors import SpinmemError
from .figures import FIGURES, figure_dataset
from .io import write_dataset
from .optimize import optimize_pumping
from .params import (
    MediumParams,
    Scheme,
    db_to_linear,
    load_config,
    params_from_mapping,
    validate,
)

COMMANDS = ("spectrum", "spin-spectrum", "efficiency", "sweep", "figure", "optimize")
PARAM_FIELDS = [f.name for f in dataclasses.fields(MediumParams)]


@dataclass(frozen=True)
class GridSpec:
    omega_min: float = 0.0
    omega_max: float = 5.0
    points: int = 501
    log_grid: bool = False

    def __post_init__(self):
        if not self.omega_min < self.omega_max:
            raise ValueError("grid requires omega_min < omega_max")
        if self.points < 2:
            raise ValueError("grid requires at least 2 points")
        if self.log_grid and self.omega_min <= 0:
            raise ValueError("log grid requires omega_min > 0")

    def values(self):
        if self.log_grid:
            return np.logspace(np.log10(self.omega_min), np.log10(self.omega_max), self.points)
        return np.linspace(self.omega_min, self.omega_max, self.points)


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: MediumParams
    scheme: Scheme
    s_in_db: float = 3.0103
    grid: GridSpec = field(default_factory=GridSpec)
    out: str | None = None
    format: str = "csv"
    figure: str | None = None
    c_values: tuple | None = None
    rabi_bounds: tuple | None = None

    @property
    def s_in(self) -> float:
        return float(db_to_linear(self.s_in_db))

    def to_metadata(self) -> dict:
        meta = {"tool": "spinmem", "version": __version__, "command": self.command,
                "scheme": self.scheme.value, "s_in_db": self.s_in_db}
        meta.update({k: getattr(self.params, k) for k in PARAM_FIELDS})
        meta.update(dataclasses.asdict(self.grid))
        meta.update({"format": self.format, "out": self.out, "figure": self.figure,
                     "c_values": list(self.c_values) if self.c_values else None,
                     "rabi_bounds": list(self.rabi_bounds) if self.rabi_bounds else None})
        return meta

    @classmethod
    def from_metadata(cls, meta: dict) -> "RunConfig":
        def tup(v):
            if v is None:
                return None
            return tuple(float(x) for x in (v if isinstance(v, list) else [v]))

        params = MediumParams(**{k: meta[k] for k in PARAM_FIELDS})
        grid = GridSpec(**{f.name: meta[f.name] for f in dataclasses.fields(GridSpec)})
        return cls(command=meta["command"], params=params,
                   scheme=Scheme.parse(meta["scheme"]), s_in_db=meta["s_in_db"],
                   grid=grid, out=meta["out"], format=meta["format"],
                   figure=meta["figure"], c_values=tup(meta["c_values"]),
                   rabi_bounds=tup(meta["rabi_bounds"]))


# -- command implementations ----------------------------------------------------

def _emit(cfg: RunConfig, columns: dict, extra: dict | None = None):
    meta = cfg.to_metadata()
    if extra:
        meta.update(extra)
    write_dataset(cfg.out, columns, meta, cfg.format)


def cmd_spectrum(cfg: RunConfig):
    w = cfg.grid.values()
    s = fieldmod.s_out(w, cfg.s_in, cfg.params, cfg.scheme)
    _emit(cfg, {"omega_over_gamma": w, "s_out_linear": s, "s_out_db": 10 * np.log10(s)})


def cmd_spin_spectrum(cfg: RunConfig):
    w = cfg.grid.values()
    b = atomic.breakdown(w, cfg.params, cfg.scheme)
    _emit(cfg, {"omega_over_gamma": w, "b_f": b.b_f, "b_coh": b.b_coh,
                "b_spin": b.b_spin, "s_jx_normalized": b.total(cfg.s_in)})


def _efficiency_rows(cfg: RunConfig, cs):
    rows = {"cooperativity": [], "eta_exact": [], "eta_asymptotic": [], "scheme": []}
    for c in cs:
        p = _with_cooperativity(cfg.params, cfg.scheme, c)
        rep = atomic.efficiency_report(p, cfg.scheme)
        rows["cooperativity"].append(p.cooperativity_for(cfg.scheme))
        rows["eta_exact"].append(rep.eta_exact)
        rows["eta_asymptotic"].append(rep.eta_asymptotic)
        rows["scheme"].append(cfg.scheme.value)
    return rows


def _with_cooperativity(p: MediumParams, scheme: Scheme, c):
    if c is None:
        return p
    if scheme.is_cavity:
        return p.with_(g2n=c * p.cavity_T * p.gamma)
    return p.with_(transit=c * p.gamma / p.g2n)


def cmd_efficiency(cfg: RunConfig):
    rows = _efficiency_rows(cfg, [None])
    extra = {}
    if cfg.scheme is Scheme.CAVITY_RAMAN:
        extra["note"] = cavity.RAMAN_NOTE
    _emit(cfg, rows, extra)


def cmd_sweep(cfg: RunConfig):
    cs = cfg.c_values or (10.0, 100.0, 1000.0)
    _emit(cfg, _efficiency_rows(cfg, cs))


def cmd_figure(cfg: RunConfig, overrides: dict):
    cols, meta = figure_dataset(cfg.figure, **overrides)
    _emit(cfg, cols, {f"fig_{k}": v for k, v in meta.items() if k != "figure"})


def cmd_optimize(cfg: RunConfig):
    bounds = cfg.rabi_bounds or (0.1, 100.0)
    rep = optimize_pumping(cfg.params, cfg.scheme, bounds)
    flags = {f"flag_{k}": v for k, v in rep.regime_flags.items()}
    _emit(cfg, {"omega_rabi": [rep.omega_rabi], "pumping_rate": [rep.pumping_rate],
                "eta": [rep.eta]}, flags)


# -- argument parsing -----------------------------------------------------------

def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("medium")
    g.add_argument("--scheme", default="eit",
                   choices=[s.value for s in Scheme])
    g.add_argument("--gamma0", type=float)
    g.add_argument("--omega-rabi", type=float)
    g.add_argument("--delta", type=float, dest="delta1")
    g.add_argument("--g2n", type=float)
    g.add_argument("--transit", type=float)
    g.add_argument("--cooperativity", type=float)
    g.add_argument("--n-atoms", type=float)
    g.add_argument("--cavity-T", type=float, dest="cavity_T")
    g.add_argument("--config", help="key = value parameter file")
    g.add_argument("--s-in-db", type=float, default=3.0103,
                   help="input squeezing in dB below shot noise")
    o = p.add_argument_group("grid and output")
    o.add_argument("--omega-min", type=float)
    o.add_argument("--omega-max", type=float)
    o.add_argument("--points", type=int)
    o.add_argument("--log-grid", action="store_true")
    o.add_argument("--format", choices=("csv", "json"), default="csv")
    o.add_argument("--out", help="output path (default: stdout)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="spinmem", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="outgoing field noise spectrum")
    sub.add_parser("spin-spectrum", parents=[common], help="collective spin noise spectrum")
    sub.add_parser("efficiency", parents=[common], help="squeezing transfer efficiency")
    sw = sub.add_parser("sweep", parents=[common], help="efficiency versus cooperativity")
    sw.add_argument("--c-values", type=float, nargs="+")
    fg = sub.add_parser("figure", parents=[common], help="dataset for one of the reference figures")
    fg.add_argument("name", choices=sorted(FIGURES))
    op = sub.add_parser("optimize", parents=[common], help="best control Rabi frequency")
    op.add_argument("--rabi-min", type=float, default=0.1)
    op.add_argument("--rabi-max", type=float, default=100.0)
    return parser


def config_from_args(args) -> RunConfig:
    scheme = Scheme.parse(args.scheme)
    values = load_config(args.config) if args.config else {}
    for key in ("gamma0", "omega_rabi", "delta1", "g2n", "transit", "cooperativity",
                "n_atoms", "cavity_T"):
        v = getattr(args, key)
        if v is not None:
            values[key] = v
    if values.get("transit") is None and values.get("cooperativity") is None:
        values["cooperativity"] = 100.0
    params = params_from_mapping(values, scheme)
    grid_kw = {k: getattr(args, k) for k in ("omega_min", "omega_max", "points")
               if getattr(args, k) is not None}
    grid = GridSpec(log_grid=args.log_grid, **grid_kw)
    return RunConfig(
        command=args.command, params=params, scheme=scheme, s_in_db=args.s_in_db,
        grid=grid, out=args.out, format=args.format,
        figure=getattr(args, "name", None),
        c_values=tuple(args.c_values) if getattr(args, "c_values", None) else None,
        rabi_bounds=((args.rabi_min, args.rabi_max) if args.command == "optimize" else None),
    )


def _figure_overrides(args, argv) -> dict:
    given = set(argv)
    out = {}
    if args.name in ("fig1", "fig2", "fig3", "fig4"):
        if "--cooperativity" in given:
            out["cooperativity"] = args.cooperativity
        if "--s-in-db" in given:
            out["s_in"] = float(db_to_linear(args.s_in_db))
        if any(f in given for f in ("--omega-min", "--omega-max", "--points", "--log-grid")):
            defaults = FIGURES[args.name].__defaults__[-1]
            lo, hi, n, lg = defaults
            out["grid"] = (args.omega_min if args.omega_min is not None else lo,
                           args.omega_max if args.omega_max is not None else hi,
                           args.points if args.points is not None else n,
                           args.log_grid or lg)
    if args.name in ("fig2", "fig4", "fig5") and args.gamma0 is not None:
        out["gamma0"] = args.gamma0
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if cfg.command != "figure":
            validate(cfg.params, cfg.scheme)
        if cfg.command == "spectrum":
            cmd_spectrum(cfg)
        elif cfg.command == "spin-spectrum":
            cmd_spin_spectrum(cfg)
        elif cfg.command == "efficiency":
            cmd_efficiency(cfg)
        elif cfg.command == "sweep":
            cmd_sweep(cfg)
        elif cfg.command == "figure":
            cmd_figure(cfg, _figure_overrides(args, argv))
        elif cfg.command == "optimize":
            cmd_optimize(cfg)
    except (SpinmemError, ValueError, OSError) as exc:
        print(f"spinmem: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
