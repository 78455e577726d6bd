"""Command-line harness: scenario configs, CSV/plot emission, comparisons.

Scenarios are described by an INI-style config file (sections [atom],
[drive], [numerics], [output], [sweep]) plus command-line overrides; the
subcommand selects the mode.  All outputs are deterministic: running the
same config twice produces byte-identical CSV files.

Exit codes: 0 success, 2 validation error, 3 numerical-convergence
failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from dataclasses import dataclass, field, replace

import numpy as np

from .core import (AtomParams, ConstantDrive, ConvergenceError, DomainError,
                   DriveProfile, ExpRampDrive, FrequencyGrid, GridMismatchError,
                   IntegrationError, PumpspecError, SpectrumResult,
                   TruncationError, ValidationError, peak_pair)
from .correlation import (analytic_spectrum, gamma_t_limit_spectrum,
                          qrt_correlation, spectrum_from_correlation)
from .lindblad import PopulationTrace, propagate
from .trajectory import band_weight, single_photon_spectrum, transient_spectrum

MODES = ("populations", "spectrum-analytic", "spectrum-qrt",
         "spectrum-trajectory", "spectrum-transient", "compare", "sweep")

SWEEP_PARAMETERS = ("delta", "rise_time", "rabi")

# fictitious recycling rate used for the regression spectrum when the
# configured gamma_t is exactly zero
QRT_FICTITIOUS_GAMMA_T = 1e-3

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


@dataclass(frozen=True)
class NumericsConfig:
    dt: float = 1e-3
    t_end: float = 40.0
    tau: float = 40.0
    n_half: int = 64

    def __post_init__(self):
        for name in ("dt", "t_end", "tau"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0:
                raise ValidationError(f"numerics.{name} must be > 0, got {v}")
        if self.n_half < 1:
            raise ValidationError(f"numerics.n_half must be >= 1, got {self.n_half}")


@dataclass(frozen=True)
class ScenarioConfig:
    mode: str
    atom: AtomParams = field(default_factory=AtomParams)
    drive_type: str = "constant"
    rise_time: float = 1.0
    t_start: float = 0.0
    numerics: NumericsConfig = field(default_factory=NumericsConfig)
    out_dir: str = "out"
    emit_plot: bool = False
    sweep_parameter: str | None = None
    sweep_values: tuple[float, ...] = ()

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.drive_type not in ("constant", "expramp"):
            raise ValidationError(
                f"drive.type must be 'constant' or 'expramp', got {self.drive_type!r}")
        if self.drive_type == "expramp" and self.rise_time <= 0:
            raise ValidationError(f"drive.rise_time must be > 0, got {self.rise_time}")
        if self.mode == "sweep":
            if self.sweep_parameter not in SWEEP_PARAMETERS:
                raise ValidationError(
                    f"sweep.parameter must be one of {SWEEP_PARAMETERS}, "
                    f"got {self.sweep_parameter!r}")
            if len(self.sweep_values) < 1:
                raise ValidationError("sweep.values must list at least one value")
            if self.sweep_parameter == "rise_time" and self.drive_type != "expramp":
                raise ValidationError("sweep.parameter rise_time needs drive.type = expramp")

    def drive(self) -> DriveProfile:
        if self.drive_type == "constant":
            return ConstantDrive(self.atom.rabi)
        return ExpRampDrive(omega_max=self.atom.rabi, rise_time=self.rise_time,
                            t_start=self.t_start)

    def grid(self) -> FrequencyGrid:
        return FrequencyGrid(tau=self.numerics.tau, n_half=self.numerics.n_half)


_FILE_KEYS = {
    "atom": {"rabi": float, "gamma_e": float, "gamma_t": float, "delta": float},
    "drive": {"type": str, "rise_time": float, "t_start": float},
    "numerics": {"dt": float, "t_end": float, "tau": float, "n_half": int},
    "output": {"directory": str, "emit_plot": bool},
    "sweep": {"parameter": str, "values": str},
}


def _parse_bool(section: str, key: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValidationError(f"{section}.{key}: expected a boolean, got {raw!r}")


def _coerce(section: str, key: str, raw: str, typ):
    if typ is bool:
        return _parse_bool(section, key, raw)
    try:
        return typ(raw)
    except ValueError:
        raise ValidationError(
            f"{section}.{key}: expected {typ.__name__}, got {raw!r}") from None


def parse_config(mode: str, text: str = "", overrides: dict | None = None) -> ScenarioConfig:
    """Build a validated ScenarioConfig from config text plus overrides.

    Overrides (typically from command-line flags) win over file values;
    unknown sections or keys fail with the offending key path.  An empty
    file with no overrides yields the documented defaults.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ValidationError(f"config file is not valid INI: {exc}") from None

    values: dict[str, dict] = {s: {} for s in _FILE_KEYS}
    for section in parser.sections():
        if section not in _FILE_KEYS:
            raise ValidationError(f"unknown config section [{section}]")
        for key, raw in parser.items(section):
            if key not in _FILE_KEYS[section]:
                raise ValidationError(f"unknown config key {section}.{key}")
            values[section][key] = _coerce(section, key, raw, _FILE_KEYS[section][key])

    for path, v in (overrides or {}).items():
        if v is None:
            continue
        section, key = path.split(".", 1)
        values[section][key] = v

    atom = AtomParams(
        rabi=values["atom"].get("rabi", 5.0),
        gamma_e=values["atom"].get("gamma_e", 1.0),
        gamma_t=values["atom"].get("gamma_t", 0.0),
        delta=values["atom"].get("delta", 0.0),
    )
    numerics = NumericsConfig(
        dt=values["numerics"].get("dt", 1e-3),
        t_end=values["numerics"].get("t_end", 40.0),
        tau=values["numerics"].get("tau", 40.0),
        n_half=values["numerics"].get("n_half", 64),
    )
    sweep_values: tuple[float, ...] = ()
    if "values" in values["sweep"]:
        raw = values["sweep"]["values"]
        if isinstance(raw, str):
            parts = [p for chunk in raw.split(",") for p in chunk.split()]
            try:
                sweep_values = tuple(float(p) for p in parts)
            except ValueError:
                raise ValidationError(f"sweep.values: expected numbers, got {raw!r}") from None
        else:
            sweep_values = tuple(raw)
    return ScenarioConfig(
        mode=mode,
        atom=atom,
        drive_type=values["drive"].get("type", "constant"),
        rise_time=values["drive"].get("rise_time", 1.0),
        t_start=values["drive"].get("t_start", 0.0),
        numerics=numerics,
        out_dir=values["output"].get("directory", "out"),
        emit_plot=values["output"].get("emit_plot", False),
        sweep_parameter=values["sweep"].get("parameter"),
        sweep_values=sweep_values,
    )


# ---------------------------------------------------------------------------
# deterministic CSV emission
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{x:.12g}"


def write_populations_csv(trace: PopulationTrace, path: str) -> None:
    cols = ["t", "rho_gg", "rho_ee", "rho_tt",
            "re_ge", "im_ge", "re_et", "im_et", "re_gt", "im_gt"]
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(cols) + "\n")
        for i in range(trace.times.size):
            row = (trace.times[i], trace.rho_gg[i], trace.rho_ee[i], trace.rho_tt[i],
                   trace.coh_ge[i].real, trace.coh_ge[i].imag,
                   trace.coh_et[i].real, trace.coh_et[i].imag,
                   trace.coh_gt[i].real, trace.coh_gt[i].imag)
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_spectrum_csv(spec: SpectrumResult, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("omega,s_re,s_im,s_abs2\n")
        for w, s, a in zip(spec.grid.omegas, spec.s_values, spec.abs2):
            fh.write(f"{_fmt(w)},{_fmt(s.real)},{_fmt(s.imag)},{_fmt(a)}\n")


def write_csv(result, path: str) -> None:
    """Dispatch on the result type (population trace or spectrum)."""
    if isinstance(result, PopulationTrace):
        write_populations_csv(result, path)
    elif isinstance(result, SpectrumResult):
        write_spectrum_csv(result, path)
    else:
        raise ValidationError(f"no CSV writer for {type(result).__name__}")


# ---------------------------------------------------------------------------
# plotting (vector graphics)
# ---------------------------------------------------------------------------

def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_populations(trace: PopulationTrace, path: str) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(trace.times, trace.rho_gg, "-", label=r"$\rho_{gg}$")
    ax.plot(trace.times, trace.rho_ee, "--", label=r"$\rho_{ee}$")
    ax.plot(trace.times, trace.rho_tt, "-.", label=r"$\rho_{tt}$")
    ax.set_xlabel("t")
    ax.set_ylabel("population")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def emit_plot(result, path: str) -> None:
    """Dispatch on the result type (population trace or spectrum)."""
    if isinstance(result, PopulationTrace):
        plot_populations(result, path)
    elif isinstance(result, SpectrumResult):
        plot_spectra({"spectrum": result}, path)
    else:
        raise ValidationError(f"no plot writer for {type(result).__name__}")


def plot_spectra(spectra: dict[str, SpectrumResult], path: str,
                 normalized: bool = True) -> None:
    plt = _pyplot()
    styles = ["-", "-.", "--", ":"]
    fig, ax = plt.subplots(figsize=(6, 4))
    for (label, spec), style in zip(spectra.items(), styles * 8):
        y = spec.abs2 / spec.abs2.max() if (normalized and spec.abs2.max() > 0) else spec.abs2
        ax.plot(spec.grid.omegas, y, style, label=label)
    ax.set_xlabel(r"$\omega$")
    ax.set_ylabel(r"$|S(\omega)|^2$" + (" (normalized)" if normalized else ""))
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# ---------------------------------------------------------------------------
# comparison report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MethodSummary:
    label: str
    peak_lo: float
    peak_hi: float
    separation: float
    band_weight_half: float


@dataclass(frozen=True)
class PairDifference:
    first: str
    second: str
    linf: float
    l2: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.linf < self.tolerance


@dataclass(frozen=True)
class ComparisonReport:
    """Cross-method summary on one shared frequency grid."""

    methods: tuple[MethodSummary, ...]
    pairs: tuple[PairDifference, ...]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs)

    def lines(self) -> list[str]:
        out = []
        for m in self.methods:
            out.append(f"{m.label}: peaks at {m.peak_lo:+.4f} / {m.peak_hi:+.4f}, "
                       f"separation {m.separation:.4f}, "
                       f"band_weight(0.5) {m.band_weight_half:.3e}")
        for p in self.pairs:
            verdict = "pass" if p.ok else "FAIL"
            out.append(f"{p.first} vs {p.second}: L_inf {p.linf:.4f} "
                       f"(tol {p.tolerance:g}), L2 {p.l2:.4f} -> {verdict}")
        return out


_PAIR_TOLERANCES = (
    ("qrt", "analytic", 0.02),
    ("trajectory", "analytic", 0.05),
    ("trajectory", "qrt", 0.05),
)


def build_comparison(spectra: dict[str, SpectrumResult]) -> ComparisonReport:
    grids = {(s.grid.tau, s.grid.n_half) for s in spectra.values()}
    if len(grids) != 1:
        raise ValidationError("comparison requires identical frequency grids")
    methods = []
    norm = {}
    for label, spec in spectra.items():
        lo, hi = peak_pair(spec.grid, spec.abs2)
        methods.append(MethodSummary(
            label=label, peak_lo=lo, peak_hi=hi, separation=hi - lo,
            band_weight_half=band_weight(spec, 0.5)))
        peak = spec.abs2.max()
        norm[label] = spec.abs2 / peak if peak > 0 else spec.abs2
    pairs = []
    for first, second, tol in _PAIR_TOLERANCES:
        if first in norm and second in norm:
            d = norm[first] - norm[second]
            pairs.append(PairDifference(
                first=first, second=second,
                linf=float(np.max(np.abs(d))),
                l2=float(np.sqrt(np.mean(d * d))),
                tolerance=tol))
    return ComparisonReport(methods=tuple(methods), pairs=tuple(pairs))


def write_comparison_csv(report: ComparisonReport, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("method,peak_lo,peak_hi,separation,band_weight_0p5\n")
        for m in report.methods:
            fh.write(f"{m.label},{_fmt(m.peak_lo)},{_fmt(m.peak_hi)},"
                     f"{_fmt(m.separation)},{_fmt(m.band_weight_half)}\n")
        fh.write("pair,linf,l2,tolerance,pass\n")
        for p in report.pairs:
            fh.write(f"{p.first}|{p.second},{_fmt(p.linf)},{_fmt(p.l2)},"
                     f"{_fmt(p.tolerance)},{str(p.ok).lower()}\n")


# ---------------------------------------------------------------------------
# scenario execution
# ---------------------------------------------------------------------------

def _qrt_spectrum(cfg: ScenarioConfig, grid: FrequencyGrid):
    """Regression spectrum, via the limiting procedure when gamma_t == 0."""
    if cfg.atom.gamma_t > 0:
        corr = qrt_correlation(cfg.atom, dt=cfg.numerics.dt)
        return spectrum_from_correlation(corr, grid), None
    sequence = (0.1, 0.01, QRT_FICTITIOUS_GAMMA_T)
    return gamma_t_limit_spectrum(cfg.atom, grid, sequence, dt=cfg.numerics.dt)


def _write_limit_report(report, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("gamma_t,linf_diff_from_previous\n")
        for i, g in enumerate(report.gamma_ts):
            d = "" if i == 0 else _fmt(report.linf_diffs[i - 1])
            fh.write(f"{_fmt(g)},{d}\n")


def _sweep_point(cfg: ScenarioConfig, value: float) -> tuple[float, SpectrumResult]:
    if cfg.sweep_parameter == "delta":
        atom = replace(cfg.atom, delta=value)
        point = replace(cfg, atom=atom)
    elif cfg.sweep_parameter == "rabi":
        atom = replace(cfg.atom, rabi=value)
        point = replace(cfg, atom=atom)
    else:
        point = replace(cfg, rise_time=value)
    spec = transient_spectrum(point.atom, point.drive(), point.numerics.tau,
                              point.grid(), dt=point.numerics.dt)
    return value, spec


def run_scenario(cfg: ScenarioConfig, log=print) -> int:
    """Execute one validated scenario, writing files under cfg.out_dir.

    Each mode computes its results fully before the first file is
    created, so a failed run leaves no partial outputs behind.
    """
    grid = cfg.grid()
    written: list[str] = []

    def out(name: str) -> str:
        os.makedirs(cfg.out_dir, exist_ok=True)
        path = os.path.join(cfg.out_dir, name)
        written.append(path)
        return path

    if cfg.mode == "populations":
        rho0 = np.diag([1.0, 0.0, 0.0]).astype(complex)
        trace = propagate(rho0, cfg.atom, cfg.drive(), cfg.numerics.t_end,
                          dt=cfg.numerics.dt)
        write_populations_csv(trace, out("populations.csv"))
        if cfg.emit_plot:
            plot_populations(trace, out("populations.svg"))

    elif cfg.mode == "spectrum-analytic":
        spec = analytic_spectrum(cfg.atom, grid)
        write_spectrum_csv(spec, out("spectrum_analytic.csv"))
        if cfg.emit_plot:
            plot_spectra({"analytic": spec}, out("spectrum_analytic.svg"))

    elif cfg.mode == "spectrum-qrt":
        spec, limit_report = _qrt_spectrum(cfg, grid)
        write_spectrum_csv(spec, out("spectrum_qrt.csv"))
        if limit_report is not None:
            _write_limit_report(limit_report, out("qrt_convergence.csv"))
            log(limit_report.summary())
        if cfg.emit_plot:
            plot_spectra({"qrt": spec}, out("spectrum_qrt.svg"))

    elif cfg.mode == "spectrum-trajectory":
        spec = single_photon_spectrum(cfg.atom, ConstantDrive(cfg.atom.rabi),
                                      cfg.numerics.tau, grid, dt=cfg.numerics.dt)
        write_spectrum_csv(spec, out("spectrum_trajectory.csv"))
        if cfg.emit_plot:
            plot_spectra({"trajectory": spec}, out("spectrum_trajectory.svg"))

    elif cfg.mode == "spectrum-transient":
        spec = transient_spectrum(cfg.atom, cfg.drive(), cfg.numerics.tau, grid,
                                  dt=cfg.numerics.dt)
        write_spectrum_csv(spec, out("spectrum_transient.csv"))
        if cfg.emit_plot:
            plot_spectra({"transient": spec}, out("spectrum_transient.svg"))

    elif cfg.mode == "compare":
        analytic = analytic_spectrum(cfg.atom, grid)
        qrt, _ = _qrt_spectrum(cfg, grid)
        traj = single_photon_spectrum(cfg.atom, ConstantDrive(cfg.atom.rabi),
                                      cfg.numerics.tau, grid, dt=cfg.numerics.dt)
        spectra = {"analytic": analytic, "qrt": qrt, "trajectory": traj}
        for label, spec in spectra.items():
            write_spectrum_csv(spec, out(f"spectrum_{label}.csv"))
        report = build_comparison(spectra)
        write_comparison_csv(report, out("compare_report.csv"))
        for line in report.lines():
            log(line)
        if cfg.emit_plot:
            plot_spectra(spectra, out("compare.svg"))

    elif cfg.mode == "sweep":
        results = _run_sweep(cfg)
        summary_rows = []
        for value, spec in results:
            write_spectrum_csv(spec, out(f"sweep_{cfg.sweep_parameter}_{_fmt(value)}.csv"))
            lo, hi = peak_pair(grid, spec.abs2)
            summary_rows.append((value, hi - lo, band_weight(spec, 0.5)))
        with open(out("sweep_summary.csv"), "w", newline="\n") as fh:
            fh.write(f"{cfg.sweep_parameter},peak_separation,band_weight_0p5\n")
            for value, sep, bw in summary_rows:
                fh.write(f"{_fmt(value)},{_fmt(sep)},{_fmt(bw)}\n")
        if cfg.emit_plot:
            plot_spectra({f"{cfg.sweep_parameter}={_fmt(v)}": s for v, s in results},
                         out("sweep.svg"))

    for path in written:
        log(f"wrote {path}")
    return EXIT_OK


def _run_sweep(cfg: ScenarioConfig) -> list[tuple[float, SpectrumResult]]:
    workers = os.environ.get("PUMPSPEC_WORKERS", "")
    if workers:
        try:
            n_workers = int(workers)
        except ValueError:
            raise ValidationError(
                f"PUMPSPEC_WORKERS must be an integer, got {workers!r}") from None
        if n_workers > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=n_workers) as pool:
                futures = [pool.submit(_sweep_point, cfg, v) for v in cfg.sweep_values]
                return [f.result() for f in futures]
    return [_sweep_point(cfg, v) for v in cfg.sweep_values]


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="INI config file (sections: atom, drive, "
                                      "numerics, output, sweep)")
    sub.add_argument("--out-dir", dest="out_dir", help="output directory (default: out)")
    sub.add_argument("--plot", action="store_true", default=None,
                     help="also emit SVG plots")
    sub.add_argument("--rabi", type=float, help="peak Rabi frequency (default: 5)")
    sub.add_argument("--gamma-e", type=float, dest="gamma_e",
                     help="e -> t emission rate (default: 1)")
    sub.add_argument("--gamma-t", type=float, dest="gamma_t",
                     help="t -> g recycling rate (default: 0)")
    sub.add_argument("--delta", type=float, help="laser detuning (default: 0)")
    sub.add_argument("--drive", choices=("constant", "expramp"),
                     help="drive envelope type (default: constant)")
    sub.add_argument("--rise-time", type=float, dest="rise_time",
                     help="ramp time scale for expramp drives (default: 1)")
    sub.add_argument("--t-start", type=float, dest="t_start",
                     help="ramp switch-on time (default: 0)")
    sub.add_argument("--dt", type=float, help="integration step (default: 0.001)")
    sub.add_argument("--t-end", type=float, dest="t_end",
                     help="population integration time (default: 40)")
    sub.add_argument("--tau", type=float, help="spectrum observation interval (default: 40)")
    sub.add_argument("--n-half", type=int, dest="n_half",
                     help="frequency grid half-size (default: 64)")


def _overrides_from_args(args: argparse.Namespace) -> dict:
    mapping = {
        "atom.rabi": args.rabi, "atom.gamma_e": args.gamma_e,
        "atom.gamma_t": args.gamma_t, "atom.delta": args.delta,
        "drive.type": args.drive, "drive.rise_time": args.rise_time,
        "drive.t_start": args.t_start,
        "numerics.dt": args.dt, "numerics.t_end": args.t_end,
        "numerics.tau": args.tau, "numerics.n_half": args.n_half,
        "output.directory": args.out_dir, "output.emit_plot": args.plot,
    }
    if getattr(args, "sweep_parameter", None) is not None:
        mapping["sweep.parameter"] = args.sweep_parameter
    if getattr(args, "sweep_values", None) is not None:
        mapping["sweep.values"] = args.sweep_values
    return mapping


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pumpspec",
        description="Three-level optical-pumping dynamics and e->t emission "
                    "spectra (closed form, regression theorem, conditional "
                    "trajectories).")
    subs = parser.add_subparsers(dest="mode", required=True)
    help_by_mode = {
        "populations": "integrate the master equation and record populations",
        "spectrum-analytic": "closed-form doublet spectrum",
        "spectrum-qrt": "regression-theorem spectrum (gamma_t -> 0 limit if gamma_t = 0)",
        "spectrum-trajectory": "one-photon conditional-dynamics spectrum",
        "spectrum-transient": "trajectory spectrum with ramped drive / detuning",
        "compare": "run all three spectra on one grid and report differences",
        "sweep": "repeat the transient spectrum over a parameter list",
    }
    for mode in MODES:
        sub = subs.add_parser(mode, help=help_by_mode[mode])
        _add_common_flags(sub)
        if mode == "sweep":
            sub.add_argument("--sweep-parameter", dest="sweep_parameter",
                             choices=SWEEP_PARAMETERS)
            sub.add_argument("--sweep-values", dest="sweep_values",
                             help="comma-separated values, e.g. 0.2,1,5")
    return parser


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        text = ""
        if args.config:
            try:
                with open(args.config) as fh:
                    text = fh.read()
            except OSError as exc:
                print(f"error: cannot read config: {exc}", file=sys.stderr)
                return EXIT_VALIDATION
        cfg = parse_config(args.mode, text, _overrides_from_args(args))
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        return run_scenario(cfg)
    except (ValidationError, DomainError, GridMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ConvergenceError, TruncationError, IntegrationError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except PumpspecError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
