"""Sweep runner: presets for the published figures, key=value configs, CSV out.

Example::

    secure-swipt --preset fig2 --trials 100000 --seed 7 --out fig2.csv

writes ``fig2.csv`` and ``fig2.csv.manifest``. The manifest is itself a
valid config file that reproduces the run.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .capacity import asymptotic_c_soc, secrecy_outage_capacity
from .montecarlo import MIN_CAPACITY_TRIALS, SweepRecord, empirical_secrecy_outage_capacity
from .params import FIELD_NAMES, InvalidParameterError, SystemParams, db_to_linear
from .splitter import optimize_theta

log = logging.getLogger(__name__)

PARAM_KEYS = frozenset(FIELD_NAMES) | {"snr_db"}
CONTROL_KEYS = frozenset({"preset", "sweep", "trials", "seed", "out", "optimize_theta", "grid_step", "workers"})
SWEEP_VARS = PARAM_KEYS - {"slot_t"}

DEFAULT_TRIALS = 100_000
DEFAULT_SEED = 2015


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    var: str
    lo: float
    hi: float
    step: float

    def __post_init__(self):
        if self.var not in SWEEP_VARS:
            raise ConfigError(f"cannot sweep {self.var!r}; choose from {sorted(SWEEP_VARS)}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and math.isfinite(self.step)):
            raise ConfigError("sweep bounds must be finite")
        if self.step <= 0 or self.hi < self.lo:
            raise ConfigError(f"empty sweep range {self}")

    def values(self):
        n = int(math.floor((self.hi - self.lo) / self.step + 1e-9))
        vals = [round(self.lo + k * self.step, 12) for k in range(n + 1)]
        if self.var == "n_r":
            vals = [int(round(v)) for v in vals]
        return vals

    def __str__(self):
        return f"{self.var}:{self.lo!r}:{self.hi!r}:{self.step!r}"

    @classmethod
    def parse(cls, text: str) -> "SweepSpec":
        parts = text.split(":")
        if len(parts) != 4:
            raise ConfigError(f"sweep must look like var:lo:hi:step, got {text!r}")
        try:
            lo, hi, step = (float(x) for x in parts[1:])
        except ValueError:
            raise ConfigError(f"non-numeric sweep bounds in {text!r}") from None
        return cls(parts[0].strip(), lo, hi, step)


@dataclass(frozen=True)
class ExperimentSpec:
    preset: str = "fig3"
    overrides: dict = field(default_factory=dict)
    sweep: SweepSpec | None = None
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    out: str = "results.csv"
    optimize_theta: bool = False
    grid_step: float = 1e-3
    workers: int = 1

    def base_params(self) -> SystemParams:
        return resolve_params(self.overrides)


def resolve_params(overrides: dict) -> SystemParams:
    kw = {k: v for k, v in overrides.items() if k != "snr_db"}
    if "snr_db" in overrides:
        kw["p_s"] = db_to_linear(overrides["snr_db"])
    return SystemParams(**kw)


def _merge(base: dict, extra: dict) -> dict:
    merged = dict(base)
    for key, value in extra.items():
        # snr_db and p_s describe the same quantity; the newest one wins
        if key == "snr_db":
            merged.pop("p_s", None)
        elif key == "p_s":
            merged.pop("snr_db", None)
        merged[key] = value
    return merged


PRESETS = {
    "fig3": ExperimentSpec(
        preset="fig3",
        overrides={"snr_db": 10.0, "epsilon": 0.05},
        sweep=SweepSpec("alpha_re", 0.5, 2.0, 0.1),
    ),
    "fig2": ExperimentSpec(
        preset="fig2",
        overrides={"snr_db": 0.0, "epsilon": 0.01, "alpha_re": 1.0},
        sweep=SweepSpec("alpha_sr", 0.1, 1.0, 0.1),
        optimize_theta=True,
    ),
    "fig4": ExperimentSpec(
        preset="fig4",
        overrides={"epsilon": 0.01, "alpha_re": 1.0},
        sweep=SweepSpec("snr_db", -10.0, 40.0, 5.0),
    ),
    "fig5": ExperimentSpec(
        preset="fig5",
        overrides={"epsilon": 0.01, "alpha_re": 1.0},
        sweep=SweepSpec("snr_db", -10.0, 30.0, 5.0),
        optimize_theta=True,
    ),
    "fig6": ExperimentSpec(
        preset="fig6",
        overrides={"snr_db": 0.0, "epsilon": 0.01},
        sweep=SweepSpec("alpha_re", 0.2, 2.0, 0.2),
        optimize_theta=True,
    ),
    "custom": ExperimentSpec(preset="custom"),
}


def preset_spec(name: str) -> ExperimentSpec:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


# ---------------------------------------------------------------------------
# config files
# ---------------------------------------------------------------------------

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _convert(key: str, raw: str):
    if key == "n_r":
        return int(raw)
    if key in PARAM_KEYS or key == "grid_step":
        return float(raw)
    if key in ("trials", "seed", "workers"):
        return int(raw)
    if key == "optimize_theta":
        low = raw.lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise ValueError(f"expected a boolean, got {raw!r}")
    if key == "sweep":
        return SweepSpec.parse(raw)
    return raw


def apply_settings(spec: ExperimentSpec, settings: dict) -> ExperimentSpec:
    """Apply converted key/value settings (no ``preset`` key) on top of ``spec``."""
    params = {k: v for k, v in settings.items() if k in PARAM_KEYS}
    control = {k: v for k, v in settings.items() if k in CONTROL_KEYS}
    spec = dataclasses.replace(spec, overrides=_merge(spec.overrides, params), **control)
    check_spec(spec)
    return spec


def check_spec(spec: ExperimentSpec):
    spec.base_params()
    if spec.trials != 0 and spec.trials < MIN_CAPACITY_TRIALS:
        raise ConfigError(f"trials must be 0 (analytic only) or >= {MIN_CAPACITY_TRIALS}")
    if spec.workers < 1:
        raise ConfigError("workers must be >= 1")
    if not 0.0 < spec.grid_step <= 0.01:
        raise ConfigError("grid_step must lie in (0, 0.01]")


def parse_config(path, preset: str | None = None) -> ExperimentSpec:
    """Read a key=value config file.

    Blank lines and ``#`` comments are ignored. ``preset`` (from the command
    line) must agree with any ``preset=`` line in the file.
    """
    text = Path(path).read_text(encoding="utf-8")
    entries = []
    seen = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line.strip()!r}")
        key, raw = (s.strip() for s in stripped.split("=", 1))
        if key not in PARAM_KEYS and key not in CONTROL_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in seen:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r} (first on line {seen[key]})")
        seen[key] = lineno
        entries.append((lineno, key, raw))

    name = preset
    for lineno, key, raw in entries:
        if key == "preset":
            if preset is not None and raw != preset:
                raise ConfigError(f"{path}:{lineno}: preset {raw!r} conflicts with requested {preset!r}")
            name = raw
    try:
        spec = preset_spec(name or "fig3")
    except ConfigError as exc:
        raise ConfigError(f"{path}:{seen['preset']}: {exc}") from None

    for lineno, key, raw in entries:
        if key == "preset":
            continue
        try:
            spec = apply_settings(spec, {key: _convert(key, raw)})
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"{path}:{lineno}: {exc}") from None
    return spec


def manifest_text(spec: ExperimentSpec) -> str:
    p = spec.base_params()
    lines = [
        f"# secure-swipt {__version__} run manifest",
        f"preset={spec.preset}",
    ]
    lines += [f"{name}={getattr(p, name)!r}" for name in FIELD_NAMES]
    lines += [
        f"sweep={spec.sweep}",
        f"trials={spec.trials}",
        f"seed={spec.seed}",
        f"optimize_theta={'true' if spec.optimize_theta else 'false'}",
        f"grid_step={spec.grid_step!r}",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------

CSV_COLUMNS = (
    "analytic_c_soc",
    "empirical_c_soc",
    "c_d",
    "asymptote",
    "theta_star",
    "baseline_c_soc",
    "trials",
    "seed",
)


def point_params(base: SystemParams, var: str, value) -> SystemParams:
    if var == "snr_db":
        return base.replace(p_s=db_to_linear(value))
    return base.replace(**{var: value})


def evaluate_point(spec: ExperimentSpec, base: SystemParams, index: int, value) -> SweepRecord:
    p = point_params(base, spec.sweep.var, value)
    baseline = secrecy_outage_capacity(p).c_soc
    theta_star = math.nan
    if spec.optimize_theta:
        split = optimize_theta(p, spec.grid_step)
        theta_star = split.theta_star
        p = p.replace(theta=theta_star)
    result = secrecy_outage_capacity(p)
    asymptote = asymptotic_c_soc(p) if 0.0 < p.theta < 1.0 else math.nan
    seed = spec.seed + index
    empirical = math.nan
    if spec.trials:
        empirical = empirical_secrecy_outage_capacity(p, spec.trials, seed)
    return SweepRecord(
        value=value,
        analytic_c_soc=result.c_soc,
        empirical_c_soc=empirical,
        c_d=result.c_d,
        asymptote=asymptote,
        theta=theta_star,
        baseline_c_soc=baseline,
        trials=spec.trials,
        seed=seed,
    )


def _fmt(x) -> str:
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return ""
    return format(x, ".10g")


def records_to_csv(var: str, records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow((var,) + CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                _fmt(r.value),
                _fmt(r.analytic_c_soc),
                _fmt(r.empirical_c_soc),
                _fmt(r.c_d),
                _fmt(r.asymptote),
                _fmt(r.theta),
                _fmt(r.baseline_c_soc),
                str(r.trials),
                str(r.seed),
            ]
        )
    return buf.getvalue()


def run_experiment(spec: ExperimentSpec):
    """Evaluate every sweep point and write the CSV and manifest.

    Returns the list of records in sweep order.
    """
    if spec.sweep is None:
        raise ConfigError("no sweep given; use --sweep var:lo:hi:step")
    check_spec(spec)
    base = spec.base_params()
    values = spec.sweep.values()
    jobs = list(enumerate(values))

    def run(job):
        index, value = job
        log.info("%s=%s", spec.sweep.var, value)
        return evaluate_point(spec, base, index, value)

    if spec.workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            records = list(pool.map(run, jobs))
    else:
        records = [run(j) for j in jobs]

    out = Path(spec.out)
    out.write_text(records_to_csv(spec.sweep.var, records), encoding="utf-8")
    Path(str(out) + ".manifest").write_text(manifest_text(spec), encoding="utf-8")
    return records


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="secure-swipt",
        description="Secrecy outage capacity sweeps for an LS-MIMO AF relay with power splitting.",
    )
    ap.add_argument("--preset", choices=sorted(PRESETS), help="figure preset (default fig3)")
    ap.add_argument("--config", help="key=value config file")
    ap.add_argument("--out", help="CSV output path")
    ap.add_argument("--trials", type=int, help="Monte Carlo trials per point, 0 to skip")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--sweep", help="var:lo:hi:step")
    ap.add_argument("--optimize-theta", action="store_true", default=None)
    ap.add_argument("--snr-db", type=float, help="source SNR in dB")
    ap.add_argument("--grid-step", type=float)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--set", dest="params", action="append", default=[], metavar="KEY=VALUE",
                    help="override a scenario parameter (repeatable)")
    ap.add_argument("-v", "--verbose", action="store_true")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def spec_from_args(args) -> ExperimentSpec:
    if args.config:
        spec = parse_config(args.config, preset=args.preset)
    else:
        spec = preset_spec(args.preset or "fig3")

    settings = {}
    for item in args.params:
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or key not in PARAM_KEYS:
            raise ConfigError(f"--set expects a scenario parameter KEY=VALUE, got {item!r}")
        settings[key] = _convert(key, raw.strip())
    if args.snr_db is not None:
        settings["snr_db"] = args.snr_db
    if args.sweep is not None:
        settings["sweep"] = SweepSpec.parse(args.sweep)
    for name in ("out", "trials", "seed", "optimize_theta", "grid_step", "workers"):
        value = getattr(args, name)
        if value is not None:
            settings[name] = value
    return apply_settings(spec, settings)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        spec = spec_from_args(args)
        run_experiment(spec)
    except (ConfigError, InvalidParameterError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"secure-swipt: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"secure-swipt: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
