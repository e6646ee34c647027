"""Command-line entry point: config ingestion, sweeps, CSV and manifest.

One strictly validated JSON document drives everything. The sweep emits
one CSV row per (g, tau) pair with literal NA cells for anything a point
could not produce, a CSV per requested phase-space map, and a manifest
holding the fully resolved configuration so any run can be replayed.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import dataclasses
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import numerics
from .catmodel import TraceZeroSampler, sample_initial, steady_photon_number
from .errors import ConfigError, LiokryError
from .fock import FockSpace, KerrCatParams
from .krylov import (
    METHODS,
    KrylovConfig,
    build_basis,
    reconstruct_eigenstate,
    solve_gevp,
)
from .liouville import (
    Superket,
    Superoperator,
    devectorize,
    full_spectrum_oracle,
    kerr_cat_liouvillian,
    non_normality,
    steady_state,
)
from .wigner import PhaseSpaceGrid, WignerMap, wigner_of

__all__ = [
    "RunConfig",
    "SweepRow",
    "parse_config",
    "run_sweep",
    "emit_outputs",
    "main",
]

SWEEP_HEADER = (
    "g,alpha_sq_mf,gap_oracle,gap_krylov_mean,gap_krylov_min,gap_krylov_max,"
    "cond_s,kept_rank,non_normality,eigvec_cond,tau,D,wall_time_ms"
)

_SPACINGS = ("log", "linear")
_STATES = ("steady", "slow")
_SOURCES = ("oracle", "krylov")


@dataclass(frozen=True)
class GSweep:
    start: float
    stop: float
    steps: int
    spacing: str

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.steps)
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class KrylovPlan:
    dim_d: int
    tau_list: tuple[float, ...]
    threshold: float
    method: str
    repetitions: int
    seed: int
    n_pairs: int


@dataclass(frozen=True)
class OutputPlan:
    directory: str
    formats: tuple[str, ...]


@dataclass(frozen=True)
class WignerRequest:
    g: float
    state: str
    source: str


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run description; every default is explicit."""

    n_levels: int
    kappa_1ph: float
    delta: float
    kerr: float
    g_sweep: GSweep
    krylov: KrylovPlan
    outputs: OutputPlan
    oracle_enabled: bool
    wigner_requests: tuple[WignerRequest, ...]

    def params_at(self, g: float) -> KerrCatParams:
        return KerrCatParams(
            delta=self.delta, kerr=self.kerr, drive=g, kappa_1ph=self.kappa_1ph
        )

    def to_document(self) -> dict:
        """The explicit JSON document; parse_config inverts this exactly."""
        return {
            "n_levels": self.n_levels,
            "kappa_1ph": self.kappa_1ph,
            "delta": self.delta,
            "kerr": self.kerr,
            "g_sweep": {
                "start": self.g_sweep.start,
                "stop": self.g_sweep.stop,
                "steps": self.g_sweep.steps,
                "spacing": self.g_sweep.spacing,
            },
            "krylov": {
                "dim_d": self.krylov.dim_d,
                "tau_list": list(self.krylov.tau_list),
                "threshold": self.krylov.threshold,
                "method": self.krylov.method,
                "repetitions": self.krylov.repetitions,
                "seed": self.krylov.seed,
                "n_pairs": self.krylov.n_pairs,
            },
            "outputs": {
                "directory": self.outputs.directory,
                "formats": list(self.outputs.formats),
            },
            "oracle_enabled": self.oracle_enabled,
            "wigner_requests": [dataclasses.asdict(r) for r in self.wigner_requests],
        }


@dataclass(frozen=True)
class SweepRow:
    """One (g, tau) cell of a sweep; None marks an NA cell."""

    g: float
    alpha_sq_mf: float | None
    gap_oracle: float | None
    gap_krylov_mean: float | None
    gap_krylov_min: float | None
    gap_krylov_max: float | None
    cond_s: float | None
    kept_rank: int | None
    non_normality: float | None
    eigvec_cond: float | None
    tau: float
    dim_d: int
    wall_time_ms: float
    status: str


def _no_duplicates(pairs: list[tuple[str, object]]) -> dict:
    seen: dict[str, object] = {}
    for key, value in pairs:
        if key in seen:
            raise ConfigError(f"duplicate key {key!r}")
        seen[key] = value
    return seen


class _Section:
    """One dict level of the config; tracks its key path and leftovers."""

    def __init__(self, mapping: object, path: str):
        if not isinstance(mapping, dict):
            raise ConfigError(f"{path or 'document'} must be an object")
        self.mapping = dict(mapping)
        self.path = path

    def _label(self, key: str) -> str:
        return f"{self.path}.{key}" if self.path else key

    def has(self, key: str) -> bool:
        return key in self.mapping

    def take(self, key: str, kind: type, default):
        if key not in self.mapping:
            if default is _REQUIRED:
                raise ConfigError(f"missing required field {self._label(key)}")
            return default
        value = self.mapping.pop(key)
        if kind is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if kind in (int, float) and isinstance(value, bool):
            raise ConfigError(f"{self._label(key)} must be {kind.__name__}, got bool")
        if not isinstance(value, kind):
            raise ConfigError(
                f"{self._label(key)} must be {kind.__name__}, got {type(value).__name__}"
            )
        if kind is float and not math.isfinite(value):
            raise ConfigError(f"{self._label(key)} must be finite")
        return value

    def finish(self) -> None:
        for key in self.mapping:
            raise ConfigError(f"unknown key {self._label(key)}")


_REQUIRED = object()


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def parse_config(text: str) -> RunConfig:
    """Parse and validate a JSON config document into a RunConfig."""
    try:
        document = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    root = _Section(document, "")

    n_levels = root.take("n_levels", int, 30)
    _check(n_levels >= 2, f"n_levels must be >= 2, got {n_levels}")
    kappa_1ph = root.take("kappa_1ph", float, 1.0)
    _check(kappa_1ph >= 0.0, f"kappa_1ph must be >= 0, got {kappa_1ph}")
    delta = root.take("delta", float, 0.2)
    kerr = root.take("kerr", float, 0.05)
    _check(kerr > 0.0, f"kerr must be positive, got {kerr}")

    sweep_sec = _Section(root.take("g_sweep", dict, _REQUIRED), "g_sweep")
    start = sweep_sec.take("start", float, _REQUIRED)
    stop = sweep_sec.take("stop", float, _REQUIRED)
    steps = sweep_sec.take("steps", int, _REQUIRED)
    spacing = sweep_sec.take("spacing", str, "log")
    sweep_sec.finish()
    _check(steps >= 1, f"g_sweep.steps must be >= 1, got {steps}")
    _check(spacing in _SPACINGS, f"g_sweep.spacing must be one of {_SPACINGS}, got {spacing!r}")
    _check(start <= stop, f"g_sweep.start must not exceed g_sweep.stop, got {start} > {stop}")
    if spacing == "log":
        _check(start > 0.0, f"g_sweep.start must be positive for log spacing, got {start}")
    g_sweep = GSweep(start, stop, steps, spacing)

    kry_sec = _Section(root.take("krylov", dict, {}), "krylov")
    dim_d = kry_sec.take("dim_d", int, 20)
    _check(dim_d >= 1, f"krylov.dim_d must be >= 1, got {dim_d}")
    has_tau, has_list = kry_sec.has("tau"), kry_sec.has("tau_list")
    _check(not (has_tau and has_list), "krylov.tau and krylov.tau_list are mutually exclusive")
    if has_list:
        raw_list = kry_sec.take("tau_list", list, _REQUIRED)
        _check(len(raw_list) > 0, "krylov.tau_list must be nonempty")
        tau_list = []
        for i, item in enumerate(raw_list):
            if isinstance(item, int) and not isinstance(item, bool):
                item = float(item)
            _check(
                isinstance(item, float) and math.isfinite(item) and item > 0.0,
                f"krylov.tau_list[{i}] must be a positive number",
            )
            tau_list.append(item)
    else:
        tau = kry_sec.take("tau", float, 2.5)
        _check(tau > 0.0, f"krylov.tau must be positive, got {tau}")
        tau_list = [tau]
    threshold = kry_sec.take("threshold", float, 1e-12)
    _check(0.0 < threshold < 1.0, f"krylov.threshold must lie in (0, 1), got {threshold}")
    method = kry_sec.take("method", str, "projected_generator")
    _check(method in METHODS, f"krylov.method must be one of {METHODS}, got {method!r}")
    repetitions = kry_sec.take("repetitions", int, 3)
    _check(repetitions >= 1, f"krylov.repetitions must be >= 1, got {repetitions}")
    seed = kry_sec.take("seed", int, 1000)
    n_pairs = kry_sec.take("n_pairs", int, 4)
    _check(n_pairs >= 1, f"krylov.n_pairs must be >= 1, got {n_pairs}")
    _check(
        2 * n_pairs <= n_levels,
        f"krylov.n_pairs = {n_pairs} needs {2 * n_pairs} eigenstates, n_levels is {n_levels}",
    )
    kry_sec.finish()
    krylov = KrylovPlan(dim_d, tuple(tau_list), threshold, method, repetitions, seed, n_pairs)

    out_sec = _Section(root.take("outputs", dict, {}), "outputs")
    directory = out_sec.take("directory", str, "liokry_out")
    _check(bool(directory), "outputs.directory must be nonempty")
    formats_raw = out_sec.take("formats", list, ["csv"])
    for i, fmt in enumerate(formats_raw):
        _check(fmt == "csv", f"outputs.formats[{i}] must be 'csv', got {fmt!r}")
    _check(len(formats_raw) > 0, "outputs.formats must be nonempty")
    out_sec.finish()
    outputs = OutputPlan(directory, tuple(formats_raw))

    oracle_enabled = root.take("oracle_enabled", bool, True)

    requests = []
    for i, entry in enumerate(root.take("wigner_requests", list, [])):
        sec = _Section(entry, f"wigner_requests[{i}]")
        g = sec.take("g", float, _REQUIRED)
        state = sec.take("state", str, _REQUIRED)
        _check(state in _STATES, f"wigner_requests[{i}].state must be one of {_STATES}")
        source = sec.take("source", str, "oracle")
        _check(source in _SOURCES, f"wigner_requests[{i}].source must be one of {_SOURCES}")
        sec.finish()
        requests.append(WignerRequest(g, state, source))
    root.finish()

    return RunConfig(
        n_levels=n_levels,
        kappa_1ph=kappa_1ph,
        delta=delta,
        kerr=kerr,
        g_sweep=g_sweep,
        krylov=krylov,
        outputs=outputs,
        oracle_enabled=oracle_enabled,
        wigner_requests=tuple(requests),
    )


def _point_rows(cfg: RunConfig, index: int, g: float) -> list[SweepRow]:
    """All SweepRows for one drive value.

    Each ingredient fails independently into NA cells with the reason
    joined into the status: a broken oracle or mean-field blow-up must not
    cost the subspace estimate, and vice versa. Only a Liouvillian that
    cannot be built voids the whole point.
    """
    plan = cfg.krylov
    space = FockSpace(cfg.n_levels)
    params = cfg.params_at(g)
    t_shared = time.perf_counter()

    reasons: list[str] = []
    alpha_sq: float | None = None
    nnorm: float | None = None
    gap_oracle: float | None = None
    kappa_v: float | None = None
    liou: Superoperator | None = None
    try:
        liou = kerr_cat_liouvillian(space, params)
        nnorm = non_normality(liou)
    except (LiokryError, np.linalg.LinAlgError) as exc:
        reasons.append(f"liouvillian: {type(exc).__name__}: {exc}")
    try:
        alpha_sq = steady_photon_number(params)
    except (LiokryError, np.linalg.LinAlgError) as exc:
        reasons.append(f"mean field: {type(exc).__name__}: {exc}")
    if cfg.oracle_enabled and liou is not None:
        try:
            spectrum = full_spectrum_oracle(liou)
            gap_oracle = spectrum.gap
            kappa_v = spectrum.eigvec_condition
        except (LiokryError, np.linalg.LinAlgError) as exc:
            reasons.append(f"oracle: {type(exc).__name__}: {exc}")
    shared_ms = 1e3 * (time.perf_counter() - t_shared)

    rows = []
    for i_tau, tau in enumerate(plan.tau_list):
        t_tau = time.perf_counter()
        tau_reasons = list(reasons)
        gaps: list[float] = []
        cond_s: float | None = None
        kept: int | None = None
        if liou is not None:
            kcfg = KrylovConfig(plan.dim_d, tau, plan.threshold, plan.method)
            point_index = index * len(plan.tau_list) + i_tau
            sampler = TraceZeroSampler(plan.seed + point_index, plan.n_pairs)
            failed_reps = 0
            try:
                propagator = numerics.expm(liou.matrix * tau)
                for rep in range(plan.repetitions):
                    rho0 = sample_initial(sampler, space, params)
                    data = build_basis(liou, rho0, kcfg, propagator=propagator)
                    est = solve_gevp(data, kcfg)
                    if rep == 0:
                        cond_s, kept = est.cond_s, est.kept_rank
                    if est.gap is None:
                        failed_reps += 1
                    else:
                        gaps.append(est.gap)
            except (LiokryError, np.linalg.LinAlgError) as exc:
                tau_reasons.append(f"krylov: {type(exc).__name__}: {exc}")
            else:
                if failed_reps:
                    tau_reasons.append(
                        f"krylov: {failed_reps}/{plan.repetitions} repetitions found no gap"
                    )
        wall_ms = shared_ms + 1e3 * (time.perf_counter() - t_tau)
        rows.append(
            SweepRow(
                g=g,
                alpha_sq_mf=alpha_sq,
                gap_oracle=gap_oracle,
                gap_krylov_mean=float(np.mean(gaps)) if gaps else None,
                gap_krylov_min=min(gaps) if gaps else None,
                gap_krylov_max=max(gaps) if gaps else None,
                cond_s=cond_s,
                kept_rank=kept,
                non_normality=nnorm,
                eigvec_cond=kappa_v,
                tau=tau,
                dim_d=plan.dim_d,
                wall_time_ms=wall_ms,
                status="ok" if not tau_reasons else "; ".join(tau_reasons),
            )
        )
    return rows


def run_sweep(cfg: RunConfig, workers: int | None = None) -> list[SweepRow]:
    """Run every (g, tau) point; rows come back in grid order.

    Points are independent: each owns a sampler with a seed derived from
    the base seed and its grid index, so results do not depend on worker
    count or completion order. A failing point yields NA cells and the
    sweep continues.
    """
    gs = cfg.g_sweep.values()
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(gs) == 1:
        chunks = [_point_rows(cfg, i, float(g)) for i, g in enumerate(gs)]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_point_rows, cfg, i, float(g)) for i, g in enumerate(gs)]
            chunks = [f.result() for f in futures]
    return [row for chunk in chunks for row in chunk]


def _oracle_slow_mode(liou: Superoperator) -> np.ndarray:
    spectrum = full_spectrum_oracle(liou)
    vec = Superket(liou.space, spectrum.right_superkets[:, spectrum.slow_mode_index])
    aligned = numerics.hermitian_aligned(devectorize(vec))
    return aligned / np.linalg.norm(aligned)


def compute_wigner(cfg: RunConfig, request: WignerRequest) -> WignerMap:
    """Evaluate one requested phase-space map.

    source "oracle" uses the dense spectrum (exact steady state or slow
    mode); "krylov" reconstructs the state from a subspace run seeded like
    a sweep point, using the first configured tau.
    """
    space = FockSpace(cfg.n_levels)
    params = cfg.params_at(request.g)
    liou = kerr_cat_liouvillian(space, params)
    if request.source == "oracle":
        if request.state == "steady":
            rho = devectorize(steady_state(liou))
        else:
            rho = _oracle_slow_mode(liou)
    else:
        plan = cfg.krylov
        kcfg = KrylovConfig(plan.dim_d, plan.tau_list[0], plan.threshold, plan.method)
        sampler = TraceZeroSampler(plan.seed, plan.n_pairs)
        rho0 = sample_initial(sampler, space, params)
        data = build_basis(liou, rho0, kcfg)
        est = solve_gevp(data, kcfg)
        if request.state == "steady":
            # trace-0 subspaces never contain the steady state
            raise LiokryError("krylov source only reconstructs the slow mode")
        if est.slow_index is None:
            raise LiokryError("no decaying mode survived; cannot reconstruct")
        rho = devectorize(reconstruct_eigenstate(data, est, est.slow_index))
    return wigner_of(rho)


def _cell(value: float | int | None) -> str:
    if value is None:
        return "NA"
    if isinstance(value, int):
        return str(value)
    v = float(value)
    if not math.isfinite(v):
        return "NA"
    return repr(v)


def _sweep_csv_lines(rows: list[SweepRow]) -> list[str]:
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    _cell(r.g),
                    _cell(r.alpha_sq_mf),
                    _cell(r.gap_oracle),
                    _cell(r.gap_krylov_mean),
                    _cell(r.gap_krylov_min),
                    _cell(r.gap_krylov_max),
                    _cell(r.cond_s),
                    _cell(r.kept_rank),
                    _cell(r.non_normality),
                    _cell(r.eigvec_cond),
                    _cell(r.tau),
                    _cell(r.dim_d),
                    f"{r.wall_time_ms:.3f}",
                ]
            )
        )
    return lines


def _wigner_csv_lines(wmap: WignerMap) -> list[str]:
    lines = ["x,p,w"]
    xs = wmap.grid.x_values()
    ps = wmap.grid.p_values()
    for i, x in enumerate(xs):
        for j, p in enumerate(ps):
            lines.append(f"{_cell(float(x))},{_cell(float(p))},{_cell(float(wmap.values[i, j]))}")
    return lines


def emit_outputs(
    rows: list[SweepRow],
    wigner_maps: list[tuple[WignerRequest, WignerMap | None, str]],
    cfg: RunConfig,
    out_dir: str | Path,
) -> list[Path]:
    """Write sweep CSV, per-request Wigner CSVs, and the run manifest."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    written: list[Path] = []
    sweep_path = out / "sweep.csv"
    sweep_path.write_text("\n".join(_sweep_csv_lines(rows)) + "\n")
    written.append(sweep_path)

    wigner_entries = []
    for i, (request, wmap, status) in enumerate(wigner_maps):
        entry = {
            "g": request.g,
            "state": request.state,
            "source": request.source,
            "status": status,
            "file": None,
        }
        if wmap is not None:
            path = out / f"wigner_{i:02d}_{request.state}.csv"
            path.write_text("\n".join(_wigner_csv_lines(wmap)) + "\n")
            written.append(path)
            entry["file"] = path.name
        wigner_entries.append(entry)

    from . import __version__

    manifest = {
        "artifact_version": __version__,
        "config": cfg.to_document(),
        "seed": cfg.krylov.seed,
        "points": [
            {
                "g": r.g,
                "tau": r.tau,
                "status": r.status,
                "wall_time_ms": round(r.wall_time_ms, 3),
            }
            for r in rows
        ],
        "wigner": wigner_entries,
        "outputs": [p.name for p in written],
    }
    manifest_path = out / "run_manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    written.append(manifest_path)
    return written


def _load_config(path: str) -> RunConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text)


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    if args.no_oracle:
        cfg = dataclasses.replace(cfg, oracle_enabled=False)
    if args.threshold is not None:
        if not 0.0 < args.threshold < 1.0:
            raise ConfigError(f"--threshold must lie in (0, 1), got {args.threshold}")
        cfg = dataclasses.replace(
            cfg, krylov=dataclasses.replace(cfg.krylov, threshold=args.threshold)
        )
    out_dir = args.out if args.out is not None else cfg.outputs.directory

    rows = run_sweep(cfg, workers=args.workers)
    maps: list[tuple[WignerRequest, WignerMap | None, str]] = []
    for request in cfg.wigner_requests:
        try:
            maps.append((request, compute_wigner(cfg, request), "ok"))
        except (LiokryError, np.linalg.LinAlgError) as exc:
            maps.append((request, None, f"{type(exc).__name__}: {exc}"))

    written = emit_outputs(rows, maps, cfg, out_dir)
    for path in written:
        print(path)
    if all(row.gap_krylov_mean is None for row in rows):
        print("no sweep point produced a gap estimate; see run_manifest.json", file=sys.stderr)
        return 2
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    liou = kerr_cat_liouvillian(FockSpace(cfg.n_levels), cfg.params_at(args.g))
    spectrum = full_spectrum_oracle(liou)
    lines = ["re_lambda,im_lambda"]
    for value in spectrum.eigenvalues:
        lines.append(f"{_cell(float(value.real))},{_cell(float(value.imag))}")
    out = Path(args.out if args.out is not None else cfg.outputs.directory)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"spectrum_g{args.g:g}.csv"
    path.write_text("\n".join(lines) + "\n")
    print(path)
    return 0


def _cmd_wigner(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    request = WignerRequest(g=args.g, state=args.state, source=args.source)
    wmap = compute_wigner(cfg, request)
    out = Path(args.out if args.out is not None else cfg.outputs.directory)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"wigner_g{args.g:g}_{args.state}.csv"
    path.write_text("\n".join(_wigner_csv_lines(wmap)) + "\n")
    print(path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liokry",
        description="Liouvillian spectral gaps by real-time Krylov subspace estimation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a sweep described by a JSON config")
    run_p.add_argument("--config", required=True, help="path to the JSON config")
    run_p.add_argument("--out", default=None, help="output directory override")
    run_p.add_argument("--workers", type=int, default=None, help="parallel point workers")
    run_p.add_argument("--no-oracle", action="store_true", help="skip dense oracle runs")
    run_p.add_argument(
        "--threshold", type=float, default=None, help="overlap singular-value cutoff override"
    )
    run_p.set_defaults(func=_cmd_run)

    oracle_p = sub.add_parser("oracle", help="dump the exact dense spectrum at one g")
    oracle_p.add_argument("--config", required=True)
    oracle_p.add_argument("--g", type=float, required=True)
    oracle_p.add_argument("--out", default=None, help="output directory override")
    oracle_p.set_defaults(func=_cmd_oracle)

    wig_p = sub.add_parser("wigner", help="emit one phase-space map CSV")
    wig_p.add_argument("--config", required=True)
    wig_p.add_argument("--g", type=float, required=True)
    wig_p.add_argument("--state", choices=_STATES, required=True)
    wig_p.add_argument("--source", choices=_SOURCES, default="oracle")
    wig_p.add_argument("--out", default=None, help="output directory override")
    wig_p.set_defaults(func=_cmd_wigner)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (LiokryError, np.linalg.LinAlgError) as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
