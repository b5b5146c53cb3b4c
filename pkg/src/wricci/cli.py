"""Command-line driver: ``wricci {curvature,scan,verify,models}``.

Runs are described by a YAML config file::

    model: {name: fubini_study, n: 2}
    points:
      explicit: [["1+0.5j", "0"]]        # or: sampler: {count: 3, scale: 1.0}
    grid: {alpha: [-2, 2], beta: [-2, 2], resolution: [50, 50]}
    kind: kahler
    seed: 0
    tolerances: {positivity: 1.0e-7, check: 1.0e-6}
    checks: [averaging, oracles]
    output: {dir: out}

Exit status: 0 success, 1 failed checks, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
import yaml

from . import __version__
from .errors import ConfigError, WRicciError
from .models import MODEL_REGISTRY, build_model
from .tensor_core import MetricField

log = logging.getLogger("wricci")

EXIT_OK, EXIT_CHECKS, EXIT_CONFIG = 0, 1, 2


def _parse_complex(value, where: str) -> complex:
    try:
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ValueError
            return complex(float(value[0]), float(value[1]))
        if isinstance(value, str):
            return complex(value.replace(" ", ""))
        return complex(float(value))
    except (TypeError, ValueError):
        raise ConfigError(f"{where}: cannot read {value!r} as a complex number") from None


@dataclass
class RunConfig:
    model: str
    model_params: dict = field(default_factory=dict)
    points: list = field(default_factory=list)
    sampler: Optional[dict] = None
    alpha_range: tuple = (-2.0, 2.0)
    beta_range: tuple = (-2.0, 2.0)
    resolution: tuple = (21, 21)
    kind: object = "kahler"
    seed: int = 0
    tolerances: dict = field(default_factory=dict)
    checks: Optional[list] = None
    out_dir: str = "."

    @classmethod
    def from_mapping(cls, data) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("config root must be a mapping")
        model = data.get("model")
        if model is None:
            raise ConfigError("config field 'model' is missing")
        if isinstance(model, str):
            model = {"name": model}
        if not isinstance(model, dict) or "name" not in model:
            raise ConfigError("config field 'model' needs a 'name'")
        name = str(model["name"])
        if name not in MODEL_REGISTRY:
            raise ConfigError(f"model.name: unknown model {name!r}; known: {sorted(MODEL_REGISTRY)}")
        params = {k: v for k, v in model.items() if k != "name"}

        pts_cfg = data.get("points") or {}
        if isinstance(pts_cfg, list):
            pts_cfg = {"explicit": pts_cfg}
        points = []
        for i, p in enumerate(pts_cfg.get("explicit") or []):
            if not isinstance(p, (list, tuple)):
                raise ConfigError(f"points.explicit[{i}]: expected a list of coordinates")
            points.append([_parse_complex(c, f"points.explicit[{i}]") for c in p])
        sampler = pts_cfg.get("sampler")
        if sampler is not None and not isinstance(sampler, dict):
            raise ConfigError("points.sampler must be a mapping")

        grid = data.get("grid") or {}
        try:
            a_rng = tuple(float(x) for x in grid.get("alpha", (-2.0, 2.0)))
            b_rng = tuple(float(x) for x in grid.get("beta", (-2.0, 2.0)))
            res = grid.get("resolution", (21, 21))
            res = (int(res), int(res)) if isinstance(res, (int, float)) else tuple(int(x) for x in res)
        except (TypeError, ValueError):
            raise ConfigError("grid: alpha/beta must be [lo, hi] and resolution an int or [na, nb]") from None
        if len(a_rng) != 2 or len(b_rng) != 2 or len(res) != 2 or min(res) < 1:
            raise ConfigError("grid: ranges need two entries and resolution must be >= 1")

        kind = data.get("kind", "kahler")
        if kind not in ("kahler", 1, 2, 3, 4):
            raise ConfigError(f"kind: expected 1..4 or 'kahler', got {kind!r}")
        tol = data.get("tolerances") or {}
        if not isinstance(tol, dict):
            raise ConfigError("tolerances must be a mapping")
        checks = data.get("checks")
        out = (data.get("output") or {}).get("dir", ".")
        try:
            seed = int(data.get("seed", 0))
            tolerances = {k: float(v) for k, v in tol.items()}
        except (TypeError, ValueError):
            raise ConfigError("seed must be an integer and tolerances numeric") from None
        return cls(
            model=name,
            model_params=params,
            points=points,
            sampler=sampler,
            alpha_range=a_rng,
            beta_range=b_rng,
            resolution=res,
            kind=kind,
            seed=seed,
            tolerances=tolerances,
            checks=list(checks) if checks is not None else None,
            out_dir=str(out),
        )

    @classmethod
    def load(cls, path) -> "RunConfig":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ConfigError(f"{path}: {exc}") from None
        return cls.from_mapping(data)

    def build_field(self) -> MetricField:
        try:
            return build_model(self.model, **self.model_params)
        except ConfigError:
            raise
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"model: {exc}") from None

    def resolve_points(self, mf: MetricField) -> list:
        pts = [np.asarray(p, dtype=complex) for p in self.points]
        if self.sampler:
            count = int(self.sampler.get("count", 1))
            scale = float(self.sampler.get("scale", 1.0))
            rng = np.random.default_rng([self.seed, 7])
            for _ in range(count):
                pts.append(scale * (rng.normal(size=mf.dim) + 1j * rng.normal(size=mf.dim)))
        if not pts:
            pts = [np.full(mf.dim, 0.5 + 0.25j)]
        for i, p in enumerate(pts):
            if p.shape != (mf.dim,):
                raise ConfigError(f"points[{i}]: expected {mf.dim} coordinates, got {p.shape[0]}")
            if not mf.contains(p):
                raise ConfigError(f"points[{i}]: {p.tolist()} lies outside the chart of {mf.name}")
        return pts

    def grid(self):
        na, nb = self.resolution
        return np.linspace(*self.alpha_range, na), np.linspace(*self.beta_range, nb)

    def echo(self) -> dict:
        return {
            "model": self.model,
            "model_params": self.model_params,
            "points": [[_c(z) for z in p] for p in self.points],
            "sampler": self.sampler,
            "grid": {
                "alpha": list(self.alpha_range),
                "beta": list(self.beta_range),
                "resolution": list(self.resolution),
            },
            "kind": self.kind,
            "seed": self.seed,
            "tolerances": self.tolerances,
            "checks": self.checks,
        }


# ----------------------------------------------------------- serialization


def _c(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return _c(obj)
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else repr(v)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def dumps_report(report: dict) -> str:
    """Stable JSON: sorted keys; floats use the shortest round-trip repr."""
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _interleave(v) -> str:
    if v is None:
        return ""
    return ";".join(f"{_fmt(z.real)};{_fmt(z.imag)}" for z in np.asarray(v, dtype=complex))


def cone_csv(cmap, points) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha", "beta", "classification", "min_value", "witness_point", "witness_direction"])
    for i, j, a, b in cmap.cells():
        wp = cmap.witness_point[i, j]
        writer.writerow(
            [
                _fmt(a),
                _fmt(b),
                cmap.classification[i, j],
                _fmt(cmap.min_values[i, j]),
                _interleave(points[wp]) if wp >= 0 else "",
                _interleave(cmap.witness_direction[i][j]),
            ]
        )
    return buf.getvalue()


def _base_report(cfg: RunConfig, command: str) -> dict:
    return {"command": command, "engine_version": __version__, "config": cfg.echo()}


# ---------------------------------------------------------------- commands


def cmd_curvature(cfg: RunConfig) -> dict:
    """Full pointwise curvature summary at each configured point."""
    from .engine import altered_scalar, chern_curvature, kahler_like_check, qobc_min, ricci, scalar
    from .tensor_core import random_unitary, unitary_frame
    from .weighted import max_over_directions, minimize_directions

    mf = cfg.build_field()
    pts = cfg.resolve_points(mf)
    rng = np.random.default_rng(cfg.seed)
    summaries = []
    for idx, p in enumerate(pts):
        try:
            T = chern_curvature(mf, p)
        except WRicciError as exc:
            raise type(exc)(f"point {idx} ({p.tolist()}): {exc}") from exc
        frame = unitary_frame(T.g)
        like = kahler_like_check(T, cfg.tolerances.get("kahler_like", 1e-7))
        hsc_min = minimize_directions(T, (0.0, 1.0), 1, seed=np.random.default_rng([cfg.seed, idx]))
        hsc_max = max_over_directions(T, (0.0, 1.0), 1, seed=np.random.default_rng([cfg.seed, idx, 1]))
        qobc = [qobc_min(T, frame)] + [qobc_min(T, frame @ random_unitary(mf.dim, rng)) for _ in range(4)]
        summaries.append(
            {
                "index": idx,
                "point": p,
                "metric": T.g,
                "tensor_norm": float(np.linalg.norm(T.R)),
                "frame_components": T.in_frame(frame),
                "ricci": {str(k): ricci(T, k) for k in (1, 2, 3, 4)},
                "scalar": scalar(T),
                "altered_scalar": altered_scalar(T),
                "hsc_min": hsc_min.min_value,
                "hsc_max": hsc_max.min_value,
                "qobc_min_samples": qobc,
                "kahler_like": {"passed": like.passed, "max_violation": like.max_violation},
            }
        )
    report = _base_report(cfg, "curvature")
    report["points"] = summaries
    return report


def cmd_scan(cfg: RunConfig, jobs: int = 1):
    """Cone scan over the configured weight grid; returns ``(report, csv_text)``."""
    from .weighted import cone_scan

    mf = cfg.build_field()
    pts = cfg.resolve_points(mf)
    alphas, betas = cfg.grid()
    tol = cfg.tolerances.get("positivity", 1e-7)
    cmap = cone_scan(mf, pts, alphas, betas, cfg.kind, tol=tol, seed=cfg.seed, jobs=jobs)
    report = _base_report(cfg, "scan")
    report["resolved_points"] = pts
    report["counts"] = {label: cmap.count(label) for label in ("positive", "negative", "indefinite", "degenerate")}
    report["cells"] = [
        {
            "alpha": a,
            "beta": b,
            "classification": cmap.classification[i, j],
            "min_value": cmap.min_values[i, j],
            "max_value": cmap.max_values[i, j],
            "witness_point": int(cmap.witness_point[i, j]),
        }
        for i, j, a, b in cmap.cells()
    ]
    return report, cone_csv(cmap, pts)


def cmd_verify(cfg: Optional[RunConfig], groups=None) -> dict:
    """Run the built-in check battery; see :mod:`wricci.checks`."""
    from .checks import run_checks

    tolerances = cfg.tolerances if cfg is not None else {}
    seed = cfg.seed if cfg is not None else 0
    if groups is None and cfg is not None:
        groups = cfg.checks
    results = run_checks(groups=groups, tolerances=tolerances, seed=seed)
    report = {"command": "verify", "engine_version": __version__}
    report["config"] = cfg.echo() if cfg is not None else None
    report["checks"] = results
    report["failed"] = sorted(r["name"] for r in results if not r["passed"])
    return report


def cmd_models() -> dict:
    return {"models": sorted(MODEL_REGISTRY)}


# -------------------------------------------------------------------- main


def _write(out_dir: Path, name: str, text: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wricci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("curvature", "scan", "verify"):
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=(name != "verify"))
        sp.add_argument("--seed", type=int)
        sp.add_argument("--out")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--checks")
    sub.add_parser("models")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "models":
        sys.stdout.write(dumps_report(cmd_models()))
        return EXIT_OK
    started = time.perf_counter()
    try:
        cfg = RunConfig.load(args.config) if args.config else None
        if cfg is not None and args.seed is not None:
            cfg.seed = args.seed
        out_dir = Path(args.out or (cfg.out_dir if cfg is not None else "."))
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if args.command == "curvature":
            _write(out_dir, "report.json", dumps_report(cmd_curvature(cfg)))
            status = EXIT_OK
        elif args.command == "scan":
            report, table = cmd_scan(cfg, jobs=args.jobs)
            _write(out_dir, "report.json", dumps_report(report))
            _write(out_dir, "cone.csv", table)
            status = EXIT_OK
        else:
            groups = [g for g in args.checks.split(",") if g] if args.checks else None
            report = cmd_verify(cfg, groups)
            _write(out_dir, "report.json", dumps_report(report))
            for r in report["checks"]:
                print(f"{'PASS' if r['passed'] else 'FAIL'}  {r['group']:<12} {r['name']}")
            status = EXIT_CHECKS if report["failed"] else EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    log.info("wall time %.3fs", time.perf_counter() - started)
    print(f"wall time: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
