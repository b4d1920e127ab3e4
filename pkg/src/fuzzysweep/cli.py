"""Command-line entry point: cluster, sweep, indexes, foa-bench."""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .core import ClusterConfig, FuzzySweepError, hard_assign
from .cvi import evaluate_all
from .fcm import fcm_run, make_rng
from .fixtures import FIXTURE_NAMES, load_fixture
from .foa import FoaParams, foa_minimize
from .gk import GkConfig, gk_run
from .hybrid import foa_fcm_run, foa_gk_run
from .sweep import ALGORITHMS, SweepConfig, run_sweep
from . import core


def _add_dataset_args(parser):
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="CSV file of feature vectors")
    src.add_argument("--fixture", choices=FIXTURE_NAMES, help="bundled dataset")
    parser.add_argument("--labels", action="store_true",
                        help="treat the last CSV column as labels")


def _add_algo_args(parser, with_k=True):
    parser.add_argument("--algo", choices=ALGORITHMS, default="fcm")
    if with_k:
        parser.add_argument("--k", type=int, default=3, help="cluster count")
    parser.add_argument("--m", type=float, default=2.0, help="fuzzifier (> 1)")
    parser.add_argument("--tol", type=float, default=1e-5,
                        help="stop when |dJ| drops below this")
    parser.add_argument("--max-iter", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cov-reg", type=float, default=1e-4,
                        help="covariance regularization gamma (gk/foa-gk)")
    parser.add_argument("--rho", type=float, default=1.0,
                        help="cluster volume constant (gk/foa-gk)")
    _add_foa_args(parser)


def _add_foa_args(parser):
    parser.add_argument("--epochs", type=int, default=10)
    parser.add_argument("--area-limit", type=int, default=30)
    parser.add_argument("--life-time", type=int, default=6)
    parser.add_argument("--lsc", type=int, default=2)
    parser.add_argument("--gsc", type=int, default=1)
    parser.add_argument("--transfer-rate", type=float, default=0.05)
    parser.add_argument("--local-step", type=float, default=0.1)


def _add_output_args(parser):
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzysweep",
        description="Fuzzy clustering with validity-index cluster-count sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cluster = sub.add_parser("cluster", help="run one algorithm at a fixed k")
    _add_dataset_args(p_cluster)
    _add_algo_args(p_cluster)
    _add_output_args(p_cluster)

    p_sweep = sub.add_parser("sweep", help="sweep k and select best k per index")
    _add_dataset_args(p_sweep)
    _add_algo_args(p_sweep, with_k=False)
    p_sweep.add_argument("--kmin", type=int, default=2)
    p_sweep.add_argument("--kmax", type=int, default=5)
    p_sweep.add_argument("--restarts", type=int, default=1)
    p_sweep.add_argument("--true-k", type=int, default=None)
    _add_output_args(p_sweep)

    p_idx = sub.add_parser("indexes", help="run one algorithm and report all indexes")
    _add_dataset_args(p_idx)
    _add_algo_args(p_idx)
    _add_output_args(p_idx)

    p_bench = sub.add_parser("foa-bench", help="forest optimizer demo on sphere/rosenbrock")
    _add_foa_args(p_bench)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--output", help="write the CSV trace here instead of stdout")

    return parser


def _foa_params(args) -> FoaParams:
    return FoaParams(
        area_limit=args.area_limit,
        life_time=args.life_time,
        lsc=args.lsc,
        gsc=args.gsc,
        transfer_rate=args.transfer_rate,
        epochs=args.epochs,
        local_step=args.local_step,
        seed=args.seed,
    )


def _load_dataset(args):
    if args.fixture:
        return load_fixture(args.fixture)
    return core.load_csv(args.input, has_labels=args.labels)


def _run_algorithm(points, algo, base: ClusterConfig, args):
    rng = make_rng(base.seed)
    if algo == "fcm":
        return fcm_run(points, base, rng)
    if algo == "gk":
        return gk_run(points, GkConfig(base=base, rho=args.rho, cov_reg=args.cov_reg), rng)
    if algo == "foa-fcm":
        return foa_fcm_run(points, base, _foa_params(args), rng)
    return foa_gk_run(
        points, GkConfig(base=base, rho=args.rho, cov_reg=args.cov_reg),
        _foa_params(args), rng,
    )


def _meta(args, dataset, config: dict) -> dict:
    return {
        "algorithm": getattr(args, "algo", None),
        "dataset": dataset.name,
        "seed": args.seed,
        "config": config,
    }


def _base_config_dict(args, base: ClusterConfig) -> dict:
    config = {
        "m": base.m, "tol": base.tol, "max_iter": base.max_iter,
        "cov_reg": args.cov_reg, "rho": args.rho,
    }
    if args.algo.startswith("foa-"):
        fp = _foa_params(args)
        config["foa"] = {
            "area_limit": fp.area_limit, "life_time": fp.life_time, "lsc": fp.lsc,
            "gsc": fp.gsc, "transfer_rate": fp.transfer_rate, "epochs": fp.epochs,
            "local_step": fp.local_step,
        }
    return config


def _index_entries(index_values) -> list[dict]:
    return [
        {"index": iv.name, "value": iv.value, "direction": iv.direction}
        for iv in index_values
    ]


def cmd_cluster(args) -> dict:
    dataset = _load_dataset(args)
    base = ClusterConfig(k=args.k, m=args.m, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    t0 = time.perf_counter()
    result = _run_algorithm(dataset.points, args.algo, base, args)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    assignments = hard_assign(result.memberships)
    counts = np.bincount(assignments, minlength=args.k)
    config = {"k": args.k, **_base_config_dict(args, base)}
    return {
        "meta": _meta(args, dataset, config),
        "k": args.k,
        "objective": result.model.objective,
        "iterations": result.iterations,
        "converged": result.converged,
        "centers": result.model.centers.tolist(),
        "membership_summary": {
            "hard_counts": counts.tolist(),
            "mean_max_membership": float(result.memberships.mu.max(axis=0).mean()),
        },
        "timing_ms": elapsed_ms,
    }


def cmd_indexes(args) -> dict:
    dataset = _load_dataset(args)
    base = ClusterConfig(k=args.k, m=args.m, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    t0 = time.perf_counter()
    result = _run_algorithm(dataset.points, args.algo, base, args)
    values = evaluate_all(result.memberships, dataset.points, result.model.centers, args.m)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    config = {"k": args.k, **_base_config_dict(args, base)}
    return {
        "meta": _meta(args, dataset, config),
        "k": args.k,
        "objective": result.model.objective,
        "indexes": _index_entries(values),
        "timing_ms": elapsed_ms,
    }


def cmd_sweep(args) -> dict:
    dataset = _load_dataset(args)
    cfg = SweepConfig(
        algorithm=args.algo, k_min=args.kmin, k_max=args.kmax, restarts=args.restarts,
        m=args.m, tol=args.tol, max_iter=args.max_iter, seed=args.seed,
        cov_reg=args.cov_reg, rho=args.rho, foa=_foa_params(args), true_k=args.true_k,
    )
    t0 = time.perf_counter()
    report = run_sweep(dataset.points, cfg)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    config = {
        "kmin": args.kmin, "kmax": args.kmax, "restarts": args.restarts,
        "true_k": args.true_k, **_base_config_dict(args, ClusterConfig(
            k=args.kmin, m=args.m, tol=args.tol, max_iter=args.max_iter, seed=args.seed)),
    }
    return {
        "meta": _meta(args, dataset, config),
        "per_k": [
            {
                "k": k,
                "objective": report.objectives[k],
                "indexes": _index_entries(report.values[k]),
            }
            for k in report.k_values
        ],
        "best_k": dict(report.best_k),
        "detections": dict(report.detections) if report.detections is not None else None,
        "timing_ms": elapsed_ms,
    }


def _sphere(x) -> float:
    return float(np.sum(x * x))


def _rosenbrock(x) -> float:
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def cmd_foa_bench(args) -> str:
    params = _foa_params(args)
    sphere = foa_minimize(_sphere, 2, [(-5.0, 5.0)] * 2, params)
    rosen = foa_minimize(_rosenbrock, 2, [(-2.048, 2.048)] * 2, params)
    lines = ["epoch,sphere_best,rosenbrock_best"]
    for i, (a, b) in enumerate(zip(sphere.trace, rosen.trace)):
        lines.append(f"{i},{a!r},{b!r}")
    return "\n".join(lines) + "\n"


def _render_table(report: dict) -> str:
    """Aligned-column rendering of the same content as the JSON report."""
    lines = []
    meta = report.get("meta", {})
    lines.append(f"algorithm: {meta.get('algorithm')}   dataset: {meta.get('dataset')}   "
                 f"seed: {meta.get('seed')}")
    if "per_k" in report:
        ks = [entry["k"] for entry in report["per_k"]]
        header = ["index"] + [f"k={k}" for k in ks] + ["best_k"]
        if report.get("detections") is not None:
            header.append("detection")
        rows = [header]
        names = [iv["index"] for iv in report["per_k"][0]["indexes"]]
        for pos, name in enumerate(names):
            row = [name]
            for entry in report["per_k"]:
                value = entry["indexes"][pos]["value"]
                row.append("undefined" if value is None else f"{value:.6g}")
            best = report["best_k"].get(name)
            row.append("-" if best is None else str(best))
            if report.get("detections") is not None:
                row.append(report["detections"][name])
            rows.append(row)
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        for r in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)))
        if report.get("detections") is not None:
            correct = sum(1 for d in report["detections"].values() if d == "correct")
            near = sum(1 for d in report["detections"].values() if d == "near-correct")
            lines.append(f"correct detections: {correct}   near-correct: {near}")
    elif "indexes" in report:
        lines.append(f"k: {report['k']}   objective: {report['objective']:.6g}")
        for iv in report["indexes"]:
            value = "undefined" if iv["value"] is None else f"{iv['value']:.6g}"
            lines.append(f"{iv['index']:<4} ({iv['direction']})  {value}")
    else:
        lines.append(f"k: {report['k']}   objective: {report['objective']:.6g}   "
                     f"iterations: {report['iterations']}   converged: {report['converged']}")
        lines.append(f"hard counts: {report['membership_summary']['hard_counts']}")
    lines.append(f"timing_ms: {report['timing_ms']:.3f}")
    return "\n".join(lines) + "\n"


def emit_report(report: dict, fmt: str, path: str | None) -> None:
    """Serialize a report as JSON (undefined -> null, never NaN) or text table."""
    if fmt == "json":
        text = json.dumps(report, indent=2, allow_nan=False) + "\n"
    else:
        text = _render_table(report)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "foa-bench":
            text = cmd_foa_bench(args)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "cluster":
            report = cmd_cluster(args)
        elif args.command == "sweep":
            report = cmd_sweep(args)
        else:
            report = cmd_indexes(args)
    except (FileNotFoundError, ValueError) as err:
        print(f"fuzzysweep: invalid invocation: {err}", file=sys.stderr)
        return 2
    except FuzzySweepError as err:
        print(f"fuzzysweep: {err}", file=sys.stderr)
        return 1

    try:
        emit_report(report, args.format, args.output)
    except OSError as err:
        print(f"fuzzysweep: cannot write report: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
