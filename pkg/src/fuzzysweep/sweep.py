"""Cluster-count sweeps: run an algorithm across k, score every partition
with all seven indexes, pick each index's best k, and tally correct /
near-correct detections against a known ground truth.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import ClusterConfig, FuzzySweepError
from .cvi import INDEX_DIRECTIONS, INDEX_ORDER, IndexValue, evaluate_all
from .fcm import FcmResult, _as_points, fcm_run
from .foa import FoaParams
from .gk import GkConfig, gk_run
from .hybrid import foa_fcm_run, foa_gk_run

ALGORITHMS = ("fcm", "gk", "foa-fcm", "foa-gk")

CORRECT = "correct"
NEAR_CORRECT = "near-correct"
WRONG = "wrong"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class SweepConfig:
    algorithm: str = "fcm"
    k_min: int = 2
    k_max: int = 5
    restarts: int = 1
    m: float = 2.0
    tol: float = 1e-5
    max_iter: int = 300
    seed: int = 0
    cov_reg: float = 1e-4
    rho: float = 1.0
    foa: FoaParams = field(default_factory=FoaParams)
    true_k: int | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}")
        if not 1 <= self.k_min <= self.k_max:
            raise ValueError("need 1 <= k_min <= k_max")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class CviReport:
    algorithm: str
    k_values: list[int]
    objectives: dict[int, float | None]
    values: dict[int, list[IndexValue]]
    best_k: dict[str, int | None]
    true_k: int | None = None
    detections: dict[str, str] | None = None


def thread_budget() -> int:
    """Worker cap from FUZZYSWEEP_THREADS (default 1: fully serial)."""
    raw = os.environ.get("FUZZYSWEEP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_once(points: np.ndarray, cfg: SweepConfig, k: int, restart: int) -> FcmResult:
    seed_seq = np.random.SeedSequence(entropy=cfg.seed, spawn_key=(k, restart))
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    base = ClusterConfig(k=k, m=cfg.m, tol=cfg.tol, max_iter=cfg.max_iter, seed=cfg.seed)
    if cfg.algorithm == "fcm":
        return fcm_run(points, base, rng)
    if cfg.algorithm == "gk":
        return gk_run(points, GkConfig(base=base, rho=cfg.rho, cov_reg=cfg.cov_reg), rng)
    if cfg.algorithm == "foa-fcm":
        return foa_fcm_run(points, base, cfg.foa, rng)
    return foa_gk_run(
        points, GkConfig(base=base, rho=cfg.rho, cov_reg=cfg.cov_reg), cfg.foa, rng
    )


def _best_of_restarts(points, cfg, k) -> FcmResult | None:
    """Lowest-objective run among restarts; None when every restart fails."""
    best = None
    for restart in range(cfg.restarts):
        try:
            result = _run_once(points, cfg, k, restart)
        except (FuzzySweepError, ValueError):
            continue
        if best is None or result.model.objective < best.model.objective:
            best = result
    return best


def classify_detection(best_k: int | None, true_k: int) -> str:
    """correct / near-correct (off by one) / wrong; no selection -> undefined."""
    if best_k is None:
        return UNDEFINED
    if best_k == true_k:
        return CORRECT
    if abs(best_k - true_k) == 1:
        return NEAR_CORRECT
    return WRONG


def run_sweep(X, cfg: SweepConfig, rng=None) -> CviReport:
    """Sweep k over [k_min, k_max]; per index, select best k by direction.

    Runs per k take the lowest-objective restart. Ties in index values break
    toward smaller k. Failed runs leave every index undefined at that k.
    """
    points = _as_points(X)
    if cfg.k_max > points.shape[0]:
        raise ValueError(f"k_max={cfg.k_max} exceeds N={points.shape[0]}")

    k_values = list(range(cfg.k_min, cfg.k_max + 1))
    workers = min(thread_budget(), len(k_values))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(lambda k: _best_of_restarts(points, cfg, k), k_values))
    else:
        runs = [_best_of_restarts(points, cfg, k) for k in k_values]

    objectives: dict[int, float | None] = {}
    values: dict[int, list[IndexValue]] = {}
    for k, result in zip(k_values, runs):
        if result is None:
            objectives[k] = None
            values[k] = [
                IndexValue(name=n, value=None, direction=INDEX_DIRECTIONS[n])
                for n in INDEX_ORDER
            ]
            continue
        objectives[k] = result.model.objective
        values[k] = evaluate_all(
            result.memberships, points, result.model.centers, cfg.m
        )

    best_k: dict[str, int | None] = {}
    for pos, name in enumerate(INDEX_ORDER):
        defined = [(k, values[k][pos].value) for k in k_values if values[k][pos].value is not None]
        if not defined:
            best_k[name] = None
            continue
        sign = 1.0 if INDEX_DIRECTIONS[name] == "min" else -1.0
        best_k[name] = min(defined, key=lambda kv: (sign * kv[1], kv[0]))[0]

    detections = None
    if cfg.true_k is not None:
        detections = {name: classify_detection(best_k[name], cfg.true_k) for name in INDEX_ORDER}

    return CviReport(
        algorithm=cfg.algorithm,
        k_values=k_values,
        objectives=objectives,
        values=values,
        best_k=best_k,
        true_k=cfg.true_k,
        detections=detections,
    )


@dataclass(frozen=True)
class Tally:
    per_index: dict[str, tuple[int, int]]
    per_algorithm: dict[str, tuple[int, int]]


def tally(reports: list[CviReport]) -> Tally:
    """Aggregate (correct, near-correct) counts per index and per algorithm."""
    if not reports:
        raise ValueError("no reports to tally")
    per_index = {name: [0, 0] for name in INDEX_ORDER}
    per_algorithm: dict[str, list[int]] = {}
    for report in reports:
        if report.detections is None:
            raise ValueError("every report needs a ground-truth k to be tallied")
        algo = per_algorithm.setdefault(report.algorithm, [0, 0])
        for name, detection in report.detections.items():
            if detection == CORRECT:
                per_index[name][0] += 1
                algo[0] += 1
            elif detection == NEAR_CORRECT:
                per_index[name][1] += 1
                algo[1] += 1
    return Tally(
        per_index={k: (v[0], v[1]) for k, v in per_index.items()},
        per_algorithm={k: (v[0], v[1]) for k, v in per_algorithm.items()},
    )
