"""Forest optimization: a population minimizer for bounded continuous problems.

Trees carry a position and an age. Age-0 trees spawn nearby seeds (local
seeding, exploitation); trees past the life time or squeezed out by fitness
become candidates, a fraction of which are teleported with several
re-randomized coordinates (global seeding, exploration). The best tree's age
is pinned to 0 so it keeps seeding and never ages out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fcm import make_rng


@dataclass
class Tree:
    """Candidate solution: position within bounds, age, cached fitness."""

    position: np.ndarray
    age: int = 0
    fitness: float | None = None


@dataclass(frozen=True)
class FoaParams:
    # area_limit calibrated so a 10-epoch hybrid run costs on the order of
    # ten standalone clustering runs; larger forests inflate that multiple.
    area_limit: int = 10
    life_time: int = 6
    lsc: int = 2
    gsc: int = 1
    transfer_rate: float = 0.05
    epochs: int = 10
    local_step: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.transfer_rate <= 1.0:
            raise ValueError("transfer_rate must lie in (0, 1]")
        if self.gsc < 1:
            raise ValueError("gsc must be >= 1")
        if self.lsc < 1:
            raise ValueError("lsc must be >= 1")
        if self.area_limit < 2:
            raise ValueError("area_limit must be >= 2")
        if self.life_time < 1:
            raise ValueError("life_time must be >= 1")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.local_step <= 0.0:
            raise ValueError("local_step must be positive")


@dataclass(frozen=True)
class FoaResult:
    best_position: np.ndarray
    best_fitness: float
    trace: list[float]


def _check_bounds(bounds, dim: int) -> np.ndarray:
    b = np.asarray(bounds, dtype=float)
    if b.shape != (dim, 2):
        raise ValueError(f"bounds must have shape ({dim}, 2), got {b.shape}")
    if not np.all(np.isfinite(b)):
        raise ValueError("bounds must be finite")
    if np.any(b[:, 0] >= b[:, 1]):
        bad = int(np.argmax(b[:, 0] >= b[:, 1]))
        raise ValueError(f"bounds[{bad}] is a degenerate interval {tuple(b[bad])}")
    return b


def initialize_forest(rng: np.random.Generator, params: FoaParams, dim: int, bounds) -> list[Tree]:
    """area_limit uniformly placed age-0 trees."""
    b = _check_bounds(bounds, dim)
    return [
        Tree(position=rng.uniform(b[:, 0], b[:, 1]))
        for _ in range(params.area_limit)
    ]


def local_seeding(forest: list[Tree], rng: np.random.Generator, params: FoaParams, bounds) -> list[Tree]:
    """Each age-0 tree spawns lsc one-coordinate perturbations, then all
    pre-existing trees age by one."""
    if not forest:
        raise ValueError("forest is empty")
    dim = forest[0].position.shape[0]
    b = _check_bounds(bounds, dim)
    widths = b[:, 1] - b[:, 0]
    seeds: list[Tree] = []
    for tree in forest:
        if tree.age != 0:
            continue
        for _ in range(params.lsc):
            j = int(rng.integers(dim))
            step = rng.uniform(-params.local_step * widths[j], params.local_step * widths[j])
            pos = tree.position.copy()
            pos[j] = min(max(pos[j] + step, b[j, 0]), b[j, 1])
            seeds.append(Tree(position=pos))
    for tree in forest:
        tree.age += 1
    return seeds


def population_limit(forest: list[Tree], params: FoaParams) -> tuple[list[Tree], list[Tree]]:
    """Split into (survivors, candidates): over-age trees first, then the
    worst-fitness excess beyond area_limit."""
    for tree in forest:
        if tree.fitness is None:
            raise ValueError("population_limit requires all fitnesses evaluated")
    survivors = [t for t in forest if t.age <= params.life_time]
    candidates = [t for t in forest if t.age > params.life_time]
    if len(survivors) > params.area_limit:
        survivors.sort(key=lambda t: t.fitness)
        candidates.extend(survivors[params.area_limit:])
        survivors = survivors[: params.area_limit]
    return survivors, candidates


def global_seeding(candidates: list[Tree], rng: np.random.Generator, params: FoaParams, bounds) -> list[Tree]:
    """ceil(transfer_rate * |candidates|) candidates get gsc coordinates
    re-drawn uniformly; results are new age-0 trees."""
    if not candidates:
        return []
    dim = candidates[0].position.shape[0]
    b = _check_bounds(bounds, dim)
    if params.gsc > dim:
        raise ValueError(f"gsc={params.gsc} exceeds dimension {dim}")
    n_sel = math.ceil(params.transfer_rate * len(candidates))
    chosen = rng.choice(len(candidates), size=n_sel, replace=False)
    seeds = []
    for idx in chosen:
        pos = candidates[int(idx)].position.copy()
        dims = rng.choice(dim, size=params.gsc, replace=False)
        for j in dims:
            pos[j] = rng.uniform(b[j, 0], b[j, 1])
        seeds.append(Tree(position=pos))
    return seeds


def _evaluate(trees: list[Tree], fitness) -> None:
    for tree in trees:
        if tree.fitness is None:
            value = float(fitness(tree.position))
            if not math.isfinite(value):
                raise ValueError(
                    f"fitness returned {value} at position {tree.position.tolist()}"
                )
            tree.fitness = value


def foa_minimize(fitness, dim: int, bounds, params: FoaParams,
                 rng: np.random.Generator | None = None,
                 on_epoch=None) -> FoaResult:
    """Run the three-step seeding loop for params.epochs epochs.

    Per epoch: local seeding, evaluation, population limiting, global
    seeding, evaluation, sort by fitness, best tree's age reset to 0.
    on_epoch(epoch, forest, n_survivors), when given, observes each epoch end.
    """
    if rng is None:
        rng = make_rng(params.seed)
    forest = initialize_forest(rng, params, dim, bounds)
    _evaluate(forest, fitness)

    best = min(forest, key=lambda t: t.fitness)
    best_position = best.position.copy()
    best_fitness = best.fitness
    trace: list[float] = []

    for epoch in range(params.epochs):
        seeds = local_seeding(forest, rng, params, bounds)
        _evaluate(seeds, fitness)
        forest.extend(seeds)

        forest, candidates = population_limit(forest, params)
        global_seeds = global_seeding(candidates, rng, params, bounds)
        _evaluate(global_seeds, fitness)
        n_survivors = len(forest)
        forest.extend(global_seeds)

        forest.sort(key=lambda t: t.fitness)
        forest[0].age = 0
        if forest[0].fitness < best_fitness:
            best_fitness = forest[0].fitness
            best_position = forest[0].position.copy()
        trace.append(best_fitness)
        if on_epoch is not None:
            on_epoch(epoch, forest, n_survivors)

    return FoaResult(best_position=best_position, best_fitness=best_fitness, trace=trace)
