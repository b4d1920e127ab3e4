"""Bundled datasets and synthetic generators used by the CLI and tests."""

from __future__ import annotations

import importlib.resources

import numpy as np

from .core import DataSet, load_csv
from .fcm import make_rng

FIXTURE_NAMES = ("iris",)


def load_fixture(name: str) -> DataSet:
    if name != "iris":
        raise ValueError(f"unknown fixture {name!r}; available: {FIXTURE_NAMES}")
    path = importlib.resources.files("fuzzysweep").joinpath("data/iris.csv")
    with importlib.resources.as_file(path) as p:
        return load_csv(p, has_labels=True, name="iris")


def two_blobs(n_per: int = 10, separation: float = 100.0, spread: float = 1.0,
              seed: int = 1234) -> DataSet:
    """Two spherical 2-D blobs; separation defaults to 100x the spread."""
    rng = make_rng(seed)
    a = rng.normal(loc=(0.0, 0.0), scale=spread, size=(n_per, 2))
    b = rng.normal(loc=(separation, 0.0), scale=spread, size=(n_per, 2))
    labels = ["a"] * n_per + ["b"] * n_per
    return DataSet(points=np.vstack([a, b]), labels=labels, name="two-blobs")


def elongated_blobs(n_per: int = 60, long_spread: float = 5.0,
                    short_spread: float = 0.5, gap: float = 4.0,
                    seed: int = 77) -> DataSet:
    """Two parallel 10:1 elongated blobs whose Euclidean-optimal 2-split cuts
    across the long axis instead of between the blobs."""
    rng = make_rng(seed)
    x = rng.normal(scale=long_spread, size=2 * n_per)
    y = rng.normal(scale=short_spread, size=2 * n_per)
    y[n_per:] += gap
    labels = ["low"] * n_per + ["high"] * n_per
    return DataSet(points=np.column_stack([x, y]), labels=labels, name="elongated-blobs")


def planted_gaussians(n: int = 500, dim: int = 256, k: int = 4,
                      center_scale: float = 2.0, seed: int = 2024) -> DataSet:
    """High-dimensional isotropic Gaussian clusters with planted centers."""
    rng = make_rng(seed)
    centers = rng.normal(scale=center_scale, size=(k, dim))
    counts = [n // k + (1 if i < n % k else 0) for i in range(k)]
    chunks = []
    labels = []
    for i, cnt in enumerate(counts):
        chunks.append(centers[i] + rng.normal(size=(cnt, dim)))
        labels.extend([str(i)] * cnt)
    return DataSet(points=np.vstack(chunks), labels=labels, name="planted-gaussians")
