"""Shared domain types, dataset I/O, and fuzzy-partition helpers."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np


class FuzzySweepError(Exception):
    """Base class for all errors raised by this package."""


class CsvParseError(FuzzySweepError):
    """CSV ingestion failure, located by 1-based row and column."""

    def __init__(self, message, row=None, column=None):
        self.row = row
        self.column = column
        where = ""
        if row is not None:
            where = f" at row {row}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)


class DegenerateClusterError(FuzzySweepError):
    """A cluster accumulated zero total membership weight."""

    def __init__(self, cluster):
        self.cluster = cluster
        super().__init__(f"cluster {cluster} has zero total membership weight")


class SingularCovarianceError(FuzzySweepError):
    """A cluster covariance is numerically singular."""

    def __init__(self, det, cluster=None):
        self.cluster = cluster
        self.det = det
        which = f"cluster {cluster}" if cluster is not None else "a cluster"
        super().__init__(
            f"covariance of {which} is singular (det={det:.3e}); "
            "raising the regularization (--cov-reg) usually fixes this"
        )


class UndefinedIndexError(FuzzySweepError):
    """A validity index is undefined for the given partition."""

    def __init__(self, index, reason):
        self.index = index
        super().__init__(f"{index} is undefined: {reason}")


@dataclass(frozen=True)
class DataSet:
    """N x d feature matrix with optional per-point class labels."""

    points: np.ndarray
    labels: list | None = None
    name: str = ""

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"points must be a non-empty 2-D matrix, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points contain non-finite values")
        pts = np.ascontiguousarray(pts)
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            if len(self.labels) != pts.shape[0]:
                raise ValueError(
                    f"labels length {len(self.labels)} does not match N={pts.shape[0]}"
                )
            object.__setattr__(self, "labels", list(self.labels))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class MembershipMatrix:
    """c x N fuzzy partition; every column sums to 1."""

    mu: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=float)
        if mu.ndim != 2 or mu.shape[0] < 1:
            raise ValueError(f"membership matrix must be 2-D with c >= 1, got shape {mu.shape}")
        if np.any(mu < 0.0) or np.any(mu > 1.0):
            raise ValueError("membership degrees must lie in [0, 1]")
        colsums = mu.sum(axis=0)
        if np.any(np.abs(colsums - 1.0) > 1e-9):
            worst = int(np.argmax(np.abs(colsums - 1.0)))
            raise ValueError(
                f"membership columns must sum to 1 (column {worst} sums to {colsums[worst]!r})"
            )
        mu = np.ascontiguousarray(mu)
        mu.flags.writeable = False
        object.__setattr__(self, "mu", mu)

    @property
    def n_clusters(self) -> int:
        return self.mu.shape[0]

    @property
    def n_points(self) -> int:
        return self.mu.shape[1]


@dataclass(frozen=True)
class ClusterModel:
    """Cluster centers plus optional per-cluster covariance/norm matrices."""

    centers: np.ndarray
    covariances: list[np.ndarray] | None = None
    norm_matrices: list[np.ndarray] | None = None
    fuzzifier: float = 2.0
    objective: float = 0.0

    def __post_init__(self):
        centers = np.ascontiguousarray(np.asarray(self.centers, dtype=float))
        if centers.ndim != 2:
            raise ValueError("centers must be a c x d matrix")
        centers.flags.writeable = False
        object.__setattr__(self, "centers", centers)
        if self.fuzzifier <= 1.0:
            raise ValueError("fuzzifier must exceed 1")
        if self.objective < 0.0:
            raise ValueError("objective must be nonnegative")
        if self.covariances is not None:
            for i, cov in enumerate(self.covariances):
                cov = np.asarray(cov, dtype=float)
                if np.max(np.abs(cov - cov.T)) > 1e-9:
                    raise ValueError(f"covariance {i} is not symmetric")
                eigvals = np.linalg.eigvalsh(cov)
                if eigvals.min() < -1e-9 * max(1.0, eigvals.max()):
                    raise ValueError(f"covariance {i} is not positive semi-definite")


@dataclass(frozen=True)
class ClusterConfig:
    """Shared knobs for the alternating-optimization clusterers."""

    k: int = 2
    m: float = 2.0
    tol: float = 1e-5
    max_iter: int = 300
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.m <= 1.0:
            raise ValueError("fuzzifier m must exceed 1")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


def sq_euclidean(x, v) -> float:
    """Squared Euclidean distance between two equal-length vectors."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    if x.shape != v.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {v.shape}")
    diff = x - v
    return float(np.dot(diff, diff))


def _parse_float(cell: str, row: int, column: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise CsvParseError(f"cell {cell!r} is not numeric", row=row, column=column) from None
    if not math.isfinite(value):
        raise CsvParseError(f"cell {cell!r} is not finite", row=row, column=column)
    return value


def _is_float(cell: str) -> bool:
    try:
        return math.isfinite(float(cell))
    except ValueError:
        return False


def load_csv(path, has_labels: bool = False, name: str | None = None) -> DataSet:
    """Parse a UTF-8 comma-separated file into a DataSet.

    One row per point, all feature cells decimal floats, optional trailing
    label column. A header row is auto-detected by a non-numeric first cell.
    """
    with open(path, encoding="utf-8") as fh:
        lines = [ln.rstrip("\n").rstrip("\r") for ln in fh]
    rows = [(i + 1, ln.split(",")) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise CsvParseError(f"{path}: file contains no data rows")

    if not _is_float(rows[0][1][0].strip()):
        rows = rows[1:]
        if not rows:
            raise CsvParseError(f"{path}: file contains only a header row")

    width = len(rows[0][1])
    n_features = width - 1 if has_labels else width
    if n_features < 1:
        raise CsvParseError("no feature columns", row=rows[0][0])

    points = np.empty((len(rows), n_features))
    labels: list | None = [] if has_labels else None
    for out_idx, (row_no, cells) in enumerate(rows):
        if len(cells) != width:
            raise CsvParseError(
                f"expected {width} columns, found {len(cells)}", row=row_no
            )
        for j in range(n_features):
            points[out_idx, j] = _parse_float(cells[j].strip(), row_no, j + 1)
        if has_labels:
            labels.append(cells[-1].strip())

    return DataSet(points=points, labels=labels, name=name or str(path))


def save_csv(dataset: DataSet, path) -> None:
    """Write a DataSet back out in the ingestion format (repr-exact floats)."""
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(dataset.n):
            cells = [repr(float(v)) for v in dataset.points[i]]
            if dataset.labels is not None:
                cells.append(str(dataset.labels[i]))
            fh.write(",".join(cells) + "\n")


def hard_assign(U) -> np.ndarray:
    """Crisp cluster id per point: argmax membership, ties to smallest index."""
    mu = U.mu if isinstance(U, MembershipMatrix) else np.asarray(U, dtype=float)
    return np.argmax(mu, axis=0)


def best_map_accuracy(assignments, labels) -> float:
    """Accuracy under the best cluster-to-label bijection.

    Exhaustive over permutations; fine for k <= 7.
    """
    assignments = np.asarray(assignments)
    label_values = sorted(set(labels), key=str)
    label_ids = np.array([label_values.index(lab) for lab in labels])
    k = max(len(label_values), int(assignments.max()) + 1)
    if k > 7:
        raise ValueError("permutation search is limited to k <= 7")
    hits = np.zeros((k, k), dtype=int)
    for a, lab in zip(assignments, label_ids):
        hits[a, lab] += 1
    best = max(
        sum(hits[i, perm[i]] for i in range(k))
        for perm in itertools.permutations(range(k))
    )
    return best / len(label_ids)
