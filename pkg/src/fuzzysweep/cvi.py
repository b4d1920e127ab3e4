"""Seven fuzzy cluster validity indexes, each with a fixed optimization
direction: PC, NPC, BWS are maximized; FHV, FS, XB, BH are minimized.

Conventions shared by all indexes: memberships enter squared in PC/NPC and
with the fuzzifier exponent m elsewhere; distances are squared Euclidean;
cluster covariances are the membership-weighted scatter matrices (optionally
regularized with the same identity blend the adaptive-norm clusterer uses).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .core import (
    DegenerateClusterError,
    FuzzySweepError,
    UndefinedIndexError,
)
from .fcm import _as_mu, _as_points
from .gk import fuzzy_covariance

INDEX_ORDER = ("PC", "NPC", "FHV", "FS", "XB", "BH", "BWS")
INDEX_DIRECTIONS = {
    "PC": "max",
    "NPC": "max",
    "FHV": "min",
    "FS": "min",
    "XB": "min",
    "BH": "min",
    "BWS": "max",
}


@dataclass(frozen=True)
class IndexValue:
    name: str
    value: float | None
    direction: str

    def __post_init__(self):
        if self.name not in INDEX_DIRECTIONS:
            raise ValueError(f"unknown index {self.name!r}")
        if self.direction != INDEX_DIRECTIONS[self.name]:
            raise ValueError(f"{self.name} direction must be {INDEX_DIRECTIONS[self.name]!r}")


def pc(U) -> float:
    """Partition coefficient: mean squared membership mass, in [1/c, 1]."""
    mu = _as_mu(U)
    return float(np.sum(mu**2) / mu.shape[1])


def npc(U) -> float:
    """Partition coefficient rescaled so uniform -> 0 and crisp -> 1."""
    mu = _as_mu(U)
    c = mu.shape[0]
    if c < 2:
        raise UndefinedIndexError("NPC", "requires at least 2 clusters")
    return float(1.0 - c / (c - 1.0) * (1.0 - pc(mu)))


def _weighted_sq_dist_sum(mu, pts, V, m) -> float:
    return K.objective_from_dist(mu, K.sq_dist_matrix(pts, np.ascontiguousarray(V)), m)


def _covariances(mu, pts, V, m, gamma):
    covs = []
    for i in range(mu.shape[0]):
        try:
            covs.append(fuzzy_covariance(mu, pts, V, m, i, gamma=gamma))
        except DegenerateClusterError:
            raise UndefinedIndexError(
                "covariance", f"cluster {i} has zero membership weight"
            ) from None
    return covs


def fhv(U, X, centers, m: float, gamma: float = 0.0) -> float:
    """Fuzzy hypervolume: sum over clusters of sqrt(det covariance)."""
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.asarray(centers, dtype=float)
    total = 0.0
    for i, C in enumerate(_covariances(mu, pts, V, m, gamma)):
        det = float(np.linalg.det(C))
        d = C.shape[0]
        noise = 1e-12 * max((np.trace(C) / d) ** d, 1e-300)
        if det < -noise:
            raise UndefinedIndexError("FHV", f"cluster {i} covariance has negative determinant")
        total += np.sqrt(max(det, 0.0))
    return float(total)


def fs(U, X, centers, m: float) -> float:
    """Compactness minus separation from the grand mean (lower is better)."""
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.asarray(centers, dtype=float)
    grand = pts.mean(axis=0)
    compact = _weighted_sq_dist_sum(mu, pts, V, m)
    wsums = (mu**m).sum(axis=1)
    center_sq = np.einsum("ij,ij->i", V - grand, V - grand)
    return float(compact - np.dot(wsums, center_sq))


def _min_center_separation(V) -> float:
    c = V.shape[0]
    best = np.inf
    for i in range(c):
        for j in range(i + 1, c):
            diff = V[i] - V[j]
            best = min(best, float(np.dot(diff, diff)))
    return best


def xb(U, X, centers, m: float) -> float:
    """Weighted scatter over N times the minimum squared center separation."""
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.asarray(centers, dtype=float)
    if V.shape[0] < 2:
        raise UndefinedIndexError("XB", "requires at least 2 clusters")
    sep = _min_center_separation(V)
    if sep == 0.0:
        raise UndefinedIndexError("XB", "two cluster centers coincide")
    return float(_weighted_sq_dist_sum(mu, pts, V, m) / (pts.shape[0] * sep))


def bh(U, X, centers, m: float) -> float:
    """Mean weighted scatter times the sum of inverse squared center gaps."""
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.asarray(centers, dtype=float)
    c = V.shape[0]
    if c < 2:
        raise UndefinedIndexError("BH", "requires at least 2 clusters")
    pair_sum = 0.0
    for i in range(c):
        for j in range(i + 1, c):
            diff = V[i] - V[j]
            gap = float(np.dot(diff, diff))
            if gap == 0.0:
                raise UndefinedIndexError("BH", "two cluster centers coincide")
            pair_sum += 1.0 / gap
    compact = _weighted_sq_dist_sum(mu, pts, V, m) / pts.shape[0]
    return float(compact * pair_sum)


def bws(U, X, centers, m: float, gamma: float = 0.0) -> float:
    """Separation/compactness trace ratio (higher is better).

    Compactness is the summed trace of the cluster covariances; separation is
    the trace of the membership-weighted scatter of the centers around the
    grand mean.
    """
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.asarray(centers, dtype=float)
    comp = float(sum(np.trace(C) for C in _covariances(mu, pts, V, m, gamma)))
    if comp == 0.0:
        raise UndefinedIndexError("BWS", "all clusters are point-degenerate")
    grand = pts.mean(axis=0)
    wsums = (mu**m).sum(axis=1)
    center_sq = np.einsum("ij,ij->i", V - grand, V - grand)
    sep = float(np.dot(wsums, center_sq))
    return sep / comp


def evaluate_all(U, X, centers, m: float) -> list[IndexValue]:
    """All seven indexes in fixed order; per-index failures become None."""
    mu = _as_mu(U)
    computations = {
        "PC": lambda: pc(mu),
        "NPC": lambda: npc(mu),
        "FHV": lambda: fhv(mu, X, centers, m),
        "FS": lambda: fs(mu, X, centers, m),
        "XB": lambda: xb(mu, X, centers, m),
        "BH": lambda: bh(mu, X, centers, m),
        "BWS": lambda: bws(mu, X, centers, m),
    }
    report = []
    for name in INDEX_ORDER:
        try:
            value = computations[name]()
        except FuzzySweepError:
            value = None
        report.append(IndexValue(name=name, value=value, direction=INDEX_DIRECTIONS[name]))
    return report
