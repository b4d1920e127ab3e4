"""Fuzzy c-means: alternating optimization of the weighted within-cluster scatter.

J(U, V) = sum_i sum_j u_ji^m ||x_i - v_j||^2, with the membership exponent m
and squared Euclidean distances. Centers and memberships are each other's
exact minimizers, so J never increases across iterations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .core import (
    ClusterConfig,
    ClusterModel,
    DataSet,
    DegenerateClusterError,
    MembershipMatrix,
)


@dataclass(frozen=True)
class FcmResult:
    """Converged model plus the per-iteration objective trace."""

    model: ClusterModel
    memberships: MembershipMatrix
    iterations: int
    objective_trace: list[float] = field(default_factory=list)
    converged: bool = False


def _as_points(X) -> np.ndarray:
    if isinstance(X, DataSet):
        return X.points
    return np.ascontiguousarray(np.asarray(X, dtype=float))


def _as_mu(U) -> np.ndarray:
    if isinstance(U, MembershipMatrix):
        return U.mu
    return np.ascontiguousarray(np.asarray(U, dtype=float))


def make_rng(seed) -> np.random.Generator:
    """Single entry point for seeding, so every run is reproducible."""
    return np.random.default_rng(seed)


def init_membership(rng: np.random.Generator, c: int, n: int) -> MembershipMatrix:
    """Random fuzzy partition: per column, c uniforms divided by their sum."""
    if c < 1 or n < 1:
        raise ValueError("c and N must be >= 1")
    raw = rng.random((c, n))
    colsums = raw.sum(axis=0)
    while np.any(colsums == 0.0):  # vanishing chance, but division must be safe
        redo = colsums == 0.0
        raw[:, redo] = rng.random((c, int(redo.sum())))
        colsums = raw.sum(axis=0)
    return MembershipMatrix(raw / colsums)


def update_centers(U, X, m: float) -> np.ndarray:
    """v_j = sum_i u_ji^m x_i / sum_i u_ji^m (exponent m in both sums)."""
    mu = _as_mu(U)
    pts = _as_points(X)
    sums, wsums = K.weighted_center_sums(mu, pts, m)
    for j, w in enumerate(wsums):
        if w == 0.0:
            raise DegenerateClusterError(j)
    return sums / wsums[:, None]


def update_memberships(X, centers, m: float) -> MembershipMatrix:
    """Optimal memberships for fixed centers under squared Euclidean distance."""
    pts = _as_points(X)
    V = np.ascontiguousarray(np.asarray(centers, dtype=float))
    D = K.sq_dist_matrix(pts, V)
    return MembershipMatrix(K.memberships_from_dist(D, m))


def objective(U, X, centers, m: float) -> float:
    """J = sum_i sum_j u_ji^m ||x_i - v_j||^2."""
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.ascontiguousarray(np.asarray(centers, dtype=float))
    return K.objective_from_dist(mu, K.sq_dist_matrix(pts, V), m)


def fcm_step(X, mu: np.ndarray, m: float):
    """One alternating iteration: centers from mu, then memberships, then J.

    Returns (centers, new_mu, J) on raw arrays; shared with the adaptive-norm
    clusterer's identity-norm reduction.
    """
    pts = _as_points(X)
    mu = np.ascontiguousarray(mu)
    sums, wsums = K.weighted_center_sums(mu, pts, m)
    for j, w in enumerate(wsums):
        if w == 0.0:
            raise DegenerateClusterError(j)
    V = sums / wsums[:, None]
    D = K.sq_dist_matrix(pts, V)
    new_mu = K.memberships_from_dist(D, m)
    return V, new_mu, K.objective_from_dist(new_mu, D, m)


def fcm_run(X, cfg: ClusterConfig, rng: np.random.Generator | None = None) -> FcmResult:
    """Alternate center/membership updates until |dJ| < tol or max_iter."""
    pts = _as_points(X)
    n = pts.shape[0]
    if cfg.k > n:
        raise ValueError(f"k={cfg.k} exceeds the number of points N={n}")
    if rng is None:
        rng = make_rng(cfg.seed)

    mu = init_membership(rng, cfg.k, n).mu
    trace: list[float] = []
    converged = False
    V = None
    for _ in range(cfg.max_iter):
        V, mu, J = fcm_step(pts, mu, cfg.m)
        trace.append(J)
        if len(trace) >= 2 and abs(trace[-2] - trace[-1]) < cfg.tol:
            converged = True
            break

    model = ClusterModel(centers=V, fuzzifier=cfg.m, objective=trace[-1])
    return FcmResult(
        model=model,
        memberships=MembershipMatrix(mu),
        iterations=len(trace),
        objective_trace=trace,
        converged=converged,
    )
