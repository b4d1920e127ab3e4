"""Gustafson-Kessel clustering: per-cluster adaptive quadratic-form metrics.

Each cluster carries a covariance-derived norm matrix A_j scaled so that
det(A_j) equals a fixed volume constant rho_j; the metric then adapts to the
cluster's shape while its volume stays pinned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .core import (
    ClusterConfig,
    ClusterModel,
    DegenerateClusterError,
    MembershipMatrix,
    SingularCovarianceError,
)
from .fcm import FcmResult, _as_mu, _as_points, init_membership, make_rng

_DET_FLOOR = 1e-300


@dataclass(frozen=True)
class GkConfig:
    """ClusterConfig plus the volume constants and covariance regularization."""

    base: ClusterConfig = field(default_factory=ClusterConfig)
    rho: float | tuple[float, ...] = 1.0
    cov_reg: float = 1e-4

    def __post_init__(self):
        if not 0.0 <= self.cov_reg < 1.0:
            raise ValueError("cov_reg must lie in [0, 1)")
        if np.any(np.asarray(self.rho_vector()) <= 0.0):
            raise ValueError("all volume constants rho must be positive")

    def rho_vector(self) -> np.ndarray:
        rho = np.asarray(self.rho, dtype=float)
        if rho.ndim == 0:
            rho = np.full(self.base.k, float(rho))
        if rho.shape != (self.base.k,):
            raise ValueError(f"rho must be scalar or length k={self.base.k}")
        return rho


def fuzzy_covariance(U, X, centers, m: float, i: int, gamma: float = 0.0) -> np.ndarray:
    """Membership-weighted scatter of cluster i around its center.

    With gamma > 0 the result is blended toward a scaled identity,
    (1 - gamma) C + gamma (tr C / d) I, which keeps high-dimensional or thin
    clusters invertible.
    """
    mu = _as_mu(U)
    pts = _as_points(X)
    V = np.asarray(centers, dtype=float)
    w = mu[i] ** m
    wsum = float(w.sum())
    if wsum == 0.0:
        raise DegenerateClusterError(i)
    C = K.weighted_scatter(pts, np.ascontiguousarray(V[i]), np.ascontiguousarray(w)) / wsum
    if gamma > 0.0:
        d = C.shape[0]
        C = (1.0 - gamma) * C + gamma * (np.trace(C) / d) * np.eye(d)
    return C


def norm_matrix(C: np.ndarray, rho: float, cluster: int | None = None) -> np.ndarray:
    """Volume-normalized inverse covariance A = (rho det C)^(1/d) C^-1.

    det(A) = rho by construction. Uses a symmetric eigendecomposition so the
    result is exactly symmetric and singularity is detected reliably.
    """
    C = np.asarray(C, dtype=float)
    d = C.shape[0]
    eigvals, Q = np.linalg.eigh(C)
    det = float(np.prod(eigvals))
    if eigvals[0] <= 0.0 or det < _DET_FLOOR:
        raise SingularCovarianceError(det, cluster=cluster)
    scale = np.exp((np.log(rho) + np.log(eigvals).sum()) / d)
    A = (Q * (scale / eigvals)) @ Q.T
    return (A + A.T) * 0.5


def gk_distance_sq(x, v, A) -> float:
    """Quadratic-form distance (x - v)^T A (x - v)."""
    diff = np.asarray(x, dtype=float) - np.asarray(v, dtype=float)
    return float(diff @ np.asarray(A, dtype=float) @ diff)


def gk_step(X, mu: np.ndarray, m: float, gamma: float, rho: np.ndarray,
            frozen_norms: np.ndarray | None = None):
    """One iteration: centers, covariances/norms, memberships, objective.

    frozen_norms bypasses covariance estimation (identity norms reduce the
    step to plain fuzzy c-means, bit for bit).
    Returns (centers, covariances, norms, new_mu, J).
    """
    pts = _as_points(X)
    mu = np.ascontiguousarray(mu)
    c = mu.shape[0]
    sums, wsums = K.weighted_center_sums(mu, pts, m)
    for j, w in enumerate(wsums):
        if w == 0.0:
            raise DegenerateClusterError(j)
    V = sums / wsums[:, None]

    covs = None
    if frozen_norms is None:
        covs = []
        norms = np.empty((c, pts.shape[1], pts.shape[1]))
        for j in range(c):
            C = fuzzy_covariance(mu, pts, V, m, j, gamma=gamma)
            covs.append(C)
            try:
                norms[j] = norm_matrix(C, float(rho[j]), cluster=j)
            except SingularCovarianceError as err:
                raise SingularCovarianceError(err.det, cluster=j) from None
    else:
        norms = np.ascontiguousarray(np.asarray(frozen_norms, dtype=float))

    D = K.gk_dist_matrix(pts, np.ascontiguousarray(V), norms)
    new_mu = K.memberships_from_dist(D, m)
    J = K.objective_from_dist(new_mu, D, m)
    return V, covs, norms, new_mu, J


def gk_run(X, cfg: GkConfig, rng: np.random.Generator | None = None) -> FcmResult:
    """Alternate the adaptive-norm updates until |dJ| < tol or max_iter."""
    pts = _as_points(X)
    base = cfg.base
    n = pts.shape[0]
    if base.k > n:
        raise ValueError(f"k={base.k} exceeds the number of points N={n}")
    if rng is None:
        rng = make_rng(base.seed)
    rho = cfg.rho_vector()

    mu = init_membership(rng, base.k, n).mu
    trace: list[float] = []
    converged = False
    V = covs = norms = None
    for _ in range(base.max_iter):
        V, covs, norms, mu, J = gk_step(pts, mu, base.m, cfg.cov_reg, rho)
        trace.append(J)
        if len(trace) >= 2 and abs(trace[-2] - trace[-1]) < base.tol:
            converged = True
            break

    model = ClusterModel(
        centers=V,
        covariances=covs,
        norm_matrices=[norms[j] for j in range(base.k)],
        fuzzifier=base.m,
        objective=trace[-1],
    )
    return FcmResult(
        model=model,
        memberships=MembershipMatrix(mu),
        iterations=len(trace),
        objective_trace=trace,
        converged=converged,
    )
