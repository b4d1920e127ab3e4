"""Forest-optimization hybrids: the forest searches over center layouts while
the base clusterer performs one refinement cycle inside the fitness.

A tree encodes all k centers as one flat vector. Its fitness decodes the
centers, runs one membership -> center -> membership cycle of the base
algorithm, and returns the resulting objective. Degenerate layouts score a
large finite sentinel so the forest discards them instead of aborting.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as K
from .core import (
    ClusterConfig,
    ClusterModel,
    DegenerateClusterError,
    MembershipMatrix,
    SingularCovarianceError,
)
from .fcm import FcmResult, _as_points, make_rng
from .foa import FoaParams, foa_minimize
from .gk import GkConfig, fuzzy_covariance, norm_matrix

SENTINEL_FITNESS = 1e30


def encode_centers(centers) -> np.ndarray:
    """Row-major flattening of a c x d center matrix."""
    V = np.asarray(centers, dtype=float)
    if V.ndim != 2:
        raise ValueError("centers must be a c x d matrix")
    return V.reshape(-1).copy()


def decode_centers(flat, c: int, d: int) -> np.ndarray:
    flat = np.asarray(flat, dtype=float)
    if flat.shape != (c * d,):
        raise ValueError(f"flat length {flat.shape} does not match c*d={c * d}")
    return flat.reshape(c, d).copy()


def _centers_from(mu: np.ndarray, pts: np.ndarray, m: float) -> np.ndarray:
    sums, wsums = K.weighted_center_sums(mu, pts, m)
    for j, w in enumerate(wsums):
        if w == 0.0:
            raise DegenerateClusterError(j)
    return sums / wsums[:, None]


def _refine_fcm(pts: np.ndarray, V0: np.ndarray, m: float):
    """membership -> center -> membership cycle; returns (V1, U2, J)."""
    U1 = K.memberships_from_dist(K.sq_dist_matrix(pts, V0), m)
    V1 = _centers_from(U1, pts, m)
    D1 = K.sq_dist_matrix(pts, V1)
    U2 = K.memberships_from_dist(D1, m)
    return V1, U2, K.objective_from_dist(U2, D1, m)


def _refine_gk(pts: np.ndarray, V0: np.ndarray, cfg: GkConfig, frozen_norms=None):
    """Same cycle under the adaptive norm; returns (V1, covs, norms, U2, J)."""
    m = cfg.base.m
    d = pts.shape[1]
    rho = cfg.rho_vector()
    if frozen_norms is None:
        bootstrap = np.broadcast_to(np.eye(d), (V0.shape[0], d, d))
        bootstrap = np.ascontiguousarray(bootstrap)
    else:
        bootstrap = np.ascontiguousarray(np.asarray(frozen_norms, dtype=float))
    U1 = K.memberships_from_dist(K.gk_dist_matrix(pts, V0, bootstrap), m)
    V1 = _centers_from(U1, pts, m)
    covs = None
    if frozen_norms is None:
        covs = []
        norms = np.empty((V0.shape[0], d, d))
        for j in range(V0.shape[0]):
            C = fuzzy_covariance(U1, pts, V1, m, j, gamma=cfg.cov_reg)
            covs.append(C)
            norms[j] = norm_matrix(C, float(rho[j]), cluster=j)
    else:
        norms = bootstrap
    D1 = K.gk_dist_matrix(pts, np.ascontiguousarray(V1), norms)
    U2 = K.memberships_from_dist(D1, m)
    return V1, covs, norms, U2, K.objective_from_dist(U2, D1, m)


def hybrid_fitness_fcm(X, m: float):
    """Fitness over flat center vectors: one fuzzy c-means refinement cycle."""
    pts = _as_points(X)
    d = pts.shape[1]

    def fitness(flat) -> float:
        flat = np.asarray(flat, dtype=float)
        c = flat.shape[0] // d
        V0 = decode_centers(flat, c, d)
        try:
            return _refine_fcm(pts, V0, m)[2]
        except DegenerateClusterError:
            return SENTINEL_FITNESS

    return fitness


def hybrid_fitness_gk(X, cfg: GkConfig, frozen_norms=None):
    """Fitness over flat center vectors: one adaptive-norm refinement cycle."""
    pts = _as_points(X)
    d = pts.shape[1]

    def fitness(flat) -> float:
        flat = np.asarray(flat, dtype=float)
        c = flat.shape[0] // d
        V0 = decode_centers(flat, c, d)
        try:
            return _refine_gk(pts, V0, cfg, frozen_norms=frozen_norms)[4]
        except (DegenerateClusterError, SingularCovarianceError):
            return SENTINEL_FITNESS

    return fitness


def data_bounds(pts: np.ndarray, c: int) -> np.ndarray:
    """Per-coordinate search box: each feature's [min, max], tiled c times."""
    lows = pts.min(axis=0)
    highs = pts.max(axis=0)
    return np.tile(np.column_stack([lows, highs]), (c, 1))


def foa_fcm_run(X, cfg: ClusterConfig, foa_params: FoaParams,
                rng: np.random.Generator | None = None) -> FcmResult:
    """Forest search over center layouts scored by the c-means refinement."""
    pts = _as_points(X)
    if rng is None:
        rng = make_rng(foa_params.seed)
    c, d = cfg.k, pts.shape[1]
    result = foa_minimize(
        hybrid_fitness_fcm(pts, cfg.m), c * d, data_bounds(pts, c), foa_params, rng
    )
    V1, U2, J = _refine_fcm(pts, decode_centers(result.best_position, c, d), cfg.m)
    model = ClusterModel(centers=V1, fuzzifier=cfg.m, objective=J)
    return FcmResult(
        model=model,
        memberships=MembershipMatrix(U2),
        iterations=foa_params.epochs,
        objective_trace=list(result.trace),
        converged=True,
    )


def foa_gk_run(X, cfg: GkConfig, foa_params: FoaParams,
               rng: np.random.Generator | None = None) -> FcmResult:
    """Forest search over center layouts scored by the adaptive-norm refinement."""
    pts = _as_points(X)
    if rng is None:
        rng = make_rng(foa_params.seed)
    c, d = cfg.base.k, pts.shape[1]
    result = foa_minimize(
        hybrid_fitness_gk(pts, cfg), c * d, data_bounds(pts, c), foa_params, rng
    )
    V1, covs, norms, U2, J = _refine_gk(pts, decode_centers(result.best_position, c, d), cfg)
    model = ClusterModel(
        centers=V1,
        covariances=covs,
        norm_matrices=[norms[j] for j in range(c)],
        fuzzifier=cfg.base.m,
        objective=J,
    )
    return FcmResult(
        model=model,
        memberships=MembershipMatrix(U2),
        iterations=foa_params.epochs,
        objective_trace=list(result.trace),
        converged=True,
    )
