"""Pure-numpy implementations of the hot kernels.

Fallback backend; fuzzysweep._ckernels provides the compiled equivalents.
Both backends share the contracts documented here.
"""

from __future__ import annotations

import numpy as np


def sq_dist_matrix(X: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances, shape (c, N) for X (N, d) and V (c, d)."""
    c = V.shape[0]
    D = np.empty((c, X.shape[0]))
    for j in range(c):
        diff = X - V[j]
        D[j] = np.einsum("ij,ij->i", diff, diff)
    return D


def gk_dist_matrix(X: np.ndarray, V: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Quadratic-form distances (x - v_j)^T A_j (x - v_j), shape (c, N)."""
    c = V.shape[0]
    D = np.empty((c, X.shape[0]))
    for j in range(c):
        diff = X - V[j]
        D[j] = np.einsum("ij,ij->i", diff, diff @ A[j])
    return D


def memberships_from_dist(D: np.ndarray, m: float) -> np.ndarray:
    """Memberships minimizing the weighted objective for fixed distances.

    u[j, i] = 1 / sum_t (D[j, i] / D[t, i]) ** (1 / (m - 1)), evaluated as
    (dmin/D[j, i])^p normalized per column so every power stays in (0, 1].
    A point at zero distance from any center is assigned crisply to the
    smallest such index.
    """
    p = 1.0 / (m - 1.0)
    dmin = D.min(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = dmin / D
        if p != 1.0:
            scaled **= p
        U = scaled / scaled.sum(axis=0)
    zero_cols = np.nonzero(dmin == 0.0)[0]
    if zero_cols.size:
        nearest = np.argmax(D[:, zero_cols] == 0.0, axis=0)
        U[:, zero_cols] = 0.0
        U[nearest, zero_cols] = 1.0
    return U


def weighted_center_sums(U: np.ndarray, X: np.ndarray, m: float):
    """Return (sum_i u_ji^m x_i, sum_i u_ji^m) per cluster, shapes (c, d), (c,)."""
    W = U**m
    return W @ X, W.sum(axis=1)


def objective_from_dist(U: np.ndarray, D: np.ndarray, m: float) -> float:
    """sum_ij u_ji^m D_ji."""
    return float(np.sum(U**m * D))


def weighted_scatter(X: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Unnormalized weighted scatter sum_k w_k (x_k - v)(x_k - v)^T, symmetric."""
    Xc = X - v
    S = (Xc * w[:, None]).T @ Xc
    return (S + S.T) * 0.5
