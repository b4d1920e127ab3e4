# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contracts match fuzzysweep._kernels._pykernels."""

import numpy as np

cimport numpy as cnp
from libc.math cimport pow

cnp.import_array()


def sq_dist_matrix(const double[:, ::1] X, const double[:, ::1] V):
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1], c = V.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double acc, diff
    out = np.empty((c, n))
    cdef double[:, ::1] D = out
    for j in range(c):
        for i in range(n):
            acc = 0.0
            for k in range(d):
                diff = X[i, k] - V[j, k]
                acc += diff * diff
            D[j, i] = acc
    return out


def gk_dist_matrix(const double[:, ::1] X, const double[:, ::1] V, const double[:, :, ::1] A):
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1], c = V.shape[0]
    cdef Py_ssize_t i, j, k, l
    cdef double acc, y
    out = np.empty((c, n))
    cdef double[:, ::1] D = out
    cdef double[::1] diff = np.empty(d)
    for j in range(c):
        for i in range(n):
            for k in range(d):
                diff[k] = X[i, k] - V[j, k]
            acc = 0.0
            for k in range(d):
                y = 0.0
                for l in range(d):
                    y += A[j, k, l] * diff[l]
                acc += diff[k] * y
            D[j, i] = acc
    return out


def memberships_from_dist(const double[:, ::1] D, double m):
    # u[j,i] = (dmin/D[j,i])^p / sum_t (dmin/D[t,i])^p with p = 1/(m-1);
    # rescaling by the smallest distance keeps every power in (0, 1]
    cdef Py_ssize_t c = D.shape[0], n = D.shape[1]
    cdef Py_ssize_t i, j, t, zero_at
    cdef double p = 1.0 / (m - 1.0)
    cdef double s, dmin, r
    cdef bint plain_ratio = p == 1.0
    out = np.empty((c, n))
    cdef double[:, ::1] U = out
    cdef double[::1] scaled = np.empty(c)
    for i in range(n):
        zero_at = -1
        dmin = D[0, i]
        for j in range(c):
            if D[j, i] == 0.0:
                zero_at = j
                break
            if D[j, i] < dmin:
                dmin = D[j, i]
        if zero_at >= 0:
            for t in range(c):
                U[t, i] = 0.0
            U[zero_at, i] = 1.0
            continue
        s = 0.0
        for j in range(c):
            r = dmin / D[j, i]
            if not plain_ratio:
                r = pow(r, p)
            scaled[j] = r
            s += r
        for j in range(c):
            U[j, i] = scaled[j] / s
    return out


def weighted_center_sums(const double[:, ::1] U, const double[:, ::1] X, double m):
    cdef Py_ssize_t c = U.shape[0], n = U.shape[1], d = X.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double w
    cdef bint square = m == 2.0
    sums = np.zeros((c, d))
    wsums = np.zeros(c)
    cdef double[:, ::1] S = sums
    cdef double[::1] W = wsums
    for j in range(c):
        for i in range(n):
            w = U[j, i] * U[j, i] if square else pow(U[j, i], m)
            W[j] += w
            for k in range(d):
                S[j, k] += w * X[i, k]
    return sums, wsums


def objective_from_dist(const double[:, ::1] U, const double[:, ::1] D, double m):
    cdef Py_ssize_t c = U.shape[0], n = U.shape[1]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    cdef bint square = m == 2.0
    for j in range(c):
        for i in range(n):
            acc += (U[j, i] * U[j, i] if square else pow(U[j, i], m)) * D[j, i]
    return acc


def weighted_scatter(const double[:, ::1] X, const double[::1] v, const double[::1] w):
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1]
    cdef Py_ssize_t i, a, b
    cdef double wa
    out = np.zeros((d, d))
    cdef double[:, ::1] S = out
    cdef double[::1] diff = np.empty(d)
    for i in range(n):
        for a in range(d):
            diff[a] = X[i, a] - v[a]
        for a in range(d):
            wa = w[i] * diff[a]
            for b in range(a, d):
                S[a, b] += wa * diff[b]
    for a in range(d):
        for b in range(a + 1, d):
            S[b, a] = S[a, b]
    return out
