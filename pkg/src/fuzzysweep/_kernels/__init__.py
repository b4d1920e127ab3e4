"""Kernel backend dispatch.

The compiled extension (fuzzysweep._ckernels) is preferred when importable;
the numpy implementation is the fallback. FUZZYSWEEP_BACKEND=python|compiled
forces a choice at import time, and using_backend() swaps it temporarily
(used by the equivalence tests and the kernel benchmark).
"""

from __future__ import annotations

import contextlib
import os

from . import _pykernels

try:
    from fuzzysweep import _ckernels
except ImportError:
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels


def _select_default():
    requested = os.environ.get("FUZZYSWEEP_BACKEND", "auto").lower()
    if requested == "auto":
        return "compiled" if _ckernels is not None else "python"
    if requested not in _BACKENDS:
        raise ImportError(
            f"FUZZYSWEEP_BACKEND={requested!r} unavailable; "
            f"choices: {sorted(_BACKENDS)} or auto"
        )
    return requested


_active_name = _select_default()
_active = _BACKENDS[_active_name]


def backend_name() -> str:
    return _active_name


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def set_backend(name: str) -> None:
    global _active, _active_name
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choices: {sorted(_BACKENDS)}")
    _active_name = name
    _active = _BACKENDS[name]


@contextlib.contextmanager
def using_backend(name: str):
    previous = _active_name
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def sq_dist_matrix(X, V):
    return _active.sq_dist_matrix(X, V)


def gk_dist_matrix(X, V, A):
    return _active.gk_dist_matrix(X, V, A)


def memberships_from_dist(D, m):
    return _active.memberships_from_dist(D, m)


def weighted_center_sums(U, X, m):
    return _active.weighted_center_sums(U, X, m)


def objective_from_dist(U, D, m):
    return _active.objective_from_dist(U, D, m)


def weighted_scatter(X, v, w):
    return _active.weighted_scatter(X, v, w)
