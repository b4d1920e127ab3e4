import numpy as np
import pytest

from fuzzysweep import _kernels as K
from fuzzysweep._kernels import _pykernels

compiled = pytest.importorskip("fuzzysweep._ckernels") if "compiled" in K.available_backends() else None

needs_compiled = pytest.mark.skipif(
    "compiled" not in K.available_backends(), reason="compiled kernels not built"
)


def random_inputs(rng):
    n = int(rng.integers(3, 40))
    d = int(rng.integers(1, 6))
    c = int(rng.integers(1, 5))
    X = rng.normal(size=(n, d))
    V = rng.normal(size=(c, d))
    raw = rng.random((c, n)) + 1e-6
    U = raw / raw.sum(axis=0)
    B = rng.normal(size=(c, d, d))
    A = np.ascontiguousarray(np.einsum("cij,ckj->cik", B, B) + 0.05 * np.eye(d))
    return X, V, U, A


@needs_compiled
class TestBackendEquivalence:
    def test_all_kernels_agree(self, rng):
        m = 2.0
        for _ in range(30):
            X, V, U, A = random_inputs(rng)
            py_d = _pykernels.sq_dist_matrix(X, V)
            cy_d = compiled.sq_dist_matrix(X, V)
            np.testing.assert_allclose(cy_d, py_d, rtol=1e-12, atol=1e-12)

            np.testing.assert_allclose(
                compiled.gk_dist_matrix(X, V, A), _pykernels.gk_dist_matrix(X, V, A),
                rtol=1e-12, atol=1e-12,
            )
            np.testing.assert_allclose(
                compiled.memberships_from_dist(py_d, m),
                _pykernels.memberships_from_dist(py_d, m),
                rtol=1e-12, atol=1e-14,
            )
            cs, cw = compiled.weighted_center_sums(U, X, m)
            ps, pw = _pykernels.weighted_center_sums(U, X, m)
            np.testing.assert_allclose(cs, ps, rtol=1e-12)
            np.testing.assert_allclose(cw, pw, rtol=1e-12)
            assert compiled.objective_from_dist(U, py_d, m) == pytest.approx(
                _pykernels.objective_from_dist(U, py_d, m), rel=1e-12
            )
            w = np.ascontiguousarray(U[0] ** m)
            np.testing.assert_allclose(
                compiled.weighted_scatter(X, np.ascontiguousarray(V[0]), w),
                _pykernels.weighted_scatter(X, V[0], w),
                rtol=1e-12, atol=1e-12,
            )

    def test_coincidence_rule_matches(self):
        D = np.array([[0.0, 2.0], [1.0, 0.0], [4.0, 0.0]])
        for backend in (compiled, _pykernels):
            U = backend.memberships_from_dist(D, 2.0)
            np.testing.assert_array_equal(U[:, 0], [1.0, 0.0, 0.0])
            np.testing.assert_array_equal(U[:, 1], [0.0, 1.0, 0.0])


class TestIdentityReductionPerBackend:
    @pytest.mark.parametrize("backend", K.available_backends())
    def test_gk_distance_with_identity_is_bitwise_euclidean(self, backend, rng):
        with K.using_backend(backend):
            for _ in range(10):
                X, V, _, _ = random_inputs(rng)
                eye = np.ascontiguousarray(
                    np.broadcast_to(np.eye(X.shape[1]), (V.shape[0], X.shape[1], X.shape[1]))
                )
                assert np.array_equal(K.gk_dist_matrix(X, V, eye), K.sq_dist_matrix(X, V))


class TestBackendSelection:
    def test_default_prefers_compiled_when_available(self):
        assert K.backend_name() in K.available_backends()

    def test_override_context(self):
        before = K.backend_name()
        with K.using_backend("python"):
            assert K.backend_name() == "python"
        assert K.backend_name() == before

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError, match="unknown backend"):
            K.set_backend("fortran")
