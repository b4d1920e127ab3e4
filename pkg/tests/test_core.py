import numpy as np
import pytest

from fuzzysweep.core import (
    ClusterConfig,
    ClusterModel,
    CsvParseError,
    DataSet,
    MembershipMatrix,
    best_map_accuracy,
    hard_assign,
    load_csv,
    save_csv,
    sq_euclidean,
)


class TestSqEuclidean:
    def test_identity(self):
        assert sq_euclidean([0, 0], [0, 0]) == 0.0

    def test_unit(self):
        assert sq_euclidean([1, 0], [0, 0]) == 1.0

    def test_three_four_five(self):
        assert sq_euclidean([1, 2, 3], [4, 6, 3]) == 25.0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            sq_euclidean([1, 2], [1, 2, 3])


class TestDataSet:
    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="non-finite"):
            DataSet(points=np.array([[1.0, np.nan]]))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            DataSet(points=np.empty((0, 3)))

    def test_label_length(self):
        with pytest.raises(ValueError, match="labels length"):
            DataSet(points=np.ones((2, 2)), labels=["a"])


class TestMembershipMatrix:
    def test_accepts_valid(self):
        mm = MembershipMatrix(np.array([[0.3, 1.0], [0.7, 0.0]]))
        assert mm.n_clusters == 2 and mm.n_points == 2

    def test_rejects_bad_column_sum(self):
        with pytest.raises(ValueError, match="sum to 1"):
            MembershipMatrix(np.array([[0.3, 0.3], [0.3, 0.7]]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match=r"\[0, 1\]"):
            MembershipMatrix(np.array([[1.2], [-0.2]]))


class TestClusterConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ClusterConfig(k=0)
        with pytest.raises(ValueError):
            ClusterConfig(m=1.0)
        with pytest.raises(ValueError):
            ClusterConfig(tol=0.0)
        with pytest.raises(ValueError):
            ClusterConfig(max_iter=0)


class TestClusterModel:
    def test_rejects_asymmetric_covariance(self):
        with pytest.raises(ValueError, match="symmetric"):
            ClusterModel(centers=np.zeros((1, 2)), covariances=[np.array([[1.0, 0.5], [0.0, 1.0]])])

    def test_rejects_indefinite_covariance(self):
        with pytest.raises(ValueError, match="positive semi-definite"):
            ClusterModel(centers=np.zeros((1, 2)), covariances=[np.diag([1.0, -1.0])])


class TestLoadCsv:
    def test_direct_parse(self, tmp_path):
        p = tmp_path / "two.csv"
        p.write_text("1.0,2.0\n3.0,4.0\n")
        ds = load_csv(p)
        assert ds.n == 2 and ds.dim == 2
        assert ds.labels is None
        np.testing.assert_array_equal(ds.points, [[1.0, 2.0], [3.0, 4.0]])

    def test_iris_fixture(self, iris):
        assert iris.n == 150 and iris.dim == 4
        assert len(set(iris.labels)) == 3

    def test_non_numeric_cell_located(self, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("1.0,abc\n")
        with pytest.raises(CsvParseError) as exc:
            load_csv(p)
        assert exc.value.row == 1 and exc.value.column == 2

    def test_ragged_rows(self, tmp_path):
        p = tmp_path / "ragged.csv"
        p.write_text("1.0,2.0\n3.0\n")
        with pytest.raises(CsvParseError) as exc:
            load_csv(p)
        assert exc.value.row == 2

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.csv"
        p.write_text("")
        with pytest.raises(CsvParseError, match="no data rows"):
            load_csv(p)

    def test_header_autodetected(self, tmp_path):
        p = tmp_path / "hdr.csv"
        p.write_text("x,y\n1.0,2.0\n")
        ds = load_csv(p)
        assert ds.n == 1

    def test_labels_column(self, tmp_path):
        p = tmp_path / "lab.csv"
        p.write_text("1.0,2.0,a\n3.0,4.0,b\n")
        ds = load_csv(p, has_labels=True)
        assert ds.dim == 2 and ds.labels == ["a", "b"]

    def test_roundtrip_bit_exact(self, tmp_path, rng):
        pts = rng.normal(size=(20, 3))
        ds = DataSet(points=pts, labels=[str(i % 2) for i in range(20)])
        out = tmp_path / "rt.csv"
        save_csv(ds, out)
        back = load_csv(out, has_labels=True)
        assert np.array_equal(back.points, ds.points)
        assert back.labels == ds.labels


class TestHardAssign:
    def test_argmax(self):
        U = np.array([[0.7, 0.2], [0.3, 0.8]])
        np.testing.assert_array_equal(hard_assign(U), [0, 1])

    def test_tie_smallest_index(self):
        U = np.array([[0.5], [0.5]])
        assert hard_assign(U)[0] == 0

    def test_uniform_all_zero(self):
        U = np.full((3, 5), 1 / 3)
        assert set(hard_assign(U)) == {0}

    def test_invariant_under_column_rescale(self, rng):
        raw = rng.random((4, 30))
        U = raw / raw.sum(axis=0)
        base = hard_assign(U)
        scaled = U * rng.uniform(0.5, 2.0, size=30)
        renorm = scaled / scaled.sum(axis=0)
        np.testing.assert_array_equal(hard_assign(renorm), base)


class TestBestMapAccuracy:
    def test_perfect_under_permutation(self):
        assignments = [1, 1, 0, 0]
        labels = ["a", "a", "b", "b"]
        assert best_map_accuracy(assignments, labels) == 1.0

    def test_partial(self):
        assignments = [0, 0, 1, 1]
        labels = ["a", "b", "b", "b"]
        assert best_map_accuracy(assignments, labels) == 0.75
