import numpy as np
import pytest

from fuzzysweep.cvi import INDEX_ORDER
from fuzzysweep.foa import FoaParams
from fuzzysweep.sweep import (
    CORRECT,
    NEAR_CORRECT,
    UNDEFINED,
    WRONG,
    SweepConfig,
    classify_detection,
    run_sweep,
    tally,
)


class TestClassifyDetection:
    def test_exact(self):
        assert classify_detection(3, 3) == CORRECT

    def test_off_by_one(self):
        assert classify_detection(4, 3) == NEAR_CORRECT
        assert classify_detection(2, 3) == NEAR_CORRECT

    def test_wrong(self):
        assert classify_detection(5, 3) == WRONG

    def test_missing_selection(self):
        assert classify_detection(None, 3) == UNDEFINED


class TestRunSweep:
    def test_blobs_xb_selects_two(self, blobs):
        report = run_sweep(blobs.points, SweepConfig(algorithm="fcm", k_min=2, k_max=4, seed=0))
        assert report.best_k["XB"] == 2

    def test_iris_some_index_finds_three(self, iris):
        report = run_sweep(
            iris.points, SweepConfig(algorithm="fcm", k_min=2, k_max=5, seed=7, true_k=3)
        )
        assert 3 in report.best_k.values()
        assert report.detections["BWS"] in (CORRECT, NEAR_CORRECT)

    def test_per_k_shape(self, blobs):
        report = run_sweep(blobs.points, SweepConfig(algorithm="fcm", k_min=2, k_max=5, seed=1))
        assert report.k_values == [2, 3, 4, 5]
        for k in report.k_values:
            assert len(report.values[k]) == 7

    def test_k1_leaves_pairwise_indexes_undefined(self, blobs):
        report = run_sweep(blobs.points, SweepConfig(algorithm="fcm", k_min=1, k_max=3, seed=1))
        by_name = {iv.name: iv.value for iv in report.values[1]}
        assert by_name["NPC"] is None and by_name["XB"] is None and by_name["BH"] is None
        assert by_name["PC"] is not None

    def test_deterministic(self, iris):
        cfg = SweepConfig(algorithm="fcm", seed=21)
        a = run_sweep(iris.points, cfg)
        b = run_sweep(iris.points, cfg)
        assert a.best_k == b.best_k
        assert a.objectives == b.objectives

    def test_restarts_keep_minimal_objective(self, iris):
        single = run_sweep(iris.points, SweepConfig(algorithm="fcm", seed=5, restarts=1))
        multi = run_sweep(iris.points, SweepConfig(algorithm="fcm", seed=5, restarts=4))
        for k in multi.k_values:
            assert multi.objectives[k] <= single.objectives[k] + 1e-12

    def test_affine_rescale_keeps_best_k(self, blobs):
        # argmax consistency: a*v + b with a > 0 cannot change the selection
        report = run_sweep(blobs.points, SweepConfig(algorithm="fcm", k_min=2, k_max=4, seed=3))
        for pos, name in enumerate(INDEX_ORDER):
            defined = [
                (k, report.values[k][pos].value)
                for k in report.k_values
                if report.values[k][pos].value is not None
            ]
            rescaled = [(k, 2.5 * v + 7.0) for k, v in defined]
            sign = 1.0 if report.values[report.k_values[0]][pos].direction == "min" else -1.0
            best = min(rescaled, key=lambda kv: (sign * kv[1], kv[0]))[0]
            assert best == report.best_k[name]

    def test_hybrid_algorithms_run(self, blobs):
        cfg = SweepConfig(
            algorithm="foa-fcm", k_min=2, k_max=3, seed=2, foa=FoaParams(epochs=5, seed=2)
        )
        report = run_sweep(blobs.points, cfg)
        assert report.best_k["XB"] == 2

    def test_invalid_config(self):
        with pytest.raises(ValueError):
            SweepConfig(algorithm="kmeans")
        with pytest.raises(ValueError):
            SweepConfig(k_min=3, k_max=2)
        with pytest.raises(ValueError):
            SweepConfig(restarts=0)

    def test_kmax_exceeding_n(self):
        with pytest.raises(ValueError, match="exceeds"):
            run_sweep(np.zeros((3, 2)), SweepConfig(algorithm="fcm", k_min=2, k_max=5))


class TestTally:
    def _report(self, algorithm, detections):
        from fuzzysweep.sweep import CviReport

        return CviReport(
            algorithm=algorithm,
            k_values=[2, 3],
            objectives={2: 1.0, 3: 0.5},
            values={},
            best_k={},
            true_k=3,
            detections=detections,
        )

    def test_single_correct_bws(self):
        detections = {name: WRONG for name in INDEX_ORDER}
        detections["BWS"] = CORRECT
        result = tally([self._report("fcm", detections)])
        assert result.per_index["BWS"] == (1, 0)
        for name in INDEX_ORDER:
            if name != "BWS":
                assert result.per_index[name] == (0, 0)
        assert result.per_algorithm["fcm"] == (1, 0)

    def test_empty_list_errors(self):
        with pytest.raises(ValueError, match="no reports"):
            tally([])

    def test_missing_ground_truth_errors(self):
        report = self._report("fcm", None)
        with pytest.raises(ValueError, match="ground-truth"):
            tally([report])

    def test_counts_accumulate_across_reports(self):
        a = {name: WRONG for name in INDEX_ORDER}
        a["BWS"] = CORRECT
        b = dict(a)
        b["BWS"] = NEAR_CORRECT
        result = tally([self._report("fcm", a), self._report("gk", b)])
        assert result.per_index["BWS"] == (1, 1)
        assert result.per_algorithm == {"fcm": (1, 0), "gk": (0, 1)}
