"""Scikit-learn facade: params round-trip, fit/predict/transform behavior."""

import numpy as np
import pytest
from sklearn.base import clone

from warpq.estimators import DtwKMeans, DtwNearestNeighbor, TimeSeriesCondenser
from helpers import random_expansion, random_series


class TestTimeSeriesCondenser:
    def test_transform_condenses_each_row(self):
        out = TimeSeriesCondenser().fit_transform([[0.0, 1.0, 1.0], [2.0, 2.0]])
        np.testing.assert_array_equal(out[0], [0.0, 1.0])
        np.testing.assert_array_equal(out[1], [2.0])

    def test_accepts_2d_arrays(self):
        X = np.array([[1.0, 1.0, 2.0], [3.0, 4.0, 4.0]])
        out = TimeSeriesCondenser().fit(X).transform(X)
        assert [len(o) for o in out] == [2, 2]

    def test_quantize_decimals_collapses_near_duplicates(self):
        X = [[1.001, 0.999, 5.0]]
        assert len(TimeSeriesCondenser().fit_transform(X)[0]) == 3
        out = TimeSeriesCondenser(quantize_decimals=2).fit_transform(X)
        assert len(out[0]) == 2

    def test_sklearn_param_interface(self):
        est = TimeSeriesCondenser(quantize_decimals=3)
        assert est.get_params() == {"quantize_decimals": 3}
        cloned = clone(est)
        assert cloned.get_params() == est.get_params()


class TestDtwNearestNeighbor:
    def _toy(self, metric="dtw"):
        clf = DtwNearestNeighbor(metric=metric)
        clf.fit([[0.0, 1.0], [0.0, 2.0]], ["a", "b"])
        return clf

    def test_predicts_exact_matches(self):
        clf = self._toy()
        assert list(clf.predict([[0.0, 2.0], [0.0, 1.0]])) == ["b", "a"]

    def test_zero_distance_prototype_wins(self):
        clf = self._toy()
        assert clf.predict([[0.0, 1.0, 1.0]])[0] == "a"

    def test_tie_goes_to_lowest_index(self):
        clf = DtwNearestNeighbor()
        clf.fit([[0.0], [2.0]], ["lo", "hi"])
        assert clf.predict([[1.0]])[0] == "lo"

    def test_expanding_a_prototype_can_flip_plain_dtw_predictions(self):
        z = [[0.0, 1.4]]
        plain = DtwNearestNeighbor(metric="dtw")
        plain.fit([[0.0, 1.0], [0.0, 2.0]], ["a", "b"])
        assert plain.predict(z)[0] == "a"
        plain.fit([[0.0, 1.0, 1.0, 1.0], [0.0, 2.0]], ["a", "b"])
        assert plain.predict(z)[0] == "b"

        invariant = DtwNearestNeighbor(metric="dtw-star")
        invariant.fit([[0.0, 1.0], [0.0, 2.0]], ["a", "b"])
        assert invariant.predict(z)[0] == "a"
        invariant.fit([[0.0, 1.0, 1.0, 1.0], [0.0, 2.0]], ["a", "b"])
        assert invariant.predict(z)[0] == "a"

    def test_invariant_metric_stable_under_expansions(self):
        rng = np.random.default_rng(3)
        train = [random_series(rng, 6) for _ in range(5)]
        labels = ["c%d" % i for i in range(5)]
        queries = [random_series(rng, 6) for _ in range(10)]
        ref = DtwNearestNeighbor(metric="dtw-star").fit(train, labels)
        expanded = DtwNearestNeighbor(metric="dtw-star").fit(
            [random_expansion(rng, t) for t in train], labels
        )
        assert list(ref.predict(queries)) == list(expanded.predict(queries))

    def test_thread_count_never_changes_predictions(self):
        rng = np.random.default_rng(7)
        train = [random_series(rng, 8) for _ in range(6)]
        labels = [str(i % 2) for i in range(6)]
        queries = [random_series(rng, 8) for _ in range(12)]
        serial = DtwNearestNeighbor(n_jobs=1).fit(train, labels)
        threaded = DtwNearestNeighbor(n_jobs=4).fit(train, labels)
        assert list(serial.predict(queries)) == list(threaded.predict(queries))

    def test_score_is_accuracy(self):
        clf = self._toy()
        assert clf.score([[0.0, 1.0], [0.0, 2.0]], ["a", "a"]) == 0.5

    def test_unfitted_predict_raises(self):
        with pytest.raises(ValueError):
            DtwNearestNeighbor().predict([[1.0]])

    def test_label_count_mismatch(self):
        with pytest.raises(ValueError):
            DtwNearestNeighbor().fit([[1.0]], ["a", "b"])

    def test_bad_metric_rejected_at_fit(self):
        with pytest.raises(ValueError):
            DtwNearestNeighbor(metric="manhattan").fit([[1.0]], ["a"])

    def test_clone_preserves_params(self):
        est = DtwNearestNeighbor(metric="dtw-star", n_jobs=2)
        assert clone(est).get_params() == est.get_params()


class TestDtwKMeans:
    def test_fit_exposes_labels_centers_inertia(self):
        X = [
            [-1.0, 0.0, 0.0],
            [-1.0, 0.0, 2.0],
            [0.0, 2.0, 3.0],
            [1.0, 2.0, 3.0],
        ]
        est = DtwKMeans(
            n_clusters=2, init=[[-1.0, 0.0, 1.0], [0.5, 2.0, 3.0]]
        ).fit(X)
        assert list(est.labels_) == [0, 0, 1, 1]
        assert est.inertia_ == 2.5
        assert len(est.cluster_centers_) == 2

    def test_predict_assigns_new_series(self):
        X = [[0.0, 0.0], [10.0, 10.0]]
        est = DtwKMeans(n_clusters=2, init=X).fit(X)
        assert list(est.predict([[0.5, 0.5], [9.0, 9.5]])) == [0, 1]

    def test_fit_predict_matches_labels(self):
        rng = np.random.default_rng(11)
        X = [random_series(rng, 6) for _ in range(6)]
        est = DtwKMeans(n_clusters=2)
        labels = est.fit_predict(X)
        np.testing.assert_array_equal(labels, est.labels_)

    def test_unfitted_predict_raises(self):
        with pytest.raises(ValueError):
            DtwKMeans().predict([[1.0]])

    def test_clone_preserves_params(self):
        est = DtwKMeans(n_clusters=3, metric="dtw-star", max_iter=7)
        assert clone(est).get_params() == est.get_params()
