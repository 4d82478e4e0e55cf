"""Scikit-learn style estimators wrapping the functional core.

These classes follow the fit/transform/predict conventions (and inherit
``get_params``/``set_params``), so they drop into pipelines, grid searches,
and cross-validation.  ``X`` may be a 2-D numeric array (one series per row)
or any iterable of 1-D array-likes, which also permits ragged collections
such as condensed series.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, ClusterMixin, TransformerMixin

from .mining import METRICS, kmeans
from .dtw import dtw
from .series import check_series, check_series_list, condense, quantize


class TimeSeriesCondenser(TransformerMixin, BaseEstimator):
    """Collapse consecutive equal elements of every series.

    Stateless: ``fit`` only validates.  ``transform`` returns a list of 1-D
    arrays because condensed lengths generally differ.

    Parameters
    ----------
    quantize_decimals : int or None
        When set, round each series to this many decimals before condensing,
        so near-equal neighbors collapse too.  Off by default; rounding
        changes which series count as equal.
    """

    def __init__(self, quantize_decimals=None):
        self.quantize_decimals = quantize_decimals

    def fit(self, X, y=None):
        check_series_list(X)
        return self

    def transform(self, X):
        out = []
        for x in check_series_list(X):
            if self.quantize_decimals is not None:
                x = quantize(x, self.quantize_decimals)
            out.append(condense(x))
        return out


class DtwNearestNeighbor(ClassifierMixin, BaseEstimator):
    """1-nearest-neighbor classifier under DTW or its invariant variant.

    Training series become the prototypes.  Prediction compares squared
    costs and resolves ties toward the lowest prototype index, so results
    are deterministic and independent of evaluation order.

    Parameters
    ----------
    metric : {"dtw", "dtw-star"}
        ``"dtw-star"`` condenses prototypes once at fit time and each query
        at predict time, making predictions invariant under expansions of
        either side.
    n_jobs : int
        Number of worker threads for prediction.  Results are identical for
        any value.
    """

    def __init__(self, metric="dtw", n_jobs=1):
        self.metric = metric
        self.n_jobs = n_jobs

    def fit(self, X, y):
        if self.metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}, got {self.metric!r}")
        X = check_series_list(X)
        y = list(y)
        if len(y) != len(X):
            raise ValueError(f"got {len(X)} series but {len(y)} labels")
        if self.metric == "dtw-star":
            X = [condense(x) for x in X]
        self.prototypes_ = X
        self.labels_ = y
        self.classes_ = np.unique(np.asarray(y, dtype=object))
        return self

    def _predict_one(self, z):
        z = check_series(z)
        if self.metric == "dtw-star":
            z = condense(z)
        best = None
        best_i = 0
        for i, p in enumerate(self.prototypes_):
            sq = dtw(p, z).squared_cost
            if best is None or sq < best:
                best = sq
                best_i = i
        return self.labels_[best_i]

    def predict(self, X):
        if not hasattr(self, "prototypes_"):
            raise ValueError("estimator is not fitted; call fit first")
        X = check_series_list(X)
        if self.n_jobs and self.n_jobs > 1:
            with ThreadPoolExecutor(max_workers=self.n_jobs) as pool:
                labels = list(pool.map(self._predict_one, X))
        else:
            labels = [self._predict_one(z) for z in X]
        return np.asarray(labels, dtype=object)


class DtwKMeans(ClusterMixin, BaseEstimator):
    """K-means over series with barycenter-averaging centroid updates.

    Thin estimator facade over :func:`warpq.mining.kmeans`.  After ``fit``,
    ``labels_`` holds the cluster index per training series,
    ``cluster_centers_`` the centroids, and ``inertia_`` the within-cluster
    sum of squared distances under the selected metric.

    Parameters
    ----------
    n_clusters : int
    metric : {"dtw", "dtw-star"}
    init : sequence of series or None
        Initial centroids; defaults to the first ``n_clusters`` training
        series.
    max_iter : int
    """

    def __init__(self, n_clusters=2, metric="dtw", init=None, max_iter=50):
        self.n_clusters = n_clusters
        self.metric = metric
        self.init = init
        self.max_iter = max_iter

    def fit(self, X, y=None):
        X = check_series_list(X)
        state = kmeans(
            X,
            self.n_clusters,
            init_centroids=self.init,
            metric=self.metric,
            max_iter=self.max_iter,
        )
        labels = np.empty(len(X), dtype=np.int64)
        for c, members in enumerate(state.partition):
            for i in members:
                labels[i] = c
        self.labels_ = labels
        self.cluster_centers_ = state.centroids
        self.inertia_ = state.cost
        self.n_iter_ = state.n_iter
        self.converged_ = state.converged
        return self

    def predict(self, X):
        if not hasattr(self, "cluster_centers_"):
            raise ValueError("estimator is not fitted; call fit first")
        from .mining import nearest_prototype

        return np.asarray(
            [
                nearest_prototype(z, self.cluster_centers_, metric=self.metric)
                for z in check_series_list(X)
            ],
            dtype=np.int64,
        )
