"""Averaging, clustering, and nearest-prototype assignment under DTW.

The sample mean used throughout is the minimizer of the Frechet function
(sum of squared DTW distances to the sample).  Exact means are intractable,
so :func:`dba_mean` runs the standard barycenter-averaging scheme: align the
current candidate to every sample series along an optimal path, then replace
each candidate element by the arithmetic mean of the sample elements aligned
to it.  Each such update cannot increase the Frechet value, because the new
candidate minimizes the alignment-wise cost that upper-bounds it.

Two distances are available wherever a ``metric`` is selectable:

- ``"dtw"``: plain dynamic time warping;
- ``"dtw-star"``: the warping-invariant variant that condenses series
  before comparing (see :mod:`warpq.semimetric`).

Under ``"dtw-star"`` all inputs are condensed once on entry, so replacing a
prototype or initial centroid by any expansion of itself cannot change any
downstream decision.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .dtw import dtw
from .series import check_series, check_series_list, condense

logger = logging.getLogger(__name__)

METRICS = ("dtw", "dtw-star")


def _check_metric(metric):
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}, got {metric!r}")
    return metric


def frechet(sample, z):
    """Sum of squared DTW distances from ``z`` to every series in ``sample``."""
    sample = check_series_list(sample, "sample")
    z = check_series(z, "z")
    return float(sum(dtw(x, z).squared_cost for x in sample))


def medoid_index(sample):
    """Index of the sample series with the smallest Frechet value.

    Ties resolve to the lowest index.
    """
    sample = check_series_list(sample, "sample")
    best = None
    best_i = 0
    for i, candidate in enumerate(sample):
        value = frechet(sample, candidate)
        if best is None or value < best:
            best = value
            best_i = i
    return best_i


@dataclass(frozen=True)
class DbaResult:
    """Outcome of barycenter averaging.

    ``frechet_history`` holds the Frechet value of the initial candidate
    followed by the value after each accepted update; it is non-increasing.
    ``converged`` is False when the iteration stopped only because
    ``max_iter`` was exhausted.
    """

    mean: np.ndarray
    frechet_history: tuple
    converged: bool
    n_iter: int


def dba_mean(sample, init=None, max_iter=50, tol=1e-9):
    """Approximate a fixed-length sample mean by barycenter averaging.

    The candidate keeps the length of ``init`` (default: the sample medoid)
    throughout.  Iteration stops when the candidate stops changing, when the
    Frechet decrease falls below ``tol``, or after ``max_iter`` updates.  A
    rounding-level increase never gets through: such an update is rejected
    and the previous candidate returned, so the reported history is
    non-increasing by construction.
    """
    sample = check_series_list(sample, "sample")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if init is None:
        z = sample[medoid_index(sample)].copy()
    else:
        z = check_series(init, "init").copy()

    history = [frechet(sample, z)]
    converged = False
    n_iter = 0
    for _ in range(max_iter):
        buckets = [[] for _ in range(len(z))]
        for x in sample:
            path = dtw(z, x, return_path=True).path
            for i, j in path:
                buckets[i - 1].append(x[j - 1])
        z_next = np.array([float(np.mean(b)) for b in buckets])
        if np.array_equal(z_next, z):
            converged = True
            break
        value = frechet(sample, z_next)
        if value > history[-1]:
            # float rounding can turn an exact plateau into a hair of
            # increase; keep the previous candidate and stop
            converged = True
            break
        n_iter += 1
        z = z_next
        history.append(value)
        if history[-2] - history[-1] < tol:
            converged = True
            break
    return DbaResult(
        mean=z, frechet_history=tuple(history), converged=converged, n_iter=n_iter
    )


def _squared_distances(z, prototypes):
    return [dtw(p, z).squared_cost for p in prototypes]


def nearest_prototype(z, prototypes, metric="dtw"):
    """Index of the prototype closest to ``z``; ties go to the lowest index.

    Comparisons use squared costs, which order identically to distances.
    """
    _check_metric(metric)
    prototypes = check_series_list(prototypes, "prototypes")
    z = check_series(z, "z")
    if metric == "dtw-star":
        prototypes = [condense(p) for p in prototypes]
        z = condense(z)
    best = None
    best_i = 0
    for i, sq in enumerate(_squared_distances(z, prototypes)):
        if best is None or sq < best:
            best = sq
            best_i = i
    return best_i


@dataclass(frozen=True)
class KMeansState:
    """Final state of a k-means run.

    ``partition`` maps each cluster to the sorted tuple of sample indices it
    holds; ``cost`` is the sum over clusters of squared distances from
    members to their centroid, under the selected metric.
    """

    partition: tuple
    centroids: list
    cost: float
    n_iter: int
    converged: bool


def _assign(sample, centroids):
    labels = []
    squared = []
    for x in sample:
        best = None
        best_i = 0
        for i, sq in enumerate(_squared_distances(x, centroids)):
            if best is None or sq < best:
                best = sq
                best_i = i
        labels.append(best_i)
        squared.append(best)
    return labels, squared


def _fix_empty_clusters(labels, squared, k):
    # reseed an empty cluster with the point farthest from its centroid,
    # taken from a cluster that can afford to lose it
    counts = [0] * k
    for lab in labels:
        counts[lab] += 1
    for empty in range(k):
        if counts[empty] > 0:
            continue
        donor = None
        worst = -1.0
        for idx, (lab, sq) in enumerate(zip(labels, squared)):
            if counts[lab] > 1 and sq > worst:
                worst = sq
                donor = idx
        if donor is None:
            raise ValueError("cannot populate empty cluster: too few points")
        logger.info("reseeding empty cluster %d with sample %d", empty, donor)
        counts[labels[donor]] -= 1
        labels[donor] = empty
        squared[donor] = 0.0
        counts[empty] += 1
    return labels, squared


def kmeans(sample, k, init_centroids=None, metric="dtw", max_iter=50):
    """Lloyd-style k-means over series, with barycenter-averaging updates.

    Alternates nearest-centroid assignment with a :func:`dba_mean` update per
    cluster (initialized at the cluster's current centroid, so centroid
    lengths are stable).  Stops when the partition repeats, when the relative
    cost decrease drops below 1e-9, or after ``max_iter`` rounds.  Empty
    clusters are reseeded with the sample point farthest from its centroid.

    With ``metric="dtw-star"``, sample and initial centroids are condensed
    up front and the whole run takes place on condensed series.
    """
    _check_metric(metric)
    sample = check_series_list(sample, "sample")
    if not 1 <= k <= len(sample):
        raise ValueError(f"k must be between 1 and the sample size, got {k}")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    if init_centroids is None:
        centroids = [x.copy() for x in sample[:k]]
    else:
        centroids = check_series_list(init_centroids, "init_centroids")
        if len(centroids) != k:
            raise ValueError(f"need {k} initial centroids, got {len(centroids)}")
    if metric == "dtw-star":
        sample = [condense(x) for x in sample]
        centroids = [condense(c) for c in centroids]

    prev_partition = None
    cost = None
    converged = False
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        labels, squared = _assign(sample, centroids)
        labels, squared = _fix_empty_clusters(labels, squared, k)
        partition = tuple(
            tuple(i for i, lab in enumerate(labels) if lab == c) for c in range(k)
        )
        if partition == prev_partition:
            converged = True
            break
        prev_partition = partition
        for c, members in enumerate(partition):
            cluster = [sample[i] for i in members]
            updated = dba_mean(cluster, init=centroids[c]).mean
            # in the condensed space an averaged centroid may pick up
            # consecutive duplicates; canonicalize so plain DTW against it
            # stays the invariant distance
            centroids[c] = condense(updated) if metric == "dtw-star" else updated
        new_cost = float(
            sum(
                dtw(sample[i], centroids[c]).squared_cost
                for c, members in enumerate(partition)
                for i in members
            )
        )
        if cost is not None and cost > 0 and (cost - new_cost) / cost < 1e-9:
            cost = new_cost
            converged = True
            break
        cost = new_cost
    return KMeansState(
        partition=prev_partition,
        centroids=centroids,
        cost=cost,
        n_iter=n_iter,
        converged=converged,
    )


def cohesion(clusters, centroids):
    """Sum over clusters of the Frechet value at the cluster's centroid.

    Unlike :func:`separation`, this quantity does not depend on which of
    several equally good means is chosen as a centroid.
    """
    if len(clusters) != len(centroids):
        raise ValueError("need exactly one centroid per cluster")
    return float(
        sum(frechet(cluster, mu) for cluster, mu in zip(clusters, centroids))
    )


def separation(mu1, mu2):
    """Squared DTW distance between two cluster centroids.

    Sensitive to the representative chosen for each centroid: replacing a
    centroid by an expansion of itself can only grow this value.
    """
    return dtw(mu1, mu2).squared_cost
