"""Dynamic time warping and its warping-invariant quotient distance.

Plain DTW treats a series and its consecutive-duplicate expansions as
distance zero apart, yet those expansions sit at different distances from
everything else.  This package provides the structural fix: condense series
(collapse consecutive equal elements) and measure DTW between the condensed
forms.  The resulting distance is zero only for structurally identical
series and is unchanged under any expansion or compression of its arguments.

Layers:

- :mod:`warpq.words`, :mod:`warpq.series`: run-length algebra and validated
  series operations (condense, expand, expansion tests).
- :mod:`warpq.warping`: warping maps, alignment walks and paths, their
  composition and equalization.
- :mod:`warpq.dtw`: the dynamic-programming distance, alignment recovery,
  and an exhaustive small-scale cross-check.
- :mod:`warpq.semimetric`: equivalence classes, ``dtw_star`` between
  classes, and the invariant series distance ``dtw_invariant``.
- :mod:`warpq.mining`: Frechet function, barycenter averaging, k-means,
  nearest-prototype assignment, cohesion/separation.
- :mod:`warpq.estimators`: scikit-learn style wrappers (condenser
  transformer, 1-NN classifier, k-means estimator).
- :mod:`warpq.datasets`, :mod:`warpq.bench`: repository-format loading and
  the benchmark/report pipeline, driven by the ``warpq`` CLI.
"""

from .dtw import DtwResult, cost_along, dtw, dtw_bruteforce, dtw_distance
from .estimators import DtwKMeans, DtwNearestNeighbor, TimeSeriesCondenser
from .exceptions import ParseError, ResourceLimitError
from .mining import (
    DbaResult,
    KMeansState,
    cohesion,
    dba_mean,
    frechet,
    kmeans,
    medoid_index,
    nearest_prototype,
    separation,
)
from .semimetric import (
    CondensedCache,
    WarpingClass,
    dtw_invariant,
    dtw_star,
    warping_class,
    warping_identical,
)
from .series import (
    check_series,
    check_series_list,
    condense,
    expand,
    is_expansion,
    is_irreducible,
    quantize,
)

__version__ = "0.1.0"

__all__ = [
    "CondensedCache",
    "DbaResult",
    "DtwKMeans",
    "DtwNearestNeighbor",
    "DtwResult",
    "KMeansState",
    "ParseError",
    "ResourceLimitError",
    "TimeSeriesCondenser",
    "WarpingClass",
    "check_series",
    "check_series_list",
    "cohesion",
    "condense",
    "cost_along",
    "dba_mean",
    "dtw",
    "dtw_bruteforce",
    "dtw_distance",
    "dtw_invariant",
    "dtw_star",
    "expand",
    "frechet",
    "is_expansion",
    "is_irreducible",
    "kmeans",
    "medoid_index",
    "nearest_prototype",
    "quantize",
    "separation",
    "warping_class",
    "warping_identical",
]
