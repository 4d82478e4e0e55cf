"""Validated real-valued time series and numpy-aware condensation helpers.

A time series is a 1-D float64 array with at least one element and no
NaN/infinite values.  Element comparisons use exact IEEE float equality:
condensation is a structural operation and any tolerance would break its
transitivity.  Callers who want approximate matching must quantize first,
explicitly, via :func:`quantize`.
"""

import numpy as np


def check_series(x, name="series"):
    """Coerce ``x`` to a validated 1-D float64 array.

    Raises ``ValueError`` for empty input, extra dimensions, or non-finite
    values.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one element")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite values")
    return arr


def check_series_list(X, name="X"):
    """Validate a collection of series; returns a list of float64 arrays.

    Accepts a 2-D array (rows are series of equal length) or any iterable of
    1-D array-likes, so ragged collections such as condensed series are fine.
    """
    if isinstance(X, np.ndarray) and X.ndim == 2:
        rows = list(X)
    elif isinstance(X, np.ndarray) and X.ndim == 1:
        raise ValueError(
            f"{name} must be a collection of series; wrap a single series in a list"
        )
    else:
        rows = list(X)
    if not rows:
        raise ValueError(f"{name} must contain at least one series")
    return [check_series(row, name=f"{name}[{i}]") for i, row in enumerate(rows)]


def run_lengths(x):
    """Values and lengths of the maximal runs of equal consecutive elements.

    Returns ``(values, counts)`` as arrays; ``np.repeat(values, counts)``
    reconstructs the series.
    """
    x = check_series(x)
    keep = np.empty(len(x), dtype=bool)
    keep[0] = True
    keep[1:] = x[1:] != x[:-1]
    starts = np.flatnonzero(keep)
    counts = np.diff(np.append(starts, len(x)))
    return x[starts], counts


def condense(x):
    """Collapse each run of consecutive equal elements to a single element.

    Exact float equality decides the runs.  The result is irreducible and is
    the unique shortest series with the same run values; condensing twice
    changes nothing.
    """
    x = check_series(x)
    keep = np.empty(len(x), dtype=bool)
    keep[0] = True
    keep[1:] = x[1:] != x[:-1]
    return x[keep]


def is_irreducible(x):
    """True iff no two consecutive elements are equal."""
    x = check_series(x)
    return bool(np.all(x[1:] != x[:-1]))


def expand(x, multiplicities):
    """Replicate ``x[i]`` exactly ``multiplicities[i]`` times, in order."""
    x = check_series(x)
    mult = np.asarray(multiplicities)
    if mult.shape != x.shape:
        raise ValueError(
            f"need one multiplicity per element: got {mult.shape} for {x.shape}"
        )
    if not np.issubdtype(mult.dtype, np.integer) or np.any(mult < 1):
        raise ValueError("multiplicities must be positive integers")
    return np.repeat(x, mult)


def is_expansion(x, y):
    """True iff ``x`` can be produced by replicating elements of ``y``."""
    vx, cx = run_lengths(x)
    vy, cy = run_lengths(y)
    if len(vx) != len(vy):
        return False
    return bool(np.all(vx == vy) and np.all(cx >= cy))


def quantize(x, decimals):
    """Round to ``decimals`` decimal places.

    This is the explicit pre-processing step for callers who want runs of
    approximately equal values to condense together; it is never applied
    implicitly anywhere in the package.
    """
    if decimals < 0:
        raise ValueError("decimals must be non-negative")
    return np.round(check_series(x), decimals)
