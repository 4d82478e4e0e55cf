"""Dynamic time warping distance by dynamic programming.

The distance between series ``x`` and ``y`` is the minimum over all
alignment paths of order ``len(x) x len(y)`` of the square root of the
accumulated squared differences along the path.  Relaxing paths to walks
(allowing repeated points) never lowers the minimum, since dropping the
repeats from a walk only removes non-negative terms.

All accumulation happens in squared-cost space; the square root is taken
once at the end.  There is no normalization by path length.  Everything is
double precision; identical inputs subtract to exact zeros, so
``dtw(x, x).distance == 0.0`` holds exactly.

When numba is importable the two inner kernels are jit-compiled with strict
IEEE semantics (no fastmath), which changes nothing numerically: the
compiled kernels perform the identical operation sequence and are
cross-checked for exact equality in the test suite.  Set ``WARPQ_NO_NUMBA``
in the environment to force the pure-Python kernels.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from .exceptions import ResourceLimitError
from .series import check_series
from .warping import check_walk, enumerate_paths

#: Size cap for the exhaustive path enumeration in :func:`dtw_bruteforce`.
BRUTEFORCE_CAP = 25


@dataclass(frozen=True)
class DtwResult:
    """Outcome of a distance computation.

    ``distance`` is the square root of ``squared_cost``.  When ``path`` is
    present it is an optimal alignment path (1-based index pairs) whose
    :func:`cost_along` equals ``squared_cost`` exactly, summation order
    included.
    """

    distance: float
    squared_cost: float
    path: tuple | None = None


def cost_along(points, x, y):
    """Accumulated squared difference along an alignment, in point order.

    ``points`` may be a path or a walk; its final point must be
    ``(len(x), len(y))``.
    """
    x = check_series(x, "x")
    y = check_series(y, "y")
    pts = check_walk(points)
    if pts[-1] != (len(x), len(y)):
        raise ValueError(
            f"alignment of order {pts[-1]} does not match series "
            f"lengths ({len(x)}, {len(y)})"
        )
    total = 0.0
    for i, j in pts:
        d = x[i - 1] - y[j - 1]
        total += d * d
    return float(total)


def _squared_cost(xv, yv):
    # rolling single-row recurrence over python floats; O(min extra memory)
    n = len(yv)
    y0 = yv[0]
    x0 = xv[0]
    row = [0.0] * n
    row[0] = (x0 - y0) * (x0 - y0)
    for j in range(1, n):
        d = x0 - yv[j]
        row[j] = row[j - 1] + d * d
    for i in range(1, len(xv)):
        xi = xv[i]
        diag = row[0]
        d = xi - y0
        row[0] = row[0] + d * d
        for j in range(1, n):
            up = row[j]
            best = diag
            if up < best:
                best = up
            left = row[j - 1]
            if left < best:
                best = left
            d = xi - yv[j]
            row[j] = best + d * d
            diag = up
    return row[n - 1]


def _cost_matrix(xv, yv):
    # full accumulated-cost matrix, needed for path recovery
    m, n = len(xv), len(yv)
    mat = [[0.0] * n for _ in range(m)]
    first = mat[0]
    x0 = xv[0]
    first[0] = (x0 - yv[0]) * (x0 - yv[0])
    for j in range(1, n):
        d = x0 - yv[j]
        first[j] = first[j - 1] + d * d
    for i in range(1, m):
        cur = mat[i]
        prev = mat[i - 1]
        xi = xv[i]
        d = xi - yv[0]
        cur[0] = prev[0] + d * d
        for j in range(1, n):
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            d = xi - yv[j]
            cur[j] = best + d * d
    return mat


def _squared_cost_arrays(x, y):
    # array twin of _squared_cost: same operation sequence, jit-friendly
    m = x.shape[0]
    n = y.shape[0]
    row = np.empty(n, dtype=np.float64)
    d = x[0] - y[0]
    row[0] = d * d
    for j in range(1, n):
        d = x[0] - y[j]
        row[j] = row[j - 1] + d * d
    for i in range(1, m):
        diag = row[0]
        d = x[i] - y[0]
        row[0] = row[0] + d * d
        for j in range(1, n):
            up = row[j]
            best = diag
            if up < best:
                best = up
            if row[j - 1] < best:
                best = row[j - 1]
            d = x[i] - y[j]
            row[j] = best + d * d
            diag = up
    return row[n - 1]


def _cost_matrix_arrays(x, y):
    # array twin of _cost_matrix
    m = x.shape[0]
    n = y.shape[0]
    mat = np.empty((m, n), dtype=np.float64)
    d = x[0] - y[0]
    mat[0, 0] = d * d
    for j in range(1, n):
        d = x[0] - y[j]
        mat[0, j] = mat[0, j - 1] + d * d
    for i in range(1, m):
        d = x[i] - y[0]
        mat[i, 0] = mat[i - 1, 0] + d * d
        for j in range(1, n):
            best = mat[i - 1, j - 1]
            if mat[i - 1, j] < best:
                best = mat[i - 1, j]
            if mat[i, j - 1] < best:
                best = mat[i, j - 1]
            d = x[i] - y[j]
            mat[i, j] = best + d * d
    return mat


USING_NUMBA = False
if not os.environ.get("WARPQ_NO_NUMBA"):
    try:
        from numba import njit
    except ImportError:
        pass
    else:
        _squared_cost_arrays = njit(cache=True, nogil=True, fastmath=False)(
            _squared_cost_arrays
        )
        _cost_matrix_arrays = njit(cache=True, nogil=True, fastmath=False)(
            _cost_matrix_arrays
        )
        USING_NUMBA = True


def _backtrack(mat):
    # 0-based backtracking; ties prefer diagonal, then vertical, then
    # horizontal, which pins down one optimal path deterministically
    i = len(mat) - 1
    j = len(mat[0]) - 1
    rev = [(i + 1, j + 1)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            best = mat[i - 1][j - 1]
            step = 0
            if mat[i - 1][j] < best:
                best = mat[i - 1][j]
                step = 1
            if mat[i][j - 1] < best:
                step = 2
            if step == 0:
                i -= 1
                j -= 1
            elif step == 1:
                i -= 1
            else:
                j -= 1
        rev.append((i + 1, j + 1))
    rev.reverse()
    return tuple(rev)


def dtw(x, y, return_path=False):
    """Dynamic time warping distance between two non-empty series.

    Runs the standard quadratic-time recurrence on squared differences.
    With ``return_path=True`` the full cost matrix is kept and one optimal
    path is recovered by backtracking (deterministic tie-break: diagonal,
    then vertical, then horizontal); otherwise a single rolling row is used.

    Returns a :class:`DtwResult`.
    """
    x = check_series(x, "x")
    y = check_series(y, "y")
    if return_path:
        if USING_NUMBA:
            mat = _cost_matrix_arrays(x, y)
        else:
            mat = _cost_matrix(x.tolist(), y.tolist())
        sq = float(mat[-1][-1])
        path = _backtrack(mat)
    else:
        if USING_NUMBA:
            sq = float(_squared_cost_arrays(x, y))
        else:
            sq = _squared_cost(x.tolist(), y.tolist())
        path = None
    return DtwResult(distance=math.sqrt(sq), squared_cost=sq, path=path)


def dtw_distance(x, y):
    """Convenience wrapper returning just the distance."""
    return dtw(x, y).distance


def dtw_bruteforce(x, y, cap=BRUTEFORCE_CAP):
    """Exact minimum over explicitly enumerated alignment paths.

    Independent cross-check for :func:`dtw`; only feasible for tiny inputs
    (raises :class:`ResourceLimitError` when ``len(x) * len(y) > cap``).
    Returns the first minimizing path in enumeration order.
    """
    x = check_series(x, "x")
    y = check_series(y, "y")
    if len(x) * len(y) > cap:
        raise ResourceLimitError(
            f"brute-force search over {len(x)}x{len(y)} alignments "
            f"exceeds cap {cap}"
        )
    xv = x.tolist()
    yv = y.tolist()
    best = None
    best_path = None
    for path in enumerate_paths(len(x), len(y), cap=cap):
        sq = 0.0
        for i, j in path:
            d = xv[i - 1] - yv[j - 1]
            sq += d * d
        if best is None or sq < best:
            best = sq
            best_path = path
    return DtwResult(distance=math.sqrt(best), squared_cost=best, path=best_path)
