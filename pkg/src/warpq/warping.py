"""Warping maps, alignment walks, and alignment paths.

A warping map from ``[ell]`` onto ``[n]`` is represented by the tuple of its
values ``(phi(1), ..., phi(ell))``, 1-based.  Monotonicity plus surjectivity
is equivalent to: the first value is 1 and consecutive values differ by 0 or
1; the codomain size is then the last value.  The associated 0/1 selector
matrix is never stored densely (``warping_matrix`` materializes one on
demand, for inspection and small-scale checks); multiplying a series by the
matrix is plain fancy indexing, and matrix products reduce to map
composition.

An alignment walk of order ``m x n`` is a tuple of 1-based index pairs from
``(1, 1)`` to ``(m, n)`` whose consecutive points differ by 0 or 1 in each
coordinate.  An alignment path is a walk without repeated consecutive
points.  Walks are exactly the pairs of warping maps with a common domain.
"""

import numpy as np

from . import words
from .exceptions import ResourceLimitError
from .series import check_series

#: Generation order for path steps: advance first coordinate, second, both.
_STEPS = ((1, 0), (0, 1), (1, 1))


def check_warping_function(phi):
    """Validate a warping map given as its 1-based value sequence.

    Returns the values as a tuple of ints.  Raises ``ValueError`` if the map
    is empty, does not start at 1, decreases, or skips a value (either defect
    breaks surjectivity onto ``[phi[-1]]`` or monotonicity).
    """
    values = tuple(int(v) for v in phi)
    if not values:
        raise ValueError("warping map must have a non-empty domain")
    if values[0] != 1:
        raise ValueError(f"warping map must start at 1, got {values[0]}")
    for a, b in zip(values, values[1:]):
        if b - a not in (0, 1):
            raise ValueError(
                f"warping map values must increase by 0 or 1, got step {a} -> {b}"
            )
    return values


def is_warping_function(phi):
    """True iff ``phi`` is a valid warping map value sequence."""
    try:
        check_warping_function(phi)
    except (ValueError, TypeError):
        return False
    return True


def check_walk(points):
    """Validate an alignment walk; returns it as a tuple of int pairs."""
    pts = tuple((int(i), int(j)) for i, j in points)
    if not pts:
        raise ValueError("alignment walk must contain at least one point")
    if pts[0] != (1, 1):
        raise ValueError(f"alignment walk must start at (1, 1), got {pts[0]}")
    for (i, j), (i2, j2) in zip(pts, pts[1:]):
        if i2 - i not in (0, 1) or j2 - j not in (0, 1):
            raise ValueError(
                f"alignment walk steps must lie in {{0,1}}x{{0,1}}, "
                f"got {(i, j)} -> {(i2, j2)}"
            )
    return pts


def check_path(points):
    """Validate an alignment path: a walk with no repeated consecutive point."""
    pts = check_walk(points)
    for p, q in zip(pts, pts[1:]):
        if p == q:
            raise ValueError(f"alignment path may not repeat point {p}")
    return pts


def walk_order(points):
    """The ``(m, n)`` order of a validated walk (its final point)."""
    return points[-1]


def walk_to_functions(points):
    """Split a walk into its pair of coordinate warping maps."""
    pts = check_walk(points)
    phi = tuple(i for i, _ in pts)
    psi = tuple(j for _, j in pts)
    return phi, psi


def functions_to_walk(phi, psi):
    """Zip two warping maps with a common domain into an alignment walk."""
    phi = check_warping_function(phi)
    psi = check_warping_function(psi)
    if len(phi) != len(psi):
        raise ValueError(
            f"warping maps must share a domain: lengths {len(phi)} != {len(psi)}"
        )
    return tuple(zip(phi, psi))


def condense_walk(points):
    """Drop repeated consecutive points, turning any walk into a path."""
    return check_path(words.condense(check_walk(points)))


def fiber_sizes(phi):
    """How many domain positions map to each codomain value, in order.

    The result is the multiplicity vector of the expansion realized by
    applying the map to a series.
    """
    phi = check_warping_function(phi)
    runs = words.run_length_encode(phi)
    return tuple(count for _, count in runs)


def function_from_multiplicities(multiplicities):
    """The warping map whose fibers have the given positive sizes."""
    mult = tuple(int(m) for m in multiplicities)
    if not mult or any(m < 1 for m in mult):
        raise ValueError("fiber sizes must be positive integers")
    out = []
    for value, count in enumerate(mult, start=1):
        out.extend([value] * count)
    return tuple(out)


def apply_warping(phi, x):
    """Expand a series by a warping map: position ``l`` receives ``x[phi(l)]``.

    Equivalent to multiplying ``x`` by the map's selector matrix.  The map's
    codomain must equal ``len(x)``.
    """
    phi = check_warping_function(phi)
    x = check_series(x)
    if phi[-1] != len(x):
        raise ValueError(
            f"warping map onto [{phi[-1]}] cannot be applied to a series "
            f"of length {len(x)}"
        )
    return x[np.asarray(phi) - 1]


def warping_matrix(phi):
    """Dense 0/1 selector matrix of a warping map (row ``l`` picks ``phi(l)``).

    Intended for inspection and small-scale algebra checks; all package
    internals work on the map values directly.
    """
    phi = check_warping_function(phi)
    mat = np.zeros((len(phi), phi[-1]), dtype=np.int64)
    mat[np.arange(len(phi)), np.asarray(phi) - 1] = 1
    return mat


def compose(outer, inner):
    """The map ``l -> outer(inner(l))``.

    ``inner`` must map onto the domain of ``outer`` (``inner[-1] ==
    len(outer)``).  The result is again a warping map; in matrix form it is
    ``warping_matrix(inner) @ warping_matrix(outer)``.
    """
    outer = check_warping_function(outer)
    inner = check_warping_function(inner)
    if inner[-1] != len(outer):
        raise ValueError(
            f"cannot compose: inner map onto [{inner[-1]}] does not match "
            f"outer domain of size {len(outer)}"
        )
    return tuple(outer[v - 1] for v in inner)


def identity_function(n):
    """The identity warping map on ``[n]``."""
    if n < 1:
        raise ValueError("domain size must be positive")
    return tuple(range(1, n + 1))


def _fiber_bounds(phi):
    # start position (1-based) and length of each value's run, value order
    runs = words.run_length_encode(phi)
    bounds = []
    start = 1
    for _, count in runs:
        bounds.append((start, count))
        start += count
    return bounds


def equalize(phi, phi_prime):
    """Equalize two warping maps with a common codomain.

    Returns maps ``(theta, theta_prime)`` over a shared domain of size
    ``ell >= max`` of the input domains such that composing gives the same
    map: ``compose(phi, theta) == compose(phi_prime, theta_prime)``.

    Construction: for each codomain value, pair off the two fibers position
    by position, padding the shorter fiber by repeating its last position;
    the collected index pairs, in lexicographic order, are the graphs of the
    two output maps.
    """
    phi = check_warping_function(phi)
    phi_prime = check_warping_function(phi_prime)
    if phi[-1] != phi_prime[-1]:
        raise ValueError(
            f"cannot equalize maps with different codomains: "
            f"[{phi[-1]}] vs [{phi_prime[-1]}]"
        )
    pairs = []
    for (a, k), (b, l) in zip(_fiber_bounds(phi), _fiber_bounds(phi_prime)):
        for r in range(max(k, l)):
            pairs.append((a + min(r, k - 1), b + min(r, l - 1)))
    pairs.sort()
    theta = tuple(u for u, _ in pairs)
    theta_prime = tuple(v for _, v in pairs)
    return theta, theta_prime


def enumerate_paths(m, n, cap=25):
    """All alignment paths of order ``m x n``, depth-first, deterministic.

    Steps are explored in the fixed order (1,0), (0,1), (1,1), so the output
    ordering is reproducible.  Intended as a small-scale exhaustive oracle;
    raises :class:`ResourceLimitError` when ``m * n`` exceeds ``cap``
    (path counts grow exponentially).
    """
    if m < 1 or n < 1:
        raise ValueError("path order must be positive in both coordinates")
    if m * n > cap:
        raise ResourceLimitError(
            f"refusing to enumerate paths of order {m}x{n}: "
            f"{m * n} > cap {cap}"
        )
    out = []
    prefix = [(1, 1)]

    def grow():
        i, j = prefix[-1]
        if (i, j) == (m, n):
            out.append(tuple(prefix))
            return
        for di, dj in _STEPS:
            i2, j2 = i + di, j + dj
            if i2 <= m and j2 <= n:
                prefix.append((i2, j2))
                grow()
                prefix.pop()

    grow()
    return out
