"""Run-length algebra for finite sequences over an arbitrary alphabet.

A "word" here is any finite Python sequence; elements are compared with
``==``.  The same handful of operations serves real-valued time series and
integer index pairs alike.  Results are plain tuples; numpy-aware variants
for float series live in :mod:`warpq.series`.

The empty word is legal at this layer and behaves as expected: it has no
runs, condenses to itself, and is an expansion only of itself.
"""

import operator
from itertools import groupby


def _count(value):
    try:
        return operator.index(value)
    except TypeError:
        raise ValueError(f"counts must be integers, got {value!r}") from None


def run_length_encode(word):
    """Decompose a word into its maximal runs of equal elements.

    Returns a list of ``(value, count)`` pairs such that repeating each
    value ``count`` times and concatenating restores the word, and adjacent
    pairs hold distinct values.  This decomposition is unique.
    """
    return [(value, sum(1 for _ in grp)) for value, grp in groupby(word)]


def run_length_decode(runs):
    """Inverse of :func:`run_length_encode`.  Returns a tuple."""
    out = []
    for value, count in runs:
        count = _count(count)
        if count < 1:
            raise ValueError("run counts must be positive integers")
        out.extend([value] * count)
    return tuple(out)


def condense(word):
    """Collapse each run of consecutive equal elements to a single element.

    The result is irreducible (no two consecutive elements compare equal)
    and is the unique shortest compression of ``word``.  Idempotent;
    ``condense(()) == ()``.
    """
    return tuple(value for value, _ in groupby(word))


def is_irreducible(word):
    """True iff no two consecutive elements compare equal."""
    return all(a != b for a, b in zip(word, word[1:]))


def expand(word, multiplicities):
    """Replicate ``word[i]`` exactly ``multiplicities[i]`` times, in order.

    Every multiplicity must be a positive integer and the two sequences must
    have equal length.  The output is always an expansion of ``word`` in the
    sense of :func:`is_expansion`.
    """
    if len(multiplicities) != len(word):
        raise ValueError(
            f"need one multiplicity per element: got {len(multiplicities)} "
            f"for a word of length {len(word)}"
        )
    out = []
    for value, mult in zip(word, multiplicities):
        mult = _count(mult)
        if mult < 1:
            raise ValueError("multiplicities must be positive integers")
        out.extend([value] * mult)
    return tuple(out)


def is_expansion(x, y):
    """True iff ``x`` can be produced by replicating elements of ``y``.

    Decided on the run structure: both words must have the same number of
    runs, with equal run values in order, and every run of ``x`` at least
    as long as the matching run of ``y``.  Every word is an expansion of
    itself.
    """
    runs_x = run_length_encode(x)
    runs_y = run_length_encode(y)
    if len(runs_x) != len(runs_y):
        return False
    return all(
        vx == vy and cx >= cy
        for (vx, cx), (vy, cy) in zip(runs_x, runs_y)
    )


def expansion_multiplicities(x, y):
    """Per-element replication counts ``a`` with ``expand(y, a) == x``.

    Returns ``None`` when ``x`` is not an expansion of ``y``.  Within each
    run the surplus count is assigned to the run's last element, which makes
    the result deterministic (other valid assignments exist).
    """
    runs_x = run_length_encode(x)
    runs_y = run_length_encode(y)
    if len(runs_x) != len(runs_y):
        return None
    mult = []
    for (vx, cx), (vy, cy) in zip(runs_x, runs_y):
        if vx != vy or cx < cy:
            return None
        mult.extend([1] * (cy - 1))
        mult.append(cx - cy + 1)
    return tuple(mult)


def common_compression(x, y):
    """The minimal common compression of ``x`` and ``y``, or ``None``.

    Two words share a compression exactly when their condensed forms are
    equal, in which case the condensed form itself is the canonical
    (shortest) common compression.
    """
    cx = condense(x)
    if cx == condense(y):
        return cx
    return None
