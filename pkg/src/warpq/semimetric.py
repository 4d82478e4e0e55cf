"""Warping-invariant distance on series, via condensed representatives.

Two series are warping-identical exactly when their condensed forms are
equal elementwise, which in turn is equivalent to their dynamic time warping
distance being zero.  The equality test is therefore decided structurally,
in linear time, with no floating-point tolerance anywhere.

``dtw_star`` is the distance between equivalence classes (condensed
representatives); ``dtw_invariant`` lifts it back to raw series by
condensing both arguments first.  Unlike plain DTW, the lifted distance is
unchanged when either argument is replaced by any series sharing a
compression with it, and it is zero only for warping-identical inputs.  The
triangle inequality still fails, as it does for DTW itself.
"""

import numpy as np

from .dtw import dtw
from .series import check_series, condense


class WarpingClass:
    """Canonical representative of all series sharing a condensed form.

    Wraps the condensed (irreducible) series.  Instances are hashable and
    compare equal exactly when their condensed series are elementwise equal,
    so they can serve as dictionary keys.
    """

    __slots__ = ("_condensed", "_key")

    def __init__(self, x):
        arr = condense(x)
        arr.flags.writeable = False
        self._condensed = arr
        self._key = arr.tobytes()

    @property
    def condensed(self):
        """The irreducible representative series (read-only array)."""
        return self._condensed

    def __len__(self):
        return len(self._condensed)

    def __eq__(self, other):
        if isinstance(other, WarpingClass):
            return self._key == other._key
        return NotImplemented

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"WarpingClass({self._condensed.tolist()!r})"


def warping_class(x):
    """The equivalence class of ``x``, represented by its condensed form."""
    return WarpingClass(x)


def warping_identical(x, y):
    """True iff ``x`` and ``y`` have equal condensed forms.

    Equivalent to ``dtw(x, y).distance == 0`` but decided exactly, without
    computing any distance.
    """
    cx = condense(x)
    cy = condense(y)
    return len(cx) == len(cy) and bool(np.all(cx == cy))


def dtw_star(a, b):
    """Distance between two equivalence classes.

    Accepts :class:`WarpingClass` instances or raw series (which are
    condensed on the fly).  Zero exactly when the classes are equal.
    """
    ca = a.condensed if isinstance(a, WarpingClass) else condense(a)
    cb = b.condensed if isinstance(b, WarpingClass) else condense(b)
    return dtw(ca, cb).distance


def dtw_invariant(x, y, cache=None):
    """Warping-invariant distance between raw series.

    Condenses both arguments, then applies plain DTW.  The result does not
    change when ``x`` or ``y`` is replaced by any expansion or compression
    of itself.  Pass a :class:`CondensedCache` to avoid re-condensing series
    that are compared many times.
    """
    if cache is not None:
        cx = cache.condensed(x)
        cy = cache.condensed(y)
    else:
        cx = condense(x)
        cy = condense(y)
    return dtw(cx, cy).distance


class CondensedCache:
    """Precomputed condensed forms, keyed by array object identity.

    Build the cache single-threaded (``add`` every series once, then
    ``freeze()``); afterwards concurrent lookups are safe because the
    underlying dict is never mutated again.  ``condensed`` falls back to
    condensing unknown series on the fly without touching the cache once
    frozen.
    """

    def __init__(self, series=()):
        self._by_id = {}
        self._frozen = False
        for x in series:
            self.add(x)

    def add(self, x):
        """Condense ``x`` and remember the result; returns the condensed form."""
        if self._frozen:
            raise RuntimeError("cache is frozen; build it before sharing")
        key = id(x)
        if key not in self._by_id:
            # keep a reference to the keyed object so its id stays unique
            self._by_id[key] = (x, condense(check_series(x)))
        return self._by_id[key][1]

    def freeze(self):
        """Mark the build phase finished; the cache becomes read-only."""
        self._frozen = True
        return self

    def condensed(self, x):
        """The condensed form of ``x``, from the cache when known."""
        hit = self._by_id.get(id(x))
        if hit is not None:
            return hit[1]
        if self._frozen:
            return condense(x)
        return self.add(x)

    def __len__(self):
        return len(self._by_id)
