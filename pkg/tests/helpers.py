"""Shared generators for randomized tests; everything is seed-deterministic."""

import numpy as np


def random_series(rng, max_len=8, values=None):
    """A random series, either from a small integer palette or continuous."""
    n = int(rng.integers(1, max_len + 1))
    if values is None:
        return rng.standard_normal(n)
    return rng.choice(np.asarray(values, dtype=np.float64), size=n)


def random_irreducible(rng, max_len=8):
    """A random series with no two consecutive equal elements."""
    x = rng.standard_normal(int(rng.integers(1, max_len + 1)))
    for i in range(1, len(x)):
        while x[i] == x[i - 1]:
            x[i] = rng.standard_normal()
    return x


def random_expansion(rng, x, max_mult=4):
    """A random expansion of ``x`` with per-element multiplicities."""
    mult = rng.integers(1, max_mult + 1, size=len(x))
    return np.repeat(np.asarray(x, dtype=np.float64), mult)


def random_warping_function(rng, domain, codomain):
    """Random monotone surjection of ``[domain]`` onto ``[codomain]``."""
    assert 1 <= codomain <= domain
    values = np.ones(domain, dtype=np.int64)
    if codomain > 1:
        steps = rng.choice(domain - 1, size=codomain - 1, replace=False)
        inc = np.zeros(domain, dtype=np.int64)
        inc[steps + 1] = 1
        values = 1 + np.cumsum(inc)
    return tuple(int(v) for v in values)


def random_walk(rng, m, n, max_len_extra=6):
    """Random alignment walk of order ``m x n`` (may contain zero-steps)."""
    length = int(max(m, n) + rng.integers(0, max_len_extra + 1))
    phi = random_warping_function(rng, length, m)
    psi = random_warping_function(rng, length, n)
    return tuple(zip(phi, psi))


def all_series(max_len, values):
    """Every series of length 1..max_len over the given palette."""
    values = [float(v) for v in values]
    out = []
    pool = [()]
    for _ in range(max_len):
        pool = [seq + (v,) for seq in pool for v in values]
        out.extend(np.array(seq) for seq in pool)
    return out


def make_split(name, train_rows, test_rows):
    """Build a DatasetSplit from (label, values) pairs."""
    from warpq.datasets import DatasetSplit, LabeledSeries

    train = [LabeledSeries(lab, np.asarray(v, dtype=np.float64)) for lab, v in train_rows]
    test = [LabeledSeries(lab, np.asarray(v, dtype=np.float64)) for lab, v in test_rows]
    return DatasetSplit(
        name=name, train=train, test=test, series_length=len(train[0].values)
    )


def reducibility_split(seed, length, deleted_counts_train, deleted_counts_test):
    """A split whose per-series deleted-element counts are chosen exactly.

    Each series starts from a random irreducible base of ``length - d``
    elements and is expanded back to ``length`` by replicating its first
    element ``d`` extra times, so condensation deletes exactly ``d``
    elements.  Labels alternate between two classes.
    """
    from warpq.datasets import synth_expansion_corpus

    rng = np.random.default_rng(seed)

    def build(counts, tag):
        rows = []
        for i, d in enumerate(counts):
            base = synth_expansion_corpus(
                int(rng.integers(0, 2**31)), 1, length - d, 1
            )[0].base
            mult = np.ones(length - d, dtype=np.int64)
            mult[0] += d
            rows.append((f"{tag}{i % 2}", np.repeat(base, mult)))
        return rows

    return make_split(
        f"synth{seed}", build(deleted_counts_train, "c"), build(deleted_counts_test, "c")
    )


def delannoy(m, n):
    """Count of alignment paths of order ``m x n`` by the step recursion."""
    table = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if i == 1 or j == 1:
                table[i, j] = 1
            else:
                table[i, j] = (
                    table[i - 1, j] + table[i, j - 1] + table[i - 1, j - 1]
                )
    return table[m, n]
