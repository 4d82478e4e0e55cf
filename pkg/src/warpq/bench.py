"""Condensation statistics, classifier comparison, and summary reports.

Per dataset this module measures (a) how prevalent reducible series are and
how much condensation deletes, and (b) nearest-neighbor accuracy under plain
DTW versus the warping-invariant variant.  Across datasets it aggregates the
usual comparison statistics: correlation between series length and
reducibility, size-weighted column averages, a win/tie/loss record with
winning percentage, the mean accuracy error percentage, and a Wilcoxon
signed-rank test on the accuracy differences.

Per-example predictions are pure functions, so the thread count changes
nothing in any output byte.
"""

import csv
import json
from dataclasses import dataclass

import numpy as np
from scipy import stats as scipy_stats

from .datasets import DatasetSplit
from .estimators import DtwNearestNeighbor
from .series import condense


@dataclass(frozen=True)
class CondensationStats:
    """How much a dataset shrinks under condensation.

    ``pct_reducible`` is the percentage of series strictly longer than their
    condensed form, over train and test combined.  The deleted-element mean
    and standard deviations are taken over the reducible series only and are
    0.0 when there are none.  Both the population and the sample standard
    deviation are kept; ``std_deleted`` mirrors whichever was selected.
    """

    dataset: str
    series_length: int
    n_series: int
    pct_reducible: float
    mean_deleted: float
    std_deleted: float
    std_deleted_population: float
    std_deleted_sample: float
    n_elements: int
    n_elements_condensed: int


@dataclass(frozen=True)
class NnResult:
    """Nearest-neighbor accuracies of one dataset, in percent.

    ``err`` is ``100 * (acc - acc_star) / acc``; positive when plain DTW
    classifies better.  ``None`` when ``acc`` is zero.
    """

    dataset: str
    acc: float
    acc_star: float
    err: float | None


def condensation_stats(split: DatasetSplit, stddev="population"):
    """Measure reducibility over a dataset's train and test series combined."""
    if stddev not in ("population", "sample"):
        raise ValueError(f"stddev must be 'population' or 'sample', got {stddev!r}")
    deleted = []
    n_total = 0
    n_elements = 0
    n_condensed = 0
    for rec in split.all_series():
        n_total += 1
        clen = len(condense(rec.values))
        n_elements += len(rec.values)
        n_condensed += clen
        if clen < len(rec.values):
            deleted.append(len(rec.values) - clen)
    if deleted:
        arr = np.asarray(deleted, dtype=np.float64)
        mean = float(arr.mean())
        pop = float(arr.std(ddof=0))
        samp = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    else:
        mean = pop = samp = 0.0
    return CondensationStats(
        dataset=split.name,
        series_length=split.series_length,
        n_series=n_total,
        pct_reducible=100.0 * len(deleted) / n_total,
        mean_deleted=mean,
        std_deleted=pop if stddev == "population" else samp,
        std_deleted_population=pop,
        std_deleted_sample=samp,
        n_elements=n_elements,
        n_elements_condensed=n_condensed,
    )


def nn_accuracy(split: DatasetSplit, metric="dtw", n_jobs=1):
    """Percent of test series classified correctly by 1-NN on the train set."""
    clf = DtwNearestNeighbor(metric=metric, n_jobs=n_jobs)
    clf.fit([r.values for r in split.train], [r.label for r in split.train])
    predicted = clf.predict([r.values for r in split.test])
    hits = sum(1 for p, r in zip(predicted, split.test) if p == r.label)
    return 100.0 * hits / len(split.test)


def evaluate_split(split: DatasetSplit, n_jobs=1):
    """Accuracies under both metrics, plus the error percentage."""
    acc = nn_accuracy(split, metric="dtw", n_jobs=n_jobs)
    acc_star = nn_accuracy(split, metric="dtw-star", n_jobs=n_jobs)
    err = 100.0 * (acc - acc_star) / acc if acc > 0 else None
    return NnResult(dataset=split.name, acc=acc, acc_star=acc_star, err=err)


def _weighted(values, weights):
    return float(np.average(np.asarray(values, dtype=np.float64), weights=weights))


def summary_stats(cond_stats, nn_results):
    """Aggregate per-dataset statistics into one report dict.

    Correlations relate series length to the reducible percentage and need
    at least two datasets (``None`` below that).  Weighted averages weight
    every numeric column by the dataset sizes.  The win/tie/loss record
    counts datasets where the invariant-metric classifier beats, matches, or
    trails the plain one on full-precision accuracies; the winning
    percentage scores ties as half a win.  The signed-rank test drops
    zero differences, uses average ranks for ties, and switches from exact
    enumeration to the normal approximation above 20 non-zero pairs.
    """
    report = {}
    if cond_stats:
        lengths = [c.series_length for c in cond_stats]
        preds = [c.pct_reducible for c in cond_stats]
        weights = [c.n_series for c in cond_stats]
        # correlations need two datasets and non-constant columns
        if len(cond_stats) >= 2 and len(set(lengths)) > 1 and len(set(preds)) > 1:
            pearson = scipy_stats.pearsonr(lengths, preds)
            spearman = scipy_stats.spearmanr(lengths, preds)
            report["pearson_length_vs_pct_reducible"] = float(pearson.statistic)
            report["pearson_pvalue"] = float(pearson.pvalue)
            report["spearman_length_vs_pct_reducible"] = float(spearman.statistic)
            report["spearman_pvalue"] = float(spearman.pvalue)
        else:
            report["pearson_length_vs_pct_reducible"] = None
            report["pearson_pvalue"] = None
            report["spearman_length_vs_pct_reducible"] = None
            report["spearman_pvalue"] = None
        report["weighted_series_length"] = _weighted(lengths, weights)
        report["weighted_n_series"] = _weighted(weights, weights)
        report["weighted_pct_reducible"] = _weighted(preds, weights)
        report["weighted_mean_deleted"] = _weighted(
            [c.mean_deleted for c in cond_stats], weights
        )
        report["weighted_std_deleted"] = _weighted(
            [c.std_deleted for c in cond_stats], weights
        )
        before = sum(c.n_elements for c in cond_stats)
        after = sum(c.n_elements_condensed for c in cond_stats)
        report["elements_before_condensation"] = before
        report["elements_after_condensation"] = after
        report["element_shrink_ratio"] = before / after if after else None

    if nn_results:
        wins = sum(1 for r in nn_results if r.acc_star > r.acc)
        ties = sum(1 for r in nn_results if r.acc_star == r.acc)
        losses = len(nn_results) - wins - ties
        report["wins"] = wins
        report["ties"] = ties
        report["losses"] = losses
        report["winning_percentage"] = 100.0 * (wins + 0.5 * ties) / len(nn_results)
        errs = [r.err for r in nn_results if r.err is not None]
        report["mean_error_percentage"] = (
            float(np.mean(errs)) if errs else None
        )
        diffs = np.asarray([r.acc - r.acc_star for r in nn_results])
        nonzero = diffs[diffs != 0]
        if nonzero.size == 0:
            report["wilcoxon_pvalue"] = None
        else:
            method = "exact" if nonzero.size <= 20 else "approx"
            test = scipy_stats.wilcoxon(
                diffs, zero_method="wilcox", correction=False, method=method
            )
            report["wilcoxon_pvalue"] = float(test.pvalue)
    return report


def write_csv(path, header, rows):
    """Write one CSV file with a header row and a trailing newline."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def emit_plot_data(kind, values, path):
    """Write plot-ready CSV data.

    ``kind="cdf"``: sorted values with their empirical CDF.
    ``kind="histogram"``: counts over fixed-width bins of 5 percentage
    points spanning 0..100.
    ``kind="scatter"``: ``(x, y)`` pairs, one row each.
    Empty input writes just the header.
    """
    if kind == "cdf":
        vals = sorted(float(v) for v in values)
        n = len(vals)
        rows = [(repr(v), repr((i + 1) / n)) for i, v in enumerate(vals)]
        write_csv(path, ("value", "cdf"), rows)
    elif kind == "histogram":
        edges = np.arange(0.0, 105.0, 5.0)
        vals = [float(v) for v in values]
        counts, _ = np.histogram(vals, bins=edges) if vals else (np.zeros(20, int), None)
        rows = [
            (repr(float(edges[i])), repr(float(edges[i + 1])), int(counts[i]))
            for i in range(len(counts))
        ] if vals else []
        write_csv(path, ("bin_start", "bin_end", "count"), rows)
    elif kind == "scatter":
        rows = [(repr(float(a)), repr(float(b))) for a, b in values]
        write_csv(path, ("acc", "acc_star"), rows)
    else:
        raise ValueError(f"kind must be 'cdf', 'histogram' or 'scatter', got {kind!r}")


def write_condensation_table(cond_stats, path):
    """CSV mirror of the per-dataset condensation table (1-decimal display)."""
    rows = [
        (
            c.dataset,
            c.series_length,
            c.n_series,
            f"{c.pct_reducible:.1f}",
            f"{c.mean_deleted:.1f}",
            f"{c.std_deleted:.1f}",
        )
        for c in cond_stats
    ]
    write_csv(
        path,
        ("dataset", "length", "n", "pct_reducible", "mean_deleted", "std_deleted"),
        rows,
    )


def write_accuracy_table(nn_results, path):
    """CSV mirror of the per-dataset accuracy table (1-decimal accuracies)."""
    rows = [
        (
            r.dataset,
            f"{r.acc:.1f}",
            f"{r.acc_star:.1f}",
            "" if r.err is None else f"{r.err:.2f}",
        )
        for r in nn_results
    ]
    write_csv(path, ("dataset", "acc", "acc_star", "err"), rows)


def write_summary_json(payload, path):
    """Deterministically serialized JSON report (sorted keys)."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
