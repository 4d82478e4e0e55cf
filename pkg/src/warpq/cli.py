"""Command-line interface.

Subcommands: ``dist`` (distance between two single-series files),
``condense`` (collapse consecutive duplicates in one series), ``bench``
(full dataset benchmark producing CSV/JSON reports), and ``kmeans-demo``
(a small fixed clustering that tabulates how centroid expansion inflates
cluster separation while cohesion stays put).

Exit codes: 0 success, 1 usage error, 2 data error, 3 resource limit.
All commands are deterministic for a fixed invocation; in particular the
thread count never changes any output byte.
"""

import glob
import os

import click
import numpy as np

from . import bench as bench_mod
from .datasets import load_ucr
from .dtw import dtw
from .exceptions import ParseError, ResourceLimitError
from .mining import cohesion, frechet, kmeans, separation
from .semimetric import dtw_invariant
from .series import check_series, condense, expand, quantize

DEFAULT_SEED = 42

_DELIMS = {"comma": ",", "tab": "\t"}


def _read_series_file(path, delimiter="auto"):
    """One series per file: a single line of delimited values."""
    with open(path, "r", encoding="utf-8") as fh:
        line = fh.readline().strip("\n")
    if not line:
        raise ParseError("file holds no values", path=path, line=1)
    if delimiter == "auto":
        delimiter = "tab" if "\t" in line else "comma"
    fields = line.split(_DELIMS[delimiter])
    try:
        values = [float(v) for v in fields]
    except ValueError as exc:
        raise ParseError(f"non-numeric value ({exc})", path=path, line=1)
    return check_series(values, name=path)


@click.group()
def cli():
    """Time-series distances on raw and condensed series, plus benchmarks."""


@cli.command()
@click.argument("file_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("file_b", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--distance",
    type=click.Choice(["dtw", "dtw-star"]),
    default="dtw",
    show_default=True,
    help="Plain DTW, or DTW between condensed forms.",
)
@click.option(
    "--delimiter",
    type=click.Choice(["auto", "comma", "tab"]),
    default="auto",
    show_default=True,
)
def dist(file_a, file_b, distance, delimiter):
    """Print the distance between the series in FILE_A and FILE_B."""
    x = _read_series_file(file_a, delimiter)
    y = _read_series_file(file_b, delimiter)
    if distance == "dtw-star":
        value = dtw_invariant(x, y)
    else:
        value = dtw(x, y).distance
    click.echo(repr(value))


@cli.command("condense")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--delimiter",
    type=click.Choice(["auto", "comma", "tab"]),
    default="auto",
    show_default=True,
)
@click.option(
    "--quantize-decimals",
    type=int,
    default=None,
    help="Round to this many decimals before condensing (off by default).",
)
def condense_cmd(file, delimiter, quantize_decimals):
    """Print the condensed series from FILE, then a deletion-count line."""
    x = _read_series_file(file, delimiter)
    if quantize_decimals is not None:
        x = quantize(x, quantize_decimals)
    c = condense(x)
    click.echo(",".join(repr(float(v)) for v in c))
    click.echo(f"# deleted {len(x) - len(c)} of {len(x)} elements")


def _find_split_files(root, name):
    for folder in (os.path.join(root, name), root):
        for ext in ("", ".txt", ".tsv", ".csv"):
            train = os.path.join(folder, f"{name}_TRAIN{ext}")
            test = os.path.join(folder, f"{name}_TEST{ext}")
            if os.path.isfile(train) and os.path.isfile(test):
                return train, test
    return None


def _discover_datasets(root):
    names = set()
    for path in glob.glob(os.path.join(root, "*", "*_TRAIN*")) + glob.glob(
        os.path.join(root, "*_TRAIN*")
    ):
        base = os.path.basename(path)
        names.add(base.split("_TRAIN")[0])
    return sorted(n for n in names if _find_split_files(root, n))


def _quantize_split(split, decimals):
    from .datasets import DatasetSplit, LabeledSeries

    def q(records):
        return [
            LabeledSeries(label=r.label, values=quantize(r.values, decimals))
            for r in records
        ]

    return DatasetSplit(
        name=split.name,
        train=q(split.train),
        test=q(split.test),
        series_length=split.series_length,
    )


@cli.command("bench")
@click.argument(
    "dataset_dir",
    required=False,
    envvar="WARPQ_DATA_DIR",
    type=click.Path(file_okay=False),
)
@click.option(
    "--datasets",
    "dataset_names",
    default="all",
    show_default=True,
    help="Comma-separated dataset names, or 'all' to discover them.",
)
@click.option(
    "--delimiter",
    type=click.Choice(["auto", "comma", "tab"]),
    default="auto",
    show_default=True,
)
@click.option("--out", type=click.Path(file_okay=False), default=".", show_default=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option(
    "--stddev",
    type=click.Choice(["population", "sample"]),
    default="population",
    show_default=True,
)
@click.option("--normalize", is_flag=True, default=False, help="Z-normalize series.")
@click.option("--quantize-decimals", type=int, default=None)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
def bench_cmd(
    dataset_dir,
    dataset_names,
    delimiter,
    out,
    threads,
    stddev,
    normalize,
    quantize_decimals,
    seed,
):
    """Condensation and nearest-neighbor benchmark over DATASET_DIR.

    DATASET_DIR defaults to the WARPQ_DATA_DIR environment variable.  Each
    dataset needs a NAME_TRAIN / NAME_TEST file pair, either directly in the
    directory or under a NAME/ subdirectory.
    """
    if not dataset_dir:
        raise click.UsageError(
            "no dataset directory given and WARPQ_DATA_DIR is not set"
        )
    if not os.path.isdir(dataset_dir):
        raise ParseError("dataset directory does not exist", path=dataset_dir)
    if dataset_names == "all":
        names = _discover_datasets(dataset_dir)
        if not names:
            raise ParseError("no datasets found", path=dataset_dir)
    else:
        names = [n.strip() for n in dataset_names.split(",") if n.strip()]
    os.makedirs(out, exist_ok=True)

    cond_stats = []
    nn_results = []
    for name in names:
        found = _find_split_files(dataset_dir, name)
        if found is None:
            raise ParseError(f"dataset {name!r} not found", path=dataset_dir)
        split = load_ucr(
            found[0], found[1], delimiter=delimiter, normalize=normalize, name=name
        )
        if quantize_decimals is not None:
            split = _quantize_split(split, quantize_decimals)
        cond_stats.append(bench_mod.condensation_stats(split, stddev=stddev))
        nn_results.append(bench_mod.evaluate_split(split, n_jobs=threads))
        click.echo(
            f"{name}: pct_reducible={cond_stats[-1].pct_reducible:.1f} "
            f"acc={nn_results[-1].acc:.1f} acc_star={nn_results[-1].acc_star:.1f}"
        )

    bench_mod.write_condensation_table(
        cond_stats, os.path.join(out, "condensation.csv")
    )
    bench_mod.write_accuracy_table(nn_results, os.path.join(out, "accuracy.csv"))
    bench_mod.emit_plot_data(
        "cdf",
        [c.pct_reducible for c in cond_stats],
        os.path.join(out, "reducible_cdf.csv"),
    )
    bench_mod.emit_plot_data(
        "histogram",
        [c.pct_reducible for c in cond_stats],
        os.path.join(out, "reducible_histogram.csv"),
    )
    bench_mod.emit_plot_data(
        "scatter",
        [(r.acc, r.acc_star) for r in nn_results],
        os.path.join(out, "accuracy_scatter.csv"),
    )
    summary = bench_mod.summary_stats(cond_stats, nn_results)
    payload = {
        # thread count is deliberately absent: it cannot affect results, and
        # reports from runs that differ only in parallelism must compare equal
        "metadata": {
            "dataset_dir": os.path.abspath(dataset_dir),
            "datasets": names,
            "delimiter": delimiter,
            "normalize": normalize,
            "quantize_decimals": quantize_decimals,
            "stddev": stddev,
            "seed": seed,
        },
        "datasets": [
            {
                "name": c.dataset,
                "series_length": c.series_length,
                "n_series": c.n_series,
                "pct_reducible": c.pct_reducible,
                "mean_deleted": c.mean_deleted,
                "std_deleted_population": c.std_deleted_population,
                "std_deleted_sample": c.std_deleted_sample,
                "acc": r.acc,
                "acc_star": r.acc_star,
                "err": r.err,
            }
            for c, r in zip(cond_stats, nn_results)
        ],
        "summary": summary,
    }
    bench_mod.write_summary_json(payload, os.path.join(out, "summary.json"))
    click.echo(f"wrote reports to {out}")


@cli.command("kmeans-demo")
@click.option("--out", type=click.Path(file_okay=False), default=".", show_default=True)
@click.option("--max-replicates", type=int, default=20, show_default=True)
def kmeans_demo(out, max_replicates):
    """Tabulate separation against centroid replication on a fixed sample.

    Clusters {(-1,0,0), (-1,0,2)} and {(0,2,3), (1,2,3)} have centroids
    (-1,0,1) and (0.5,2,3); appending copies of the trailing 3 to the second
    centroid leaves cohesion untouched but inflates separation without
    bound.  Writes kmeans_demo.csv with columns r, separation, cohesion.
    """
    sample = [
        np.array([-1.0, 0.0, 0.0]),
        np.array([-1.0, 0.0, 2.0]),
        np.array([0.0, 2.0, 3.0]),
        np.array([1.0, 2.0, 3.0]),
    ]
    mu1 = np.array([-1.0, 0.0, 1.0])
    mu2 = np.array([0.5, 2.0, 3.0])
    state = kmeans(sample, 2, init_centroids=[mu1, mu2], metric="dtw")
    click.echo(f"partition: {state.partition}")
    clusters = [[sample[i] for i in members] for members in state.partition]

    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, "kmeans_demo.csv")
    rows = []
    for r in range(1, max_replicates + 1):
        mu2_r = expand(mu2, [1, 1, r])
        rows.append(
            (
                r,
                repr(separation(mu1, mu2_r)),
                repr(cohesion(clusters, [mu1, mu2_r])),
            )
        )
    bench_mod.write_csv(path, ("r", "separation", "cohesion"), rows)
    click.echo(f"frechet at centroids: {frechet(clusters[0], mu1)!r}, "
               f"{frechet(clusters[1], mu2)!r}")
    click.echo(f"wrote {path}")


def main(argv=None):
    """Entry point with mapped exit codes (0 ok, 1 usage, 2 data, 3 limit)."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except ResourceLimitError as exc:
        click.echo(f"resource limit: {exc}", err=True)
        return 3
    except (ParseError, ValueError, OSError) as exc:
        click.echo(f"data error: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
