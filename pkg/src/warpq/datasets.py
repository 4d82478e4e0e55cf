"""Loading, writing, and generating labeled time-series datasets.

The on-disk format is the classification-repository layout: one record per
line, first field the class label, remaining fields the series values,
comma- or tab-delimited.  Labels are kept as raw strings and compared by
equality; values are parsed as double precision, and all structural
operations (condensation in particular) run on exactly those parsed doubles.

No preprocessing is applied by default.  Z-normalization is available behind
an explicit flag because it changes both which elements are equal and the
resulting accuracies; whether it was applied is recorded by the benchmark
outputs.
"""

import os
from dataclasses import dataclass

import numpy as np

from .exceptions import ParseError
from .series import check_series


@dataclass(frozen=True)
class LabeledSeries:
    """One classified series: a raw string label plus its values."""

    label: str
    values: np.ndarray


@dataclass(frozen=True)
class DatasetSplit:
    """A named train/test pair of labeled series, all of one length."""

    name: str
    train: list
    test: list
    series_length: int

    def all_series(self):
        """Train followed by test, in file order."""
        return list(self.train) + list(self.test)


def _split_line(line, delimiter):
    if delimiter == "comma":
        return line.split(",")
    if delimiter == "tab":
        return line.split("\t")
    raise ValueError(f"delimiter must be 'auto', 'comma' or 'tab', got {delimiter!r}")


def _detect_delimiter(first_line, path):
    if "\t" in first_line:
        return "tab"
    if "," in first_line:
        return "comma"
    raise ParseError("no comma or tab delimiter found", path=path, line=1)


def _normalize(x):
    sd = float(np.std(x))
    centered = x - float(np.mean(x))
    return centered / sd if sd > 0 else centered


def _load_file(path, delimiter, normalize):
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    lines = raw.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("file is empty", path=path)
    if delimiter == "auto":
        delimiter = _detect_delimiter(lines[0], path)
    records = []
    length = None
    for lineno, line in enumerate(lines, start=1):
        fields = _split_line(line, delimiter)
        if len(fields) < 2:
            raise ParseError(
                f"expected a label and at least one value, got {len(fields)} field(s)",
                path=path,
                line=lineno,
            )
        label = fields[0]
        try:
            values = np.array([float(v) for v in fields[1:]], dtype=np.float64)
        except ValueError as exc:
            raise ParseError(f"non-numeric value ({exc})", path=path, line=lineno)
        if length is None:
            length = len(values)
        elif len(values) != length:
            raise ParseError(
                f"row has {len(values)} values, expected {length}",
                path=path,
                line=lineno,
            )
        values = check_series(values, name=f"{path}:{lineno}")
        if normalize:
            values = _normalize(values)
        records.append(LabeledSeries(label=label, values=values))
    return records, length, delimiter


def load_ucr(train_path, test_path, delimiter="auto", normalize=False, name=None):
    """Load a train/test dataset pair from repository-format files.

    ``delimiter`` may be ``"auto"`` (detected from the first line of each
    file), ``"comma"``, or ``"tab"``.  Every row must carry the same number
    of values across both files.  Malformed rows raise :class:`ParseError`
    with the file and line number; no row is ever silently dropped.
    """
    train, train_len, _ = _load_file(train_path, delimiter, normalize)
    test, test_len, _ = _load_file(test_path, delimiter, normalize)
    if train_len != test_len:
        raise ParseError(
            f"train series length {train_len} != test series length {test_len}",
            path=test_path,
        )
    if name is None:
        name = os.path.basename(train_path).split("_")[0] or "dataset"
    return DatasetSplit(name=name, train=train, test=test, series_length=train_len)


def save_split(split, train_path, test_path, delimiter="comma"):
    """Write a dataset back to the on-disk format.

    Values are rendered with ``repr``, which round-trips doubles exactly:
    reloading the written files reproduces every value bit for bit.
    """
    sep = {"comma": ",", "tab": "\t"}.get(delimiter)
    if sep is None:
        raise ValueError(f"delimiter must be 'comma' or 'tab', got {delimiter!r}")
    for path, records in ((train_path, split.train), (test_path, split.test)):
        with open(path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(rec.label)
                for v in rec.values:
                    fh.write(sep + repr(float(v)))
                fh.write("\n")


@dataclass(frozen=True)
class SynthSeries:
    """A generated series together with the base it was expanded from.

    By construction, condensing ``values`` yields ``base`` exactly.
    """

    values: np.ndarray
    base: np.ndarray


def synth_expansion_corpus(seed, count, base_len, max_mult):
    """Random expansions of random irreducible bases, for tests.

    Each entry records its base, so structural assertions (condensed form,
    deleted element counts) have exact known answers.  Deterministic for a
    given seed.  ``max_mult=1`` produces only irreducible series.
    """
    if count < 0 or base_len < 1 or max_mult < 1:
        raise ValueError("count must be >= 0; base_len and max_mult must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        base = rng.standard_normal(base_len)
        # continuous draws repeat with probability zero, but stay exact
        for i in range(1, base_len):
            while base[i] == base[i - 1]:
                base[i] = rng.standard_normal()
        mult = rng.integers(1, max_mult + 1, size=base_len)
        out.append(SynthSeries(values=np.repeat(base, mult), base=base))
    return out
