"""Validated series: construction rules and numpy-aware structural ops."""

import numpy as np
import pytest

from warpq import series, words
from helpers import random_expansion, random_series


class TestCheckSeries:
    def test_accepts_lists_and_arrays(self):
        out = series.check_series([0, 1, 2])
        assert out.dtype == np.float64
        np.testing.assert_array_equal(out, [0.0, 1.0, 2.0])

    @pytest.mark.parametrize("bad", [[], [np.nan], [np.inf, 1.0], [[1.0, 2.0]]])
    def test_rejects_invalid_values(self, bad):
        with pytest.raises(ValueError):
            series.check_series(bad)

    def test_check_series_list_accepts_2d_and_ragged(self):
        two_d = series.check_series_list(np.zeros((3, 4)))
        assert len(two_d) == 3
        ragged = series.check_series_list([[1.0], [1.0, 2.0, 3.0]])
        assert [len(r) for r in ragged] == [1, 3]

    def test_check_series_list_rejects_single_series(self):
        with pytest.raises(ValueError):
            series.check_series_list(np.zeros(4))
        with pytest.raises(ValueError):
            series.check_series_list([])


class TestCondense:
    def test_matches_generic_word_condense(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            x = random_expansion(rng, random_series(rng, 6, values=[0, 1, 2]))
            assert tuple(series.condense(x)) == words.condense(tuple(x))

    def test_idempotent(self):
        x = np.array([3.0, 3.0, 1.0, 1.0, 1.0, 2.0])
        c = series.condense(x)
        np.testing.assert_array_equal(c, [3.0, 1.0, 2.0])
        np.testing.assert_array_equal(series.condense(c), c)

    def test_exact_equality_only(self):
        # nearby but unequal floats never collapse
        x = np.array([1.0, 1.0 + 1e-16, np.nextafter(1.0, 2.0)])
        assert len(series.condense(x)) == 2  # first two ARE equal in float64
        y = np.array([1.0, np.nextafter(1.0, 2.0)])
        assert len(series.condense(y)) == 2

    def test_signed_zeros_collapse(self):
        # IEEE equality treats -0.0 == 0.0, keeping condensation consistent
        # with zero subtraction cost
        assert len(series.condense(np.array([0.0, -0.0]))) == 1


class TestRunLengths:
    def test_reconstruction(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            x = random_expansion(rng, random_series(rng, 6, values=[0, 1]))
            values, counts = series.run_lengths(x)
            np.testing.assert_array_equal(np.repeat(values, counts), x)
            assert np.all(counts >= 1)


class TestExpand:
    def test_repeats_elements(self):
        np.testing.assert_array_equal(
            series.expand([0.0, 1.0], [1, 2]), [0.0, 1.0, 1.0]
        )

    def test_rejects_bad_multiplicities(self):
        with pytest.raises(ValueError):
            series.expand([0.0, 1.0], [1])
        with pytest.raises(ValueError):
            series.expand([0.0, 1.0], [1, 0])
        with pytest.raises(ValueError):
            series.expand([0.0, 1.0], [1.5, 2.0])

    def test_is_expansion_matches_word_layer(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            x = random_series(rng, 5, values=[0, 1, 2])
            y = random_series(rng, 5, values=[0, 1, 2])
            assert series.is_expansion(x, y) == words.is_expansion(tuple(x), tuple(y))
            ex = random_expansion(rng, x)
            assert series.is_expansion(ex, x)


class TestQuantize:
    def test_rounds_to_decimals(self):
        x = np.array([1.04, 1.06, 2.0])
        np.testing.assert_array_equal(series.quantize(x, 1), [1.0, 1.1, 2.0])

    def test_enables_near_duplicate_condensation(self):
        x = np.array([1.001, 0.999, 5.0])
        assert len(series.condense(x)) == 3
        assert len(series.condense(series.quantize(x, 2))) == 2

    def test_rejects_negative_decimals(self):
        with pytest.raises(ValueError):
            series.quantize([1.0], -1)
