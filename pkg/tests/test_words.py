"""Run-length algebra: decomposition uniqueness, condensation, expansions."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from warpq import words

small_words = st.lists(st.integers(min_value=0, max_value=3), max_size=12).map(tuple)
multiplicities = st.lists(st.integers(min_value=1, max_value=4), min_size=0, max_size=8)


def all_words(alphabet, max_len):
    yield ()
    for n in range(1, max_len + 1):
        yield from product(alphabet, repeat=n)


def all_decompositions(word):
    # every way to cut the word into blocks of (value, count) with the
    # partition property; used to re-derive the unique run decomposition
    if not word:
        yield []
        return
    for cut in range(1, len(word) + 1):
        head = word[:cut]
        if any(v != head[0] for v in head):
            break
        for rest in all_decompositions(word[cut:]):
            yield [(head[0], cut)] + rest


class TestRunLengthEncode:
    def test_groups_maximal_runs(self):
        assert words.run_length_encode((1, 1, 2, 2, 2, 1)) == [(1, 2), (2, 3), (1, 1)]

    def test_empty_word(self):
        assert words.run_length_encode(()) == []

    def test_singleton(self):
        assert words.run_length_encode((5,)) == [(5, 1)]

    @given(small_words)
    def test_partition_and_maximality(self, w):
        runs = words.run_length_encode(w)
        assert words.run_length_decode(runs) == w
        assert all(count >= 1 for _, count in runs)
        assert all(a != b for (a, _), (b, _) in zip(runs, runs[1:]))

    def test_unique_among_all_valid_decompositions(self):
        # exhaustive: any decomposition with maximal blocks equals ours
        for w in all_words((0, 1, 2), 6):
            valid = [
                d
                for d in all_decompositions(w)
                if all(a != b for (a, _), (b, _) in zip(d, d[1:]))
            ]
            assert valid == [words.run_length_encode(w)]

    def test_decode_rejects_nonpositive_counts(self):
        with pytest.raises(ValueError):
            words.run_length_decode([(1, 0)])


class TestCondense:
    def test_collapses_runs(self):
        assert words.condense((0, 1, 1)) == (0, 1)

    def test_empty(self):
        assert words.condense(()) == ()

    def test_constant_word(self):
        assert words.condense((3, 3, 3)) == (3,)

    @given(small_words)
    def test_idempotent_and_irreducible(self, w):
        c = words.condense(w)
        assert words.condense(c) == c
        assert words.is_irreducible(c)

    def test_shorter_than_any_other_compression(self):
        # the condensed form is the strictly shortest compression
        for w in all_words((0, 1), 6):
            c = words.condense(w)
            compressions = [
                y
                for y in all_words((0, 1), len(w) or 1)
                if len(y) <= len(w) and words.is_expansion(w, y)
            ]
            assert c in compressions
            for y in compressions:
                if y != c:
                    assert len(c) < len(y)


class TestExpansion:
    def test_example_pair(self):
        assert words.is_expansion((0, 1, 1), (0, 1))
        assert not words.is_expansion((0, 1), (0, 1, 1))

    def test_every_word_expands_itself(self):
        assert words.is_expansion((7, 2), (7, 2))

    def test_expand_examples(self):
        assert words.expand((0, 1), (1, 2)) == (0, 1, 1)
        assert words.expand((0, 1), (1, 1)) == (0, 1)
        assert words.expand((4, 5), (3, 1)) == (4, 4, 4, 5)

    def test_expand_rejects_bad_multiplicities(self):
        with pytest.raises(ValueError):
            words.expand((0, 1), (1,))
        with pytest.raises(ValueError):
            words.expand((0, 1), (1, 0))

    @given(small_words, st.data())
    def test_expand_then_is_expansion(self, w, data):
        mult = data.draw(
            st.lists(
                st.integers(min_value=1, max_value=4),
                min_size=len(w),
                max_size=len(w),
            )
        )
        assert words.is_expansion(words.expand(w, mult), w)

    @given(small_words, st.data())
    @settings(max_examples=200)
    def test_transitive_along_chains(self, z, data):
        alpha = data.draw(
            st.lists(st.integers(1, 3), min_size=len(z), max_size=len(z))
        )
        y = words.expand(z, alpha)
        beta = data.draw(
            st.lists(st.integers(1, 3), min_size=len(y), max_size=len(y))
        )
        x = words.expand(y, beta)
        assert words.is_expansion(x, y)
        assert words.is_expansion(y, z)
        assert words.is_expansion(x, z)

    def test_compressions_expand_the_condensed_form(self):
        # any compression of a word is itself an expansion of its condensed form
        for w in all_words((0, 1, 2), 5):
            c = words.condense(w)
            for y in all_words((0, 1, 2), max(len(w), 1)):
                if words.is_expansion(w, y):
                    assert words.is_expansion(y, c)

    @given(small_words, st.data())
    def test_multiplicities_recoverable(self, y, data):
        alpha = data.draw(
            st.lists(st.integers(1, 4), min_size=len(y), max_size=len(y))
        )
        x = words.expand(y, alpha)
        recovered = words.expansion_multiplicities(x, y)
        assert recovered is not None
        assert words.expand(y, recovered) == x

    def test_multiplicities_none_when_not_expansion(self):
        assert words.expansion_multiplicities((0, 1), (0, 2)) is None
        assert words.expansion_multiplicities((0, 1), (0, 1, 1)) is None


class TestCommonCompression:
    def test_shared_condensed_form(self):
        assert words.common_compression((0, 1, 1), (0, 0, 1)) == (0, 1)

    def test_distinct_condensed_forms(self):
        assert words.common_compression((0, 1), (0, 2)) is None

    def test_irreducible_word_with_itself(self):
        assert words.common_compression((2,), (2,)) == (2,)

    @given(small_words, st.data())
    @settings(max_examples=200)
    def test_coex_composition_keeps_common_compression(self, w, data):
        # compose two condense-then-expand maps; the result must still share
        # a compression with the original word
        def coex(word):
            c = words.condense(word)
            mult = data.draw(
                st.lists(st.integers(1, 3), min_size=len(c), max_size=len(c))
            )
            return words.expand(c, mult)

        out = coex(coex(w))
        if w:
            assert words.common_compression(w, out) is not None
        else:
            assert out == ()
