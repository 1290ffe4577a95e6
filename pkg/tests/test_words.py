import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from rankone.words import (
    PeriodReport,
    Word,
    border_array,
    find_occurrences,
    is_period,
    is_period_prefix_form,
    minimal_period,
    periods_from_borders,
    subword,
)
from rankone.oracle import naive_period

W = Word.from_string


def all_binary_words(max_len):
    for n in range(1, max_len + 1):
        for bits in product((0, 1), repeat=n):
            yield Word(bits)


class TestWordType:
    def test_symbols_validated(self):
        with pytest.raises(ValueError):
            Word((0, 2), alphabet_size=2)
        with pytest.raises(ValueError):
            Word((0,), alphabet_size=1)

    def test_string_round_trip(self):
        assert W("01011010").to_string() == "01011010"
        assert len(W("0")) == 1

    def test_concat_and_power(self):
        assert (W("01") + W("10")).to_string() == "0110"
        assert (W("01") * 3).to_string() == "010101"

    def test_concat_rejects_mixed_alphabets(self):
        with pytest.raises(ValueError):
            W("01") + Word((0, 1), alphabet_size=3)


class TestSubword:
    def test_inner_window(self):
        assert subword(W("01011010"), 3, 5) == W("110")

    def test_single_symbol(self):
        assert subword(W("0"), 0, 0) == W("0")

    def test_full_window(self):
        assert subword(W("010"), 0, 2) == W("010")

    @pytest.mark.parametrize("i,j", [(-1, 2), (2, 1), (0, 3), (3, 3)])
    def test_out_of_range(self, i, j):
        with pytest.raises(IndexError):
            subword(W("010"), i, j)


def naive_occurrences(pattern, text):
    m = len(pattern)
    return [k for k in range(len(text) - m + 1) if text.symbols[k : k + m] == pattern.symbols]


class TestFindOccurrences:
    def test_examples(self):
        assert find_occurrences(W("010"), W("01011010")) == [0, 5]
        assert find_occurrences(W("0"), W("111")) == []
        assert find_occurrences(W("11"), W("111")) == [0, 1]

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValueError):
            find_occurrences(Word(()), W("01"))

    def test_agrees_with_naive_scan(self):
        rng = random.Random(7)
        for _ in range(300):
            text = Word(tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 40))))
            plen = rng.randint(1, 6)
            pattern = Word(tuple(rng.randint(0, 1) for _ in range(plen)))
            assert find_occurrences(pattern, text) == naive_occurrences(pattern, text)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=30),
           st.lists(st.integers(0, 1), min_size=1, max_size=6))
    def test_agrees_with_naive_scan_hypothesis(self, text, pattern):
        t, p = Word(tuple(text)), Word(tuple(pattern))
        assert find_occurrences(p, t) == naive_occurrences(p, t)


class TestIsPeriod:
    def test_examples(self):
        assert is_period(W("0101"), 2)
        assert not is_period(W("0100"), 2)
        assert is_period(W("0001000"), 4)

    @pytest.mark.parametrize("p", [0, -1, 3, 4])
    def test_domain_errors(self, p):
        with pytest.raises(ValueError):
            is_period(W("010"), p)

    def test_formulations_agree_exhaustively(self):
        # pointwise and prefix-copy definitions agree on every small word
        for w in all_binary_words(10):
            for p in range(1, len(w)):
                assert is_period(w, p) == is_period_prefix_form(w, p)


class TestMinimalPeriod:
    def test_examples(self):
        assert minimal_period(W("0000")).minimal_period == 1
        assert minimal_period(W("0001000")).minimal_period == 4
        assert minimal_period(W("01011")).minimal_period == 5
        assert minimal_period(W("1")).minimal_period == 1

    def test_report_shape(self):
        report = minimal_period(W("0101"), collect_up_to=4)
        assert report == PeriodReport(4, 2, (2, 4))

    def test_collected_periods_satisfy_the_predicate(self):
        for w in all_binary_words(9):
            report = minimal_period(w, collect_up_to=len(w))
            listed = set(report.all_periods_up_to)
            for p in range(1, len(w)):
                assert (p in listed) == is_period(w, p)
            assert len(w) in listed  # the vacuous period is always reported

    def test_agrees_with_naive_oracle(self):
        for w in all_binary_words(10):
            assert minimal_period(w).minimal_period == naive_period(w)

    def test_border_array_matches_periods(self):
        rng = random.Random(11)
        for _ in range(200):
            w = Word(tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 30))))
            b = border_array(w)
            assert minimal_period(w).minimal_period == len(w) - b[-1]


class TestOverlapImpliesPeriod:
    """Two occurrences of a word at distance p inside a long enough carrier
    force p to be a period of the word."""

    def check_instance(self, eta, p, xi):
        occ = find_occurrences(eta, xi)
        assert 0 in occ and p in occ
        assert len(xi) >= len(eta) + p
        assert is_period(eta, p)

    def test_exhaustive_small_words(self):
        for eta in all_binary_words(8):
            for p in range(1, len(eta)):
                if not is_period(eta, p):
                    continue
                # overlap eta with itself at offset p; consistent since p is a period
                xi = subword(eta, 0, p - 1) + eta
                self.check_instance(eta, p, xi)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=6),
           st.integers(2, 5), st.integers(1, 8))
    def test_randomized_instances(self, root, copies, cut):
        # eta is a prefix of a power of root, xi extends it by one more root copy
        base = Word(tuple(root)) * (copies + 1)
        p = len(root)
        length = min(len(root) * copies, p + cut)
        eta = subword(base, 0, length - 1)
        if p >= len(eta):
            return
        xi = subword(base, 0, length + p - 1)
        self.check_instance(eta, p, xi)
