"""Codebook construction, optimality oracles, and decoding."""

import math

import numpy as np
import pytest

from cqclab.codebook import (
    Codebook,
    Codeword,
    NoSuchPath,
    build_fixed,
    build_variable,
    codebook_lines,
    codebook_rate,
    codeword_cost,
    decode_message,
    exhaustive_min_cost,
    fixed_level_costs,
    fixed_total_cost,
    make_codeword,
    variable_cost_curve,
)


@pytest.mark.parametrize("bits,cost", [("0", 1), ("1", 2), ("1101", 7)])
def test_codeword_cost_examples(bits, cost):
    assert codeword_cost(bits) == cost


def test_codeword_cost_rejects_bad_input():
    with pytest.raises(ValueError):
        codeword_cost("")
    with pytest.raises(ValueError):
        codeword_cost("012")


def test_codeword_validates_its_cost():
    with pytest.raises(ValueError):
        Codeword("10", 5)
    assert make_codeword("10").cost == 3


def test_codebook_rejects_prefix_violations_and_tiny_books():
    with pytest.raises(ValueError):
        Codebook((make_codeword("0"), make_codeword("01")), "variable")
    with pytest.raises(ValueError):
        Codebook((make_codeword("0"),), "variable")
    with pytest.raises(ValueError):
        Codebook((make_codeword("0"), make_codeword("10")), "fixed")


def test_build_variable_smallest_book():
    book = build_variable(2)
    assert [c.bits for c in book.codewords] == ["0", "1"]
    assert book.total_cost == 3
    assert codebook_rate(book).rate == pytest.approx(2 / 3)


def test_build_variable_three_messages():
    book = build_variable(3)
    assert sorted(c.bits for c in book.codewords) == ["00", "01", "1"]
    assert book.total_cost == 7
    assert codebook_rate(book).rate == pytest.approx(3 * math.log2(3) / 7)


def test_build_variable_six_messages():
    book = build_variable(6)
    assert book.total_cost == 23
    assert codebook_rate(book).rate == pytest.approx(6 * math.log2(6) / 23)
    # frozen output of the documented tie rule
    assert [c.bits for c in book.codewords] == [
        "0000", "0001", "001", "01", "10", "11"]


def test_build_variable_rejects_tiny_m():
    with pytest.raises(ValueError):
        build_variable(1)


@pytest.mark.parametrize("M", range(2, 11))
def test_build_variable_matches_exhaustive_minimum(M):
    assert build_variable(M).total_cost == exhaustive_min_cost(M)


def test_exhaustive_oracle_frozen_points_and_range():
    assert exhaustive_min_cost(2) == 3
    assert exhaustive_min_cost(3) == 7
    assert exhaustive_min_cost(6) == 23
    with pytest.raises(ValueError):
        exhaustive_min_cost(11)
    with pytest.raises(ValueError):
        exhaustive_min_cost(1)


def test_total_cost_is_tie_break_invariant_up_to_64():
    # Splitting a leaf always adds its cost plus 3, so which equal-cost
    # leaf goes first cannot change the total.
    for M in range(2, 65):
        lex = build_variable(M, tie_break="lex").total_cost
        anti = build_variable(M, tie_break="antilex").total_cost
        assert lex == anti


def test_variable_cost_curve_matches_builder():
    curve = variable_cost_curve(64)
    for M in (2, 3, 6, 17, 64):
        assert curve[M] == build_variable(M).total_cost


def test_build_fixed_examples():
    book = build_fixed(4)
    assert [c.bits for c in book.codewords] == ["00", "01", "10", "11"]
    assert book.total_cost == 12
    assert codebook_rate(book).rate == pytest.approx(8 / 12)

    book = build_fixed(2)
    assert [c.bits for c in book.codewords] == ["0", "1"]
    assert codebook_rate(book).rate == pytest.approx(2 / 3)

    book = build_fixed(6)
    assert [c.bits for c in book.codewords] == [
        "000", "001", "010", "100", "011", "101"]
    assert book.total_cost == 25
    assert codebook_rate(book).rate == pytest.approx(6 * math.log2(6) / 25)


def _brute_force_fixed(M):
    """Independent search: enumerate whole levels, keep fewest-ones words."""
    lhat = math.ceil(math.log2(M))
    best = None
    for level in range(lhat, 2 * lhat + 1):
        if 2 ** level < M:
            continue
        words = sorted((format(v, f"0{level}b") for v in range(2 ** level)),
                       key=lambda w: (w.count("1"), w))[:M]
        cost = sum(codeword_cost(w) for w in words)
        if best is None or cost < best[0]:
            best = (cost, level, words)
    return best


@pytest.mark.parametrize("M", [2, 3, 4, 5, 6, 7, 8, 12, 16])
def test_build_fixed_matches_brute_force(M):
    cost, level, words = _brute_force_fixed(M)
    book = build_fixed(M)
    assert book.total_cost == cost
    assert len(book.codewords[0].bits) == level
    assert [c.bits for c in book.codewords] == words


@pytest.mark.parametrize("M", [2, 3, 5, 9, 33, 64, 100, 1000])
def test_fixed_level_rates_stay_in_bracket(M):
    # Any level's best book costs strictly between M*l and 2*M*l slots,
    # so its rate sits strictly between log2(M)/(2l) and log2(M)/l.
    bits = math.log2(M)
    for level, cost in fixed_level_costs(M).items():
        rate = M * bits / cost
        assert bits / (2 * level) < rate < bits / level


def test_fixed_never_beats_variable_up_to_1024():
    curve = variable_cost_curve(1024)
    for M in range(2, 1025):
        bits = M * math.log2(M)
        assert bits / fixed_total_cost(M) <= bits / curve[M] + 1e-12


def test_fixed_total_cost_matches_materialized_books():
    for M in (2, 6, 31, 128):
        assert fixed_total_cost(M) == build_fixed(M).total_cost


def test_built_books_are_prefix_free():
    rng = np.random.default_rng(0)
    for M in rng.integers(2, 400, size=10):
        for book in (build_variable(int(M)), build_fixed(int(M))):
            words = sorted(c.bits for c in book.codewords)
            assert len(words) == M
            for prev, cur in zip(words, words[1:]):
                assert not cur.startswith(prev)


def test_decode_message_walks_the_tree():
    book = build_variable(3)  # 00, 01, 1
    words = [c.bits for c in book.codewords]
    assert decode_message("01", book) == words.index("01")
    assert decode_message("0", book) is None  # proper prefix
    with pytest.raises(NoSuchPath):
        decode_message("10", book)  # walks through the leaf '1'


def test_decode_message_roundtrip():
    book = build_variable(6)
    rng = np.random.default_rng(1)
    for _ in range(1000):
        idx = int(rng.integers(len(book.codewords)))
        word = book.codewords[idx].bits
        assert decode_message(word, book) == idx
        # prefix-freeness means every proper prefix is still mid-walk
        for cut in range(1, len(word)):
            assert decode_message(word[:cut], book) is None


def test_codebook_serialization():
    book = build_variable(3)
    assert codebook_lines(book) == "00\n01\n1\n"


def test_rate_point_fields():
    book = build_fixed(4)
    point = codebook_rate(book)
    assert (point.M, point.total_cost) == (4, 12)
    assert point.rate == pytest.approx(point.M * math.log2(point.M) / point.total_cost)


def test_rate_of_equal_cost_book_is_bits_over_cost():
    book = Codebook((make_codeword("01"), make_codeword("10")), "fixed")
    assert codebook_rate(book).rate == pytest.approx(math.log2(2) / 3)
