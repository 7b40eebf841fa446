import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qstr.bits import (
    TABLE,
    BinomialTable,
    BitString,
    Order,
    binomial,
    complement,
    enumerate_class,
    hamming_distance,
    lex_rank,
    lex_rank_array,
    lex_unrank,
    prec_count,
    revlex_rank,
    succ_count,
    weight,
)


@st.composite
def bitstrings(draw, min_len=1, max_len=16):
    n = draw(st.integers(min_len, max_len))
    return BitString(n, draw(st.integers(0, (1 << n) - 1)))


def test_parse_and_print_round_trip():
    assert str(BitString.parse("00111")) == "00111"
    assert BitString.parse("0100").value == 4
    assert BitString.parse("0") + "1" == BitString.parse("01")
    assert "0" + BitString.parse("11") == BitString.parse("011")
    with pytest.raises(ValueError):
        BitString.parse("0120")
    with pytest.raises(ValueError):
        BitString.parse("")
    with pytest.raises(ValueError):
        BitString(3, 8)


@pytest.mark.parametrize("x, w", [("00000", 0), ("11111", 5), ("00111", 3)])
def test_weight(x, w):
    assert weight(x) == w


@pytest.mark.parametrize("x, y, d", [("0100", "0100", 0), ("0100", "1011", 4), ("110", "111", 1)])
def test_hamming_distance(x, y, d):
    assert hamming_distance(x, y) == d
    assert hamming_distance(y, x) == d


def test_hamming_distance_length_mismatch():
    with pytest.raises(ValueError):
        hamming_distance("01", "010")


@pytest.mark.parametrize("x, c", [("0100", "1011"), ("000", "111"), ("10000", "01111")])
def test_complement(x, c):
    assert str(complement(x)) == c


@given(bitstrings(max_len=70))
def test_complement_involution_and_weight(x):
    assert complement(complement(x)) == x
    assert complement(x).weight == x.length - x.weight


@pytest.mark.parametrize("x, r", [("0011", 0), ("1100", 5), ("1011", 1)])
def test_lex_rank(x, r):
    assert lex_rank(x) == r


@pytest.mark.parametrize("n, i, r, x", [(4, 2, 0, "0011"), (4, 2, 5, "1100"), (3, 1, 2, "100")])
def test_lex_unrank(n, i, r, x):
    assert str(lex_unrank(n, i, r)) == x


def test_lex_unrank_out_of_range():
    with pytest.raises(ValueError):
        lex_unrank(4, 2, 6)
    with pytest.raises(ValueError):
        lex_unrank(4, 2, -1)


@pytest.mark.parametrize("x, r", [("100", 0), ("001", 2), ("11100", 0)])
def test_revlex_rank(x, r):
    assert revlex_rank(x) == r


@pytest.mark.parametrize("x, order, c", [("11100", "revlex", 9), ("00111", "revlex", 0), ("0011", "lex", 5)])
def test_succ_count(x, order, c):
    assert succ_count(x, order) == c


@pytest.mark.parametrize("x, order, c", [("0011", "lex", 0), ("1100", "lex", 5), ("11000", "lex", 9)])
def test_prec_count(x, order, c):
    assert prec_count(x, order) == c


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(5, -1) == 0
    assert binomial(3, 4) == 0
    # independent oracles: stdlib and the multiplicative formula
    expected = 1832624140942590534
    assert binomial(64, 32) == expected == math.comb(64, 32)
    prod = 1
    for k in range(1, 33):
        prod = prod * (64 - 32 + k) // k
    assert prod == expected


def test_binomial_table_beyond_max_n_falls_back():
    small = BinomialTable(10)
    assert small(40, 20) == math.comb(40, 20)
    assert small.row(12) == tuple(math.comb(12, b) for b in range(13))
    assert TABLE(128, 64) == math.comb(128, 64)
    with pytest.raises(ValueError):
        BinomialTable(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_ranks_match_enumeration(n):
    for i in range(n + 1):
        lex = enumerate_class(n, i, Order.LEX)
        assert [lex_rank(x) for x in lex] == list(range(len(lex)))
        rev = enumerate_class(n, i, Order.REVLEX)
        assert [revlex_rank(x) for x in rev] == list(range(len(rev)))
        assert [lex_unrank(n, i, r) for r in range(len(lex))] == lex


def test_round_trip_exhaustive_up_to_16():
    for n in range(1, 17):
        for i in range(n + 1):
            size = TABLE(n, i)
            step = max(1, size // 200)
            for r in list(range(0, size, step)) + [size - 1]:
                assert lex_rank(lex_unrank(n, i, r)) == r


@given(st.integers(1, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.data())
def test_round_trip_long_strings(ni, data):
    n, i = ni
    r = data.draw(st.integers(0, TABLE(n, i) - 1))
    x = lex_unrank(n, i, r)
    assert x.weight == i and x.length == n
    assert lex_rank(x) == r


@settings(max_examples=300)
@given(bitstrings(max_len=10), st.data())
def test_order_agreement(x, data):
    same = [v for v in range(1 << x.length) if v.bit_count() == x.weight and v != x.value]
    if not same:
        return
    y = BitString(x.length, data.draw(st.sampled_from(same)))
    if x < y:
        assert lex_rank(x) < lex_rank(y)
        assert revlex_rank(x) > revlex_rank(y)
    else:
        assert lex_rank(x) > lex_rank(y)


@given(bitstrings(max_len=12))
def test_complement_reverses_rank(x):
    # holds for every length, not only the even ones needed downstream
    assert lex_rank(x) == revlex_rank(complement(x))


@given(bitstrings(min_len=2, max_len=12))
def test_prefix_zero_keeps_counts(z):
    assert succ_count("0" + z, Order.REVLEX) == succ_count(z, Order.REVLEX)
    assert prec_count("0" + z, Order.LEX) == prec_count(z, Order.LEX)


@given(bitstrings(max_len=12))
def test_prec_plus_succ_is_class_size(x):
    for order in Order:
        assert prec_count(x, order) + succ_count(x, order) + 1 == TABLE(x.length, x.weight)


@given(bitstrings(max_len=12))
def test_prefix_11_decomposition(z):
    n, i = z.length + 2, z.weight + 2
    assert succ_count("11" + z, "revlex") == succ_count(z, "revlex") + 2 * binomial(n - 2, i - 1) + binomial(n - 2, i)
    j = z.weight + 2  # weight of 11z, seen as a member of S_n^j
    assert prec_count("11" + z, "lex") == prec_count(z, "lex") + binomial(n - 2, j) + 2 * binomial(n - 2, j - 1)


def test_lex_rank_array_matches_scalar():
    for n in (1, 5, 13):
        vals = np.arange(1 << n, dtype=np.uint64)
        assert lex_rank_array(n, vals).tolist() == [lex_rank(BitString(n, v)) for v in range(1 << n)]
    rng = np.random.default_rng(3)
    vals = rng.integers(0, 2**62, 500, dtype=np.uint64)
    assert lex_rank_array(62, vals).tolist() == [lex_rank(BitString(62, int(v))) for v in vals]


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_class(65, 1)
    assert len(enumerate_class(24, 2)) == math.comb(24, 2)
