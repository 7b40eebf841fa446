"""Fixed-weight bitstring combinatorics.

Bitstrings are stored as a Python int plus an explicit length. The leftmost
character of the text form is the most significant bit, so lexicographic order
on equal-length strings coincides with integer order.

Ranks are computed with the combinatorial number system in O(length)
arithmetic operations; nothing here enumerates a weight class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

MAX_ENUM_BITS = 64


class Order(str, Enum):
    LEX = "lex"
    REVLEX = "revlex"


@dataclass(frozen=True, order=True)
class BitString:
    """An n-bit string; ``value`` holds the bits with b_1 as the top bit."""

    length: int
    value: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> BitString:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(len(text), int(text, 2))

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: BitString | str) -> BitString:
        """Concatenation, so ``BitString.parse('0') + w + '1'`` reads like ``0w1``."""
        if isinstance(other, str):
            other = BitString.parse(other)
        return BitString(self.length + other.length, (self.value << other.length) | other.value)

    def __radd__(self, other: str) -> BitString:
        return BitString.parse(other) + self

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - p)) & 1 for p in range(self.length))

    @property
    def weight(self) -> int:
        return self.value.bit_count()


def as_bitstring(x: BitString | str) -> BitString:
    return BitString.parse(x) if isinstance(x, str) else x


class BinomialTable:
    """Immutable Pascal triangle C(a, b) for 0 <= b <= a <= max_n.

    Lookups outside the table fall back to :func:`math.comb`; out-of-range
    ``b`` gives 0.
    """

    def __init__(self, max_n: int = 128):
        if max_n < 1:
            raise ValueError("max_n must be positive")
        rows = [(1,)]
        for a in range(1, max_n + 1):
            prev = rows[-1]
            rows.append((1,) + tuple(prev[b - 1] + prev[b] for b in range(1, a)) + (1,))
        self.max_n = max_n
        self._rows = tuple(rows)

    def __call__(self, a: int, b: int) -> int:
        if b < 0 or b > a or a < 0:
            return 0
        if a <= self.max_n:
            return self._rows[a][b]
        return math.comb(a, b)

    def row(self, a: int) -> tuple[int, ...]:
        if a <= self.max_n:
            return self._rows[a]
        return tuple(math.comb(a, b) for b in range(a + 1))


TABLE = BinomialTable(128)


def binomial(a: int, b: int) -> int:
    return TABLE(a, b)


def weight(x: BitString | str) -> int:
    return as_bitstring(x).weight


def hamming_distance(x: BitString | str, y: BitString | str) -> int:
    x, y = as_bitstring(x), as_bitstring(y)
    if x.length != y.length:
        raise ValueError(f"length mismatch: {x.length} vs {y.length}")
    return (x.value ^ y.value).bit_count()


def complement(x: BitString | str) -> BitString:
    x = as_bitstring(x)
    return BitString(x.length, x.value ^ ((1 << x.length) - 1))


def lex_rank(x: BitString | str) -> int:
    """Number of same-length, same-weight strings lexicographically below ``x``."""
    x = as_bitstring(x)
    n, v = x.length, x.value
    k = v.bit_count()
    rank = 0
    # Each 1 at a position with `rem` positions to its right is preceded by
    # every completion that has a 0 there instead: C(rem, k) of them.
    while k:
        top = v.bit_length() - 1
        rank += TABLE(top, k)
        v ^= 1 << top
        k -= 1
    return rank


def lex_unrank(n: int, i: int, r: int) -> BitString:
    total = TABLE(n, i)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range for C({n},{i}) = {total}")
    v = 0
    k = i
    for rem in range(n - 1, -1, -1):
        if k == 0:
            break
        zeros_first = TABLE(rem, k)
        if r >= zeros_first:
            r -= zeros_first
            v |= 1 << rem
            k -= 1
    return BitString(n, v)


def revlex_rank(x: BitString | str) -> int:
    x = as_bitstring(x)
    return TABLE(x.length, x.weight) - 1 - lex_rank(x)


def class_size(x: BitString | str) -> int:
    x = as_bitstring(x)
    return TABLE(x.length, x.weight)


def succ_count(x: BitString | str, order: Order | str = Order.REVLEX) -> int:
    """How many strings follow ``x`` in its weight class under ``order``."""
    x = as_bitstring(x)
    return class_size(x) - 1 - prec_count(x, order)


def prec_count(x: BitString | str, order: Order | str = Order.LEX) -> int:
    """How many strings precede ``x`` in its weight class under ``order``."""
    order = Order(order)
    if order is Order.LEX:
        return lex_rank(x)
    return revlex_rank(x)


def enumerate_class(n: int, i: int, order: Order | str = Order.LEX) -> list[BitString]:
    """All n-bit strings of weight i, in the given order (test oracle scale only)."""
    if n > MAX_ENUM_BITS:
        raise ValueError(f"enumeration limited to n <= {MAX_ENUM_BITS}")
    out = [BitString(n, v) for v in range(1 << n) if v.bit_count() == i] if n <= 20 else _gosper(n, i)
    if Order(order) is Order.REVLEX:
        out.reverse()
    return out


def _gosper(n: int, i: int) -> list[BitString]:
    if i == 0:
        return [BitString(n, 0)]
    out = []
    v = (1 << i) - 1
    limit = 1 << n
    while v < limit:
        out.append(BitString(n, v))
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
    return out


def binomial_matrix(n: int) -> np.ndarray:
    """C(a, b) for 0 <= a, b <= n as int64; n <= 62 keeps every entry exact."""
    if n > 62:
        raise ValueError("int64 binomial matrix limited to n <= 62")
    m = np.zeros((n + 1, n + 2), dtype=np.int64)
    for a in range(n + 1):
        m[a, : a + 1] = TABLE.row(a)
    return m


def lex_rank_array(n: int, values: np.ndarray) -> np.ndarray:
    """Vectorised :func:`lex_rank` over an array of n-bit integers."""
    values = np.asarray(values, dtype=np.uint64)
    c = binomial_matrix(n)
    k = np.bitwise_count(values).astype(np.int64)
    rank = np.zeros(values.shape, dtype=np.int64)
    for rem in range(n - 1, -1, -1):
        bit = ((values >> np.uint64(rem)) & np.uint64(1)).astype(bool)
        rank[bit] += c[rem, k[bit]]
        k -= bit
    return rank
