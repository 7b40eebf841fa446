"""The canonical hypercube labeling built from the sequence S_n.

S_n lists the odd-weight classes in ascending weight, each in reverse
lexicographic order, followed by the even-weight classes in descending weight,
each in lexicographic order. A string's label is its 1-based position.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bits import (
    TABLE,
    BitString,
    Order,
    as_bitstring,
    binomial_matrix,
    enumerate_class,
    lex_rank,
    lex_unrank,
)

MAX_SEQUENCE_N = 24
MAX_ARRAY_N = 62


@lru_cache(maxsize=256)
def _layout(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-weight label offsets and the weight classes in sequence order."""
    order = tuple(range(1, n + 1, 2)) + tuple(range(n - n % 2, -1, -2))
    offsets = [0] * (n + 1)
    pos = 0
    for i in order:
        offsets[i] = pos
        pos += TABLE(n, i)
    return tuple(offsets), order


def sequence_classes(n: int) -> list[tuple[int, Order]]:
    """The weight classes of S_n in order, each tagged with its internal order."""
    _, order = _layout(n)
    return [(i, Order.REVLEX if i % 2 else Order.LEX) for i in order]


def label_of(n: int, x: BitString | str) -> int:
    x = as_bitstring(x)
    if x.length != n:
        raise ValueError(f"expected a {n}-bit string, got {x.length} bits")
    i = x.value.bit_count()
    offsets, _ = _layout(n)
    r = lex_rank(x)
    if i % 2:
        r = TABLE(n, i) - 1 - r
    return offsets[i] + r + 1


def string_of(n: int, v: int) -> BitString:
    if not 1 <= v <= 1 << n:
        raise ValueError(f"label {v} out of range 1..{1 << n}")
    offsets, order = _layout(n)
    for i in order:
        size = TABLE(n, i)
        if v <= offsets[i] + size:
            pos = v - offsets[i] - 1
            return lex_unrank(n, i, size - 1 - pos if i % 2 else pos)
    raise AssertionError("unreachable: classes cover 1..2^n")


def enumerate_sequence(n: int) -> list[BitString]:
    """S_n built straight from its definition; the brute-force oracle for label_of."""
    if n > MAX_SEQUENCE_N:
        raise ValueError(f"enumerate_sequence is limited to n <= {MAX_SEQUENCE_N}")
    out: list[BitString] = []
    for i, order in sequence_classes(n):
        out.extend(enumerate_class(n, i, order))
    return out


@lru_cache(maxsize=64)
def _array_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    offsets, _ = _layout(n)
    c = binomial_matrix(n)
    sizes = c[n, : n + 1]
    odd = np.arange(n + 1) % 2 == 1
    # label = base[i] + sign[i] * lex_rank, folding the revlex flip into base
    base = np.asarray(offsets, dtype=np.int64) + 1 + np.where(odd, sizes - 1, 0)
    sign = np.where(odd, -1, 1).astype(np.int64)
    return c, base, sign


def labels_of_array(n: int, values: np.ndarray) -> np.ndarray:
    """Vectorised label_of over an array of n-bit integers (n <= 62)."""
    if not 1 <= n <= MAX_ARRAY_N:
        raise ValueError(f"array labeling limited to 1 <= n <= {MAX_ARRAY_N}")
    values = np.asarray(values, dtype=np.uint64)
    c, base, sign = _array_tables(n)
    k = np.bitwise_count(values).astype(np.intp)
    w = k.copy()
    rank = np.zeros(values.shape, dtype=np.int64)
    one = np.uint64(1)
    for rem in range(n - 1, -1, -1):
        bit = ((values >> np.uint64(rem)) & one).astype(np.intp)
        rank += c[rem].take(k) * bit
        k -= bit
    return base.take(w) + sign.take(w) * rank


@dataclass(frozen=True)
class Labeling:
    """A bijection from the vertices of Q_n (as ints) onto 1..2^n."""

    n: int
    labels: tuple[int, ...] = field(repr=False)
    description: str = "S_n"

    def __post_init__(self):
        if sorted(self.labels) != list(range(1, (1 << self.n) + 1)):
            raise ValueError("labels must be a bijection onto 1..2^n")

    def __call__(self, x: BitString | str | int) -> int:
        if isinstance(x, int):
            return self.labels[x]
        x = as_bitstring(x)
        if x.length != self.n:
            raise ValueError(f"expected a {self.n}-bit string")
        return self.labels[x.value]


def canonical_labeling(n: int) -> Labeling:
    if n > MAX_SEQUENCE_N:
        raise ValueError(f"materialised labelings limited to n <= {MAX_SEQUENCE_N}")
    labels = labels_of_array(n, np.arange(1 << n, dtype=np.uint64))
    return Labeling(n, tuple(int(v) for v in labels), "S_n")


def random_labeling(n: int, seed: int | None = None) -> Labeling:
    """Uniform random bijection; a baseline for comparisons, not a construction."""
    labels = list(range(1, (1 << n) + 1))
    random.Random(seed).shuffle(labels)
    return Labeling(n, tuple(labels), f"random(seed={seed})")
