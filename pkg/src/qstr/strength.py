"""Strength of a vertex labeling: the largest label sum over any edge.

Two routes for the canonical hypercube labeling f:

* ``strf_hypercube_edges`` scans every edge of Q_n;
* ``strf_hypercube_scan`` only looks at the pairs {w1, w0}, which is enough
  because some maximising edge always has that shape.

Both work on chunks of integer-encoded vertices with numpy and reduce
deterministically (maximum value, then the smallest witness).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bits import TABLE, BitString, Order, as_bitstring, prec_count, succ_count
from .labeling import label_of, labels_of_array

MAX_EDGE_N = 24
MAX_SCAN_N = 34
CHUNK_BITS = 20


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    # vertex permutations known to be automorphisms (for the exact solver)
    automorphisms: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)
    vertex_names: tuple[str, ...] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def vertex_name(self, u: int) -> str:
        return self.vertex_names[u] if self.vertex_names else str(u)


@dataclass(frozen=True)
class StrengthResult:
    value: int
    witness: tuple[str, str]
    method: str
    n: int | None = None
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "value": str(self.value),
            "witness": list(self.witness),
            "method": self.method,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _threads() -> int:
    raw = os.environ.get("QSTR_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    return k if k > 0 else (os.cpu_count() or 1)


def strength_of_labeling(g: Graph, labels: Sequence[int]) -> StrengthResult:
    """Exact max of labels[u] + labels[v] over the edges of ``g``.

    ``labels`` is indexed by vertex and must be a bijection onto 1..N. Ties
    go to the edge listed first.
    """
    if len(labels) != g.vertex_count or sorted(labels) != list(range(1, g.vertex_count + 1)):
        raise ValueError("labels must be a bijection onto 1..N")
    if not g.edges:
        raise ValueError("graph has no edges")
    best, best_edge = -1, g.edges[0]
    for u, v in g.edges:
        s = labels[u] + labels[v]
        if s > best:
            best, best_edge = s, (u, v)
    u, v = best_edge
    return StrengthResult(best, (g.vertex_name(u), g.vertex_name(v)), "edge_scan", None)


def _chunks(total: int) -> list[tuple[int, int]]:
    step = 1 << CHUNK_BITS
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_chunks(fn, chunks: list[tuple[int, int]]) -> list:
    threads = min(_threads(), len(chunks))
    if threads <= 1:
        return [fn(lo, hi) for lo, hi in chunks]
    with ThreadPoolExecutor(threads) as pool:
        return list(pool.map(lambda c: fn(*c), chunks))


def _reduce(parts: Iterable[tuple[int, tuple[int, int]]]) -> tuple[int, tuple[int, int]]:
    # parts arrive in chunk order; keep the first chunk reaching the maximum
    best_val, best_key = -1, (0, 0)
    for val, key in parts:
        if val > best_val or (val == best_val and key < best_key):
            best_val, best_key = val, key
    return best_val, best_key


def _odd_first(n: int, a: int, b: int) -> tuple[str, str]:
    x, y = BitString(n, a), BitString(n, b)
    if x.weight % 2 == 0:
        x, y = y, x
    return str(x), str(y)


def strf_hypercube_edges(n: int) -> StrengthResult:
    """str_f(Q_n) by brute force over all n * 2^(n-1) edges.

    The witness is reported odd-weight endpoint first and is the
    lexicographically smallest such (x, y) pair among the maximising edges.
    """
    if not 1 <= n <= MAX_EDGE_N:
        raise ValueError(f"edge scan limited to 1 <= n <= {MAX_EDGE_N}; use the pair scan")
    t0 = time.perf_counter()
    labels = labels_of_array(n, np.arange(1 << n, dtype=np.uint64))
    verts = np.arange(1 << n, dtype=np.int64)
    parity = np.bitwise_count(verts.astype(np.uint64)) & 1

    def chunk(lo: int, hi: int):
        v = verts[lo:hi]
        best_val, best_key = -1, (0, 0)
        for d in range(n):
            mask = (v >> d) & 1 == 0
            a = v[mask]
            b = a | (1 << d)
            s = labels[a] + labels[b]
            m = int(s.max(initial=-1))
            if m < best_val or m < 0:
                continue
            hit = s == m
            odd_a = parity[a[hit]] == 1
            xs = np.where(odd_a, a[hit], b[hit])
            ys = np.where(odd_a, b[hit], a[hit])
            j = np.lexsort((ys, xs))[0]
            key = (int(xs[j]), int(ys[j]))
            if m > best_val or key < best_key:
                best_val, best_key = m, key
        return best_val, best_key

    val, (x, y) = _reduce(_run_chunks(chunk, _chunks(1 << n)))
    elapsed = (time.perf_counter() - t0) * 1000
    return StrengthResult(val, _odd_first(n, x, y), "edge_scan", n, elapsed)


def _pair_sums(n: int, lo: int, hi: int) -> np.ndarray:
    w = np.arange(lo, hi, dtype=np.uint64)
    w1 = (w << np.uint64(1)) | np.uint64(1)
    w0 = w << np.uint64(1)
    return labels_of_array(n, w1) + labels_of_array(n, w0)


def strf_hypercube_scan(n: int) -> StrengthResult:
    """str_f(Q_n) as the max over all (n-1)-bit w of f(w1) + f(w0).

    Ties resolve to the lexicographically smallest w.
    """
    if not 1 <= n <= MAX_SCAN_N:
        raise ValueError(f"pair scan limited to 1 <= n <= {MAX_SCAN_N}")
    t0 = time.perf_counter()
    if n == 1:
        val = label_of(1, "1") + label_of(1, "0")
        return StrengthResult(val, ("1", "0"), "pair_scan", n, (time.perf_counter() - t0) * 1000)

    def chunk(lo: int, hi: int):
        s = _pair_sums(n, lo, hi)
        j = int(np.argmax(s))  # first occurrence, so smallest w in the chunk
        return int(s[j]), (lo + j, 0)

    val, (w, _) = _reduce(_run_chunks(chunk, _chunks(1 << (n - 1))))
    elapsed = (time.perf_counter() - t0) * 1000
    x, y = _odd_first(n, 2 * w + 1, 2 * w)
    return StrengthResult(val, (x, y), "pair_scan", n, elapsed)


def weight_class_maxima(n: int) -> dict[int, tuple[int, str]]:
    """Per odd weight i of w1: the max of f(w1) + f(w0) and the smallest w reaching it."""
    if not 2 <= n <= MAX_SCAN_N:
        raise ValueError(f"pair scan limited to 2 <= n <= {MAX_SCAN_N}")
    best: dict[int, tuple[int, int]] = {}
    for lo, hi in _chunks(1 << (n - 1)):
        s = _pair_sums(n, lo, hi)
        wt = np.bitwise_count(np.arange(lo, hi, dtype=np.uint64)).astype(np.int64) + 1
        for i in range(1, n + 1, 2):
            sel = np.flatnonzero(wt == i)
            if sel.size == 0:
                continue
            j = sel[int(np.argmax(s[sel]))]
            cand = (int(s[j]), lo + int(j))
            if i not in best or cand[0] > best[i][0]:
                best[i] = cand
    return {i: (v, str(BitString(n - 1, w))) for i, (v, w) in sorted(best.items())}


def pair_sum(n: int, w: BitString | str) -> int:
    """f(w1) + f(w0) from succ/prec counts, for w1 of odd weight i.

    2^n + C(n-1, i) - |Succ(w1, R_n^i)| + |Prec(w0, S_n^(i-1))| + 1
    """
    w = as_bitstring(w)
    if w.length != n - 1:
        raise ValueError(f"w must have {n - 1} bits")
    i = w.weight + 1
    if i % 2 == 0:
        raise ValueError(f"w1 has even weight {i}; the formula needs odd weight")
    w1, w0 = w + "1", w + "0"
    return (1 << n) + TABLE(n - 1, i) - succ_count(w1, Order.REVLEX) + prec_count(w0, Order.LEX) + 1
