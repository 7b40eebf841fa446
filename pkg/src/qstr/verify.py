"""Invariant suites over the labeling, its strength and the bounds.

Every suite returns a list of :class:`Check`; a failed check carries the first
counterexample found. ``run_suites`` is what ``qstr verify`` calls.
"""

from __future__ import annotations

import math
import random
from typing import Callable, NamedTuple

import numpy as np

from . import bounds
from .bits import (
    TABLE,
    BitString,
    Order,
    binomial,
    complement,
    enumerate_class,
    lex_rank,
    lex_unrank,
    prec_count,
    revlex_rank,
    succ_count,
)
from .labeling import enumerate_sequence, label_of, labels_of_array, string_of
from .strength import pair_sum, strf_hypercube_edges, strf_hypercube_scan


class Check(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _all(n: int):
    return (BitString(n, v) for v in range(1 << n))


def _first_failure(items, predicate: Callable, show: Callable = str) -> str:
    for item in items:
        if not predicate(item):
            return show(item)
    return ""


def _check(suite: str, name: str, counterexample: str, ok_detail: str = "") -> Check:
    if counterexample:
        return Check(suite, name, False, f"counterexample: {counterexample}")
    return Check(suite, name, True, ok_detail)


def suite_bijection(n_max: int = 14, bijective_to: int = 16) -> list[Check]:
    out = []
    for n in range(1, max(n_max, bijective_to) + 1):
        labels = [label_of(n, x) for x in _all(n)]
        ok = sorted(labels) == list(range(1, (1 << n) + 1))
        out.append(Check("bijection", f"bijective n={n}", ok, "" if ok else "labels not a permutation"))
        half = 1 << (n - 1)
        bad = _first_failure(range(1 << n), lambda v: (labels[v] <= half) == (v.bit_count() % 2 == 1),
                             lambda v: str(BitString(n, v)))
        out.append(_check("bijection", f"parity split n={n}", bad))
        if n <= n_max:
            seq = enumerate_sequence(n)
            bad = _first_failure(enumerate(seq), lambda p: label_of(n, p[1]) == p[0] + 1, lambda p: str(p[1]))
            out.append(_check("bijection", f"matches S_n enumeration n={n}", bad))
            bad = _first_failure(enumerate(seq), lambda p: string_of(n, p[0] + 1) == p[1], lambda p: str(p[0] + 1))
            out.append(_check("bijection", f"string_of inverts n={n}", bad))
            arr = labels_of_array(n, np.arange(1 << n, dtype=np.uint64))
            ok = arr.tolist() == labels
            out.append(Check("bijection", f"batch path agrees n={n}", ok))
        top = label_of(n, BitString(n, (1 << n) - 1))
        expect = sum(TABLE(n, j) for j in range(1, n + 1, 2)) if n % 2 else half + 1
        out.append(Check("bijection", f"all-ones boundary n={n}", top == expect, f"f(1^n)={top}"))
    return out


def suite_complement(n_max: int = 13) -> list[Check]:
    out = []
    for n in range(1, n_max + 1, 2):
        shift = 1 << (n - 1)
        bad = _first_failure(
            (x for x in _all(n) if x.weight % 2),
            lambda x: label_of(n, x) + shift == label_of(n, complement(x)),
        )
        out.append(_check("complement", f"f(x) + 2^(n-1) = f(~x), n={n}", bad))
    return out


def _max_edges(n: int) -> tuple[int, list[tuple[int, int]]]:
    labels = labels_of_array(n, np.arange(1 << n, dtype=np.uint64))
    verts = np.arange(1 << n, dtype=np.int64)
    best, edges = -1, []
    for d in range(n):
        a = verts[(verts >> d) & 1 == 0]
        b = a | (1 << d)
        s = labels[a] + labels[b]
        m = int(s.max())
        if m > best:
            best, edges = m, []
        if m == best:
            edges.extend(zip(a[s == m].tolist(), b[s == m].tolist()))
    return best, edges


def suite_witness(n_max: int = 12) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        _, edges = _max_edges(n)
        ends = any(b - a == 1 and a % 2 == 0 for a, b in edges)
        out.append(Check("witness", f"some max edge is {{w1, w0}}, n={n}", ends, f"{len(edges)} max edges"))

        def oriented(e):
            x, y = e if e[0].bit_count() % 2 else (e[1], e[0])
            return y.bit_count() == x.bit_count() - 1

        bad = _first_failure(edges, oriented, lambda e: f"{BitString(n, e[0])}-{BitString(n, e[1])}")
        out.append(_check("witness", f"max edges drop weight odd -> even, n={n}", bad))
    return out


def suite_lemma23(n_max: int = 16, samples: int = 10_000, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = []
    for n in range(2, n_max + 1):
        pool = 1 << (n - 1)
        exhaustive = pool // 2 <= samples
        if exhaustive:
            ws = [BitString(n - 1, v) for v in range(pool) if v.bit_count() % 2 == 0]
        else:
            ws = []
            while len(ws) < samples:
                v = rng.randrange(pool)
                if v.bit_count() % 2 == 0:
                    ws.append(BitString(n - 1, v))
        bad = _first_failure(ws, lambda w: pair_sum(n, w) == label_of(n, w + "1") + label_of(n, w + "0"))
        how = "all" if exhaustive else "random"
        out.append(_check("lemma23", f"pair_sum = f(w1) + f(w0), n={n}", bad, f"{len(ws)} {how} w"))
    return out


def suite_succprec(n_max: int = 12) -> list[Check]:
    """Prefix decompositions of Succ/Prec and the prefix-case difference identities."""
    out = []
    C = binomial
    R, S = Order.REVLEX, Order.LEX

    for n in range(2, n_max + 1):
        tails = list(_all(n - 1))
        odd_w1 = [z for z in tails if z.value & 1 and z.weight % 2]
        bad = _first_failure(odd_w1, lambda z: succ_count("0" + z, R) == succ_count(z, R))
        out.append(_check("succprec", f"Succ(0w1) = Succ(w1), n={n}", bad))
        w0s = [z for z in tails if not z.value & 1]
        bad = _first_failure(w0s, lambda z: prec_count("0" + z, S) == prec_count(z, S))
        out.append(_check("succprec", f"Prec(0w0) = Prec(w0), n={n}", bad))

        bad = _first_failure(
            _all(n), lambda x: prec_count(x, S) + succ_count(x, S) + 1 == TABLE(n, x.weight)
            and prec_count(x, R) + succ_count(x, R) + 1 == TABLE(n, x.weight))
        out.append(_check("succprec", f"Prec + Succ + 1 = class size, n={n}", bad))

        bad = _first_failure(_all(n), lambda x: succ_count(x, R) == succ_count(complement(x), S)
                             and prec_count(x, S) == prec_count(complement(x), R))
        out.append(_check("succprec", f"Succ(x, R) = Succ(~x, S) and Prec(x, S) = Prec(~x, R), n={n}", bad))

        if n < 3:
            continue
        short = list(_all(n - 2))

        def eq9(z):
            i = z.weight + 2
            return succ_count("11" + z, R) == succ_count(z, R) + 2 * C(n - 2, i - 1) + C(n - 2, i)

        def eq10(z):
            i = z.weight + 3
            return prec_count("11" + z, S) == prec_count(z, S) + C(n - 2, i - 1) + 2 * C(n - 2, i - 2)

        def succ10(z):
            i = z.weight + 1
            return succ_count("10" + z, R) == succ_count(z, R) + C(n - 2, i - 1) + C(n - 2, i)

        def prec10(z):
            i = z.weight + 2
            return prec_count("10" + z, S) == prec_count(z, S) + C(n - 2, i - 2) + C(n - 2, i - 1)

        for label, fn in (("Succ(11z, R_n)", eq9), ("Prec(11z, S_n)", eq10),
                          ("Succ(10z, R_n)", succ10), ("Prec(10z, S_n)", prec10)):
            out.append(_check("succprec", f"{label} prefix decomposition, n={n}", _first_failure(short, fn)))

        # the complement-based forms used for strings starting with 10
        def succ10_via_prec(w):
            i = w.weight + 2
            wb = complement(w)
            return succ_count("10" + w + "1", R) == 2 * C(n - 2, i - 1) + C(n - 2, i) - 1 - prec_count(wb + "0", S)

        def prec10_via_succ(w):
            i = w.weight + 2
            wb = complement(w)
            return prec_count("10" + w + "0", S) == 2 * C(n - 2, i - 2) + C(n - 2, i - 1) - 1 - succ_count(wb + "1", R)

        if n >= 4:
            mids = list(_all(n - 3))
            out.append(_check("succprec", f"Succ(10w1) via Prec(~w0), n={n}", _first_failure(mids, succ10_via_prec)))
            out.append(_check("succprec", f"Prec(10w0) via Succ(~w1), n={n}", _first_failure(mids, prec10_via_succ)))

        out.extend(_prefix_case_identities(n))
    return out


def _pair(n: int, w: BitString) -> int:
    return label_of(n, w + "1") + label_of(n, w + "0")


def _prefix_case_identities(n: int) -> list[Check]:
    out = []
    C = binomial
    # both endpoints start with 0
    ws = [w for w in _all(n - 2) if w.weight % 2 == 0]

    def zero(w):
        i = w.weight + 1
        return _pair(n, "0" + w) - _pair(n - 1, w) == 2 ** (n - 1) + C(n - 2, i - 1)

    out.append(_check("succprec", f"0-prefix pair difference, n={n}", _first_failure(ws, zero)))

    if n % 2:
        ws = [w for w in _all(n - 2) if w.weight % 2]

        def one_odd(w):
            wb = complement(w)
            half = 2 ** (n - 1)
            return (label_of(n, "1" + w + "1") + half == label_of(n, "0" + wb + "0")
                    and label_of(n, "0" + wb + "1") + half == label_of(n, "1" + w + "0"))

        out.append(_check("succprec", f"1-prefix pairs map to 0-prefix pairs, odd n={n}", _first_failure(ws, one_odd)))

    if n >= 4:
        ws = [w for w in _all(n - 3) if w.weight % 2 == 0]

        def eleven(w):
            i = w.weight + 3
            return _pair(n, "11" + w) - _pair(n - 2, w) == 3 * 2 ** (n - 2) + C(n - 3, i - 3) + C(n - 2, i - 2)

        out.append(_check("succprec", f"11-prefix pair difference, n={n}", _first_failure(ws, eleven)))

    if n >= 4 and n % 2 == 0:
        ws = [w for w in _all(n - 3) if w.weight % 2]

        def ten(w):
            i = w.weight + 2
            diff = _pair(n, "10" + w) - _pair(n - 2, complement(w))
            return diff == 3 * 2 ** (n - 2) + C(n - 2, i - 2) + C(n - 3, i - 2)

        out.append(_check("succprec", f"10-prefix pair difference, even n={n}", _first_failure(ws, ten)))
    return out


def suite_reversal(n_max: int = 12) -> list[Check]:
    out = []
    for m in range(2, n_max + 1, 2):
        for j in range(m + 1):
            if 2 * j == m:
                continue
            S_j = enumerate_class(m, j, Order.LEX)
            comp = [complement(v) for v in S_j]
            ok = (
                enumerate_class(m, m - j, Order.LEX) == comp[::-1]
                and enumerate_class(m, j, Order.REVLEX) == S_j[::-1]
                and enumerate_class(m, m - j, Order.REVLEX) == comp
            )
            out.append(Check("reversal", f"class sequences under complement, m={m}, j={j}", ok))
            bad = _first_failure(S_j, lambda x: lex_rank(x) == revlex_rank(complement(x)))
            out.append(_check("reversal", f"lex_rank(x) = revlex_rank(~x), m={m}, j={j}", bad))
    return out


def suite_binomial(N_max: int = 40, k_max: int = 200) -> list[Check]:
    out = []
    pascal = all(TABLE(a, b) == TABLE(a - 1, b - 1) + TABLE(a - 1, b) for a in range(2, N_max + 1) for b in range(1, a))
    out.append(Check("binomial", f"Pascal rule, N<={N_max}", pascal))
    sym = all(TABLE(a, b) == TABLE(a, a - b) for a in range(N_max + 1) for b in range(a + 1))
    out.append(Check("binomial", f"symmetry, N<={N_max}", sym))
    agree = all(TABLE(a, b) == math.comb(a, b) for a in range(N_max + 1) for b in range(a + 1))
    out.append(Check("binomial", f"table agrees with math.comb, N<={N_max}", agree))
    bad = _first_failure(
        ((N, l) for N in range(1, N_max + 1) for l in range(N + 1)),
        lambda p: bounds.alternating_sum(*p) == (-1) ** p[1] * binomial(p[0] - 1, p[1]),
    )
    out.append(_check("binomial", f"alternating sum identity, N<={N_max}", bad))
    checks = bounds.central_binomial_checks(k_max)
    bad = _first_failure(checks, lambda c: c.holds_7, lambda c: f"k={c.k}")
    out.append(_check("binomial", f"C(2k,k) < 4^k/sqrt(pi k), 1<=k<={k_max}", bad))
    bad = _first_failure((c for c in checks if c.k >= 6), lambda c: c.holds_8, lambda c: f"k={c.k}")
    out.append(_check("binomial", f"C(2k,k) < 4^(k-1), 6<=k<={k_max}", bad))
    bad = _first_failure(range(1, 2000), lambda r: _roundtrip_rank(r))
    out.append(_check("binomial", "rank/unrank round trip on sampled classes", bad))
    return out


def _roundtrip_rank(seed: int) -> bool:
    rng = random.Random(seed)
    n = rng.randint(1, 64)
    i = rng.randint(0, n)
    r = rng.randrange(TABLE(n, i))
    return lex_rank(lex_unrank(n, i, r)) == r


def suite_recurrence(n_max: int = 14, closed_to: int = 64) -> list[Check]:
    out = []
    strf = {n: strf_hypercube_scan(n).value for n in range(1, n_max + 1)}
    for n in range(2, n_max + 1):
        edge = strf_hypercube_edges(n).value if n <= 20 else strf[n]
        out.append(Check("recurrence", f"edge scan = pair scan, n={n}", edge == strf[n], f"str_f={strf[n]}"))
    for n in range(3, n_max + 1):
        bound = strf[n - 1] + 2 ** (n - 1) + binomial(n - 2, -(-(n - 2) // 2))
        out.append(Check("recurrence", f"one-step chain, n={n}", strf[n] <= bound, f"{strf[n]} <= {bound}"))
        out.append(Check("recurrence", f"lower bound <= str_f, n={n}", bounds.lower_bound(n) <= strf[n]))
        ub = bounds.upper_bound_recurrence(n)
        out.append(Check("recurrence", f"str_f <= unrolled recurrence, n={n}", strf[n] <= ub, f"{strf[n]} <= {ub}"))
    for n in range(5, n_max + 1):
        bound = strf[n - 2] + bounds.recurrence_step(n)
        out.append(Check("recurrence", f"two-step recurrence, n={n}", strf[n] <= bound, f"{strf[n]} <= {bound}"))
    table = [(r.upper_prior, r.upper_recurrence) for r in bounds.comparison_table(5, 13)]
    out.append(Check("recurrence", "comparison table n=5..13", table == TABLE_2, str(table)))
    bad = _first_failure(
        range(bounds.CLOSED_FORM_MIN_N, closed_to + 1),
        lambda n: bounds.upper_bound_recurrence(n) <= bounds.upper_bound_closed(n)
        and bounds.upper_bound_prior(n) - bounds.upper_bound_closed(n) == 2 ** (n - 3) - 27,
    )
    out.append(_check("recurrence", f"closed form dominates and improves, 14<=n<={closed_to}", bad))
    return out


TABLE_2 = [(41, 40), (81, 78), (161, 152), (321, 300), (641, 591), (1281, 1173), (2561, 2323), (5121, 4623), (10241, 9181)]

SUITES: dict[str, Callable[[int], list[Check]]] = {
    "bijection": lambda n: suite_bijection(n, max(n, 0)),
    "complement": suite_complement,
    "witness": suite_witness,
    "lemma23": suite_lemma23,
    "succprec": suite_succprec,
    "reversal": suite_reversal,
    "binomial": lambda n: suite_binomial(),
    "recurrence": suite_recurrence,
}


def run_suites(names: list[str], n_max: int) -> list[Check]:
    if "all" in names:
        names = list(SUITES)
    out: list[Check] = []
    for name in names:
        out.extend(SUITES[name](n_max))
    return out
