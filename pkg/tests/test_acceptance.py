"""Exit criteria for the package; each test prints one PASS/FAIL summary line."""

import time
from pathlib import Path

import numpy as np

from qstr import bounds, verify
from qstr.cli import main
from qstr.solver import SolveBudget, build_graph, min_strength
from qstr.strength import strf_hypercube_edges, strf_hypercube_scan
from qstr.labeling import labels_of_array

FIXTURES = Path(__file__).parent / "fixtures"


def _failures(checks):
    return [c for c in checks if not c.passed]


def test_c1_label_tables(criterion, capsys):
    t0 = time.perf_counter()
    rows = 0
    for n in (3, 4, 5, 6):
        assert main(["label", "--n", str(n), "--table", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out == (FIXTURES / f"table1_n{n}.csv").read_text()
        rows += len(out.splitlines()) - 1
    elapsed = time.perf_counter() - t0
    criterion.detail = f"{rows} rows bit-exact in {elapsed:.3f}s"
    assert rows == 120
    assert elapsed < 1.0


def test_c2_labeling_strength(criterion):
    t0 = time.perf_counter()
    for n, v in ((3, 11), (4, 21), (5, 40)):
        assert strf_hypercube_edges(n).value == v
        assert strf_hypercube_scan(n).value == v
    for n in range(2, 15):
        assert strf_hypercube_edges(n).value == strf_hypercube_scan(n).value, n
    elapsed = time.perf_counter() - t0
    criterion.detail = f"11/21/40 and agreement for 2<=n<=14 in {elapsed:.2f}s"
    assert elapsed < 60


def test_c3_recurrence_consistency(criterion):
    t0 = time.perf_counter()
    pairs = [(strf_hypercube_scan(n).value, bounds.upper_bound_recurrence(n)) for n in range(5, 15)]
    elapsed = time.perf_counter() - t0
    criterion.detail = f"str_f vs recurrence n=5..14: {pairs[-1][0]} <= {pairs[-1][1]} at n=14, {elapsed:.2f}s"
    assert all(a <= b for a, b in pairs)
    assert elapsed < 60


def test_c4_table2(criterion):
    t0 = time.perf_counter()
    got = [(r.upper_prior, r.upper_recurrence) for r in bounds.comparison_table(5, 13)]
    elapsed = time.perf_counter() - t0
    criterion.detail = f"9 rows in {elapsed * 1000:.1f}ms"
    assert got == [(41, 40), (81, 78), (161, 152), (321, 300), (641, 591),
                   (1281, 1173), (2561, 2323), (5121, 4623), (10241, 9181)]
    assert elapsed < 1.0


def test_c5_closed_form(criterion):
    t0 = time.perf_counter()
    for n in range(14, 65):
        assert bounds.upper_bound_closed(n) == 2**n + 2 ** (n - 3) + 28
        assert bounds.upper_bound_prior(n) - bounds.upper_bound_closed(n) == 2 ** (n - 3) - 27
    elapsed = time.perf_counter() - t0
    criterion.detail = f"14<=n<=64 exact in {elapsed * 1000:.1f}ms"
    assert elapsed < 1.0


def test_c6_exact_solver(criterion):
    t0 = time.perf_counter()
    for n, v in ((1, 3), (2, 6), (3, 11)):
        out = min_strength(build_graph("hypercube", n), SolveBudget(10))
        assert (out.status, out.best_value) == ("optimal", v)
    small = time.perf_counter() - t0
    assert small < 10
    t1 = time.perf_counter()
    out = min_strength(build_graph("hypercube", 4), SolveBudget(600))
    q4 = time.perf_counter() - t1
    criterion.detail = f"Q1..Q3 in {small:.3f}s; Q4 {out.status} {out.best_value} in {q4:.3f}s"
    assert (out.status, out.best_value) == ("optimal", 21)


def test_c7_property_suites(criterion, capsys):
    t0 = time.perf_counter()
    checks = []
    checks += verify.suite_bijection(n_max=14, bijective_to=14)
    checks += verify.suite_complement(13)
    checks += verify.suite_witness(12)
    checks += verify.suite_lemma23(16, samples=10_000, seed=0)
    checks += verify.suite_succprec(12)
    checks += verify.suite_reversal(12)
    checks += verify.suite_binomial(N_max=40, k_max=200)
    bad = _failures(checks)
    assert main(["verify", "--suite", "all", "--n-max", "12", "--format", "csv"]) == 0
    gate = capsys.readouterr().out.count("\n") - 1
    elapsed = time.perf_counter() - t0
    criterion.detail = f"{len(checks)} checks + {gate}-check verify gate, {len(bad)} failed, {elapsed:.1f}s"
    assert not bad, bad[:3]
    assert elapsed < 300


def test_c8_performance(criterion):
    rng = np.random.default_rng(0)
    xs = rng.integers(0, 2**30, 2_000_000, dtype=np.uint64)
    labels_of_array(30, xs[:1000])
    t0 = time.perf_counter()
    labels_of_array(30, xs)
    rate = len(xs) / (time.perf_counter() - t0)
    t1 = time.perf_counter()
    res = strf_hypercube_scan(24)
    scan = time.perf_counter() - t1
    criterion.detail = f"{rate / 1e6:.2f}M labels/s at n=30; scan(24)={res.value} in {scan:.1f}s"
    assert rate >= 1e6
    assert scan < 120
