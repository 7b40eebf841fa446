import pytest

from qstr import verify
from qstr.verify import SUITES, run_suites


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_at_small_n(name):
    results = SUITES[name](8)
    assert results
    failed = [c for c in results if not c.passed]
    assert not failed, failed


def test_run_all_expands():
    names = {c.suite for c in run_suites(["all"], 6)}
    assert names == set(SUITES)


def test_failure_reports_counterexample(monkeypatch):
    real = verify.label_of

    def broken(n, x):
        v = real(n, x)
        return v + 1 if str(x) == "10000" else v

    monkeypatch.setattr(verify, "label_of", broken)
    results = verify.suite_complement(5)
    bad = [c for c in results if not c.passed]
    assert bad and "10000" in bad[0].detail


def test_lemma23_samples_randomly_when_large():
    (check,) = [c for c in verify.suite_lemma23(16, samples=500) if c.name.endswith("n=16")]
    assert check.passed and check.detail == "500 random w"
