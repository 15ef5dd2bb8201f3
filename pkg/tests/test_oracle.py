import pytest

from torbif.errors import InputError
from torbif.oracle import (
    SUITE_NAMES,
    run_selftest,
    star_dimension_flipped,
    tensor_sign_flipped,
)


def test_all_suites_pass():
    report = run_selftest(seed=1, trials=100)
    failing = [name for name, res in report.suites if not res.ok]
    assert failing == [], [
        (name, report.suite(name).first_counterexample) for name in failing
    ]


def test_every_registered_suite_runs():
    report = run_selftest(seed=1, trials=5)
    assert tuple(name for name, _ in report.suites) == SUITE_NAMES


def test_deterministic_per_seed():
    assert run_selftest(seed=1, trials=40) == run_selftest(seed=1, trials=40)


def test_other_seed_still_passes():
    assert run_selftest(seed=2, trials=40).ok


def test_suite_filter():
    report = run_selftest(seed=1, trials=10, suites=["snf-decomposition"])
    assert len(report.suites) == 1 and report.ok


def test_unknown_suite_rejected():
    with pytest.raises(InputError):
        run_selftest(seed=1, trials=1, suites=["no-such-suite"])


def test_star_mutation_fails_named_suites():
    report = run_selftest(seed=1, trials=30, star_impl=star_dimension_flipped)
    failing = [name for name, res in report.suites if not res.ok]
    assert failing
    assert any(res.first_counterexample for _, res in report.suites if not res.ok)


def test_tensor_mutation_fails_named_suites():
    report = run_selftest(seed=1, trials=30, tensor_impl=tensor_sign_flipped)
    failing = [name for name, res in report.suites if not res.ok]
    assert failing
    # the dimension suite alone cannot see this mutant; the oracles must
    assert set(failing) & {"tensor-character", "tensor-weights"}
