"""Property-suite runner: coverage, determinism, report format."""

import pytest

from mnseries import format_report, run_all, run_suite, suite_names


def test_every_registered_suite_passes_briefly():
    for name in suite_names():
        result = run_suite(name, 20, 0)
        assert result.passed, f"{name}: {result.failures[:3]}"


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 1, 0)


def test_same_seed_same_report():
    a = format_report(run_all(30, 1))
    b = format_report(run_all(30, 1))
    assert a == b


def test_report_shape():
    text = format_report(run_all(10, 0))
    lines = text.strip().splitlines()
    assert lines[-1].startswith("total suites=")
    assert all(line.startswith(("suite=", " ", "total")) for line in lines)


def test_suite_names_cover_invariant_families():
    names = set(suite_names())
    expected = {
        "base-valuations",
        "multiplicativity",
        "triangle",
        "submultiplicativity",
        "support",
        "canonicalization",
        "concavity",
        "localization",
        "witnesses",
        "commutation",
        "hull-stability",
        "legendre-monotonicity",
        "legendre-translate",
        "minkowski",
        "npf-diagram",
        "profile-roundtrip",
        "deviation",
        "classifier",
        "chain",
        "ideal",
        "supremum",
        "roundtrip",
    }
    assert expected <= names
