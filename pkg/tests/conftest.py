"""Shared helpers for the test suite."""

from totalprime import verify_total_prime


def assert_total_prime(graph, labeling, context=""):
    report = verify_total_prime(graph, labeling)
    assert report.valid, f"{context}: {report.violations[:5]}"
    return report
