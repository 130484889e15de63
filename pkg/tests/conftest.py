import pytest

from sysmlforge.wordnet import WordNetDB


@pytest.fixture(scope="session")
def db() -> WordNetDB:
    return WordNetDB()


def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    label = report.nodeid.split("::")[-1]
    label = label.removeprefix("test_").replace("_", " ")
    status = "PASS" if report.passed else "FAIL"
    print(f"\nACCEPTANCE {status}: {label}")
