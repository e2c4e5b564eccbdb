import pytest
from hypothesis import settings

from coarsekit import surface
from coarsekit.suite import instances

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def suite():
    return instances()


@pytest.fixture(scope="session")
def inv6():
    return surface.build_inventory(6)


@pytest.fixture(scope="session")
def inv8():
    return surface.build_inventory(8)


@pytest.fixture(scope="session")
def timed_inv8():
    """The length-8 inventory and the seconds it took to build."""
    import time

    t = time.perf_counter()
    inv = surface.build_inventory(8)
    return inv, time.perf_counter() - t


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        num = int(name.split("_")[2])
        verdict = "PASS" if _CRITERIA[name] == "PASSED" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {name}")
