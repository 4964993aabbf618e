from fractions import Fraction

import pytest

from roughgraph import partition, sample_table, target_set

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def table1():
    return sample_table("table1")


@pytest.fixture(scope="session")
def table3():
    return sample_table("table3")


@pytest.fixture(scope="session")
def table1_partition(table1):
    return partition(table1)


@pytest.fixture(scope="session")
def diabetic(table1):
    return target_set(table1, decision_value="H")


@pytest.fixture
def half():
    return Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
