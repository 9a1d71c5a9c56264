import pytest

from mockfourier import pair

ACCEPTANCE_LINES = []


def record(criterion: str, ok: bool, detail: str) -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def jp1():
    return pair(4, [0, 2], [0, 1])


@pytest.fixture(scope="session")
def jp3():
    return pair(4, [0, 2], [0, 3])


@pytest.fixture(scope="session")
def jp15():
    return pair(4, [0, 2], [0, 15])


@pytest.fixture(scope="session")
def jp17():
    return pair(4, [0, 2], [0, 17])


@pytest.fixture(scope="session")
def ex38():
    return pair(3, [0, 1, 2], [0, 1, 5])


@pytest.fixture(scope="session")
def classical2():
    return pair(2, [0, 1], [0, 1])


@pytest.fixture(scope="session")
def classical3():
    return pair(3, [0, 1, 2], [0, 1, 2])
