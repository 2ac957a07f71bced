import pytest

from coxgrowth import build_ball, path_matrix, uniform_matrix

ACCEPTANCE_LINES = []

_CACHE = {}


def get_ball(matrix, depth):
    """Session-wide ball cache; balls are immutable so sharing is safe."""
    key = (matrix, depth)
    if key not in _CACHE:
        _CACHE[key] = build_ball(matrix, depth)
    return _CACHE[key]


@pytest.fixture(scope="session")
def ball_of():
    return get_ball


@pytest.fixture(scope="session")
def m344():
    return uniform_matrix(3, 4)


@pytest.fixture(scope="session")
def m4u3():
    return uniform_matrix(4, 3)


@pytest.fixture(scope="session")
def m4u4():
    return uniform_matrix(4, 4)


@pytest.fixture(scope="session")
def m333():
    return uniform_matrix(3, 3)


@pytest.fixture(scope="session")
def m5u3():
    return uniform_matrix(5, 3)


@pytest.fixture(scope="session")
def a3():
    return path_matrix([3, 3])


@pytest.fixture(scope="session")
def i24():
    return uniform_matrix(2, 4)


@pytest.fixture(scope="session")
def criterion():
    """Records one PASS/FAIL line per acceptance criterion."""

    def record(num: int, ok: bool, detail: str) -> None:
        line = f"CRITERION {num}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE_LINES.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
