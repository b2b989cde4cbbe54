import pytest

from rkmcipher.matrix import generate_matrix, rotation_fixture_matrix

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def rot():
    return rotation_fixture_matrix()


@pytest.fixture(scope="session")
def matrix42():
    return generate_matrix(42)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
