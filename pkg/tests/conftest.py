import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from labelsearch import all_connected_graphs

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def corpus4():
    return all_connected_graphs(4)


@pytest.fixture(scope="session")
def corpus5():
    return all_connected_graphs(5)


@pytest.fixture
def acceptance_record():
    """Recorder printing one summary line per acceptance criterion."""

    def record(criterion: str, ok: bool, detail: str = ""):
        line = f"[acceptance] {criterion}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        _acceptance_lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
