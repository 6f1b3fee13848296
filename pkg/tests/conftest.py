import pytest

from fpgt import Transaction

# the seven-transaction case study stream
TABLE3 = ["A B C", "B C D", "A B C", "B C", "B D", "A B C D", "C D"]


@pytest.fixture
def table3_lines():
    return list(TABLE3)


@pytest.fixture
def table3():
    return [Transaction(i, line.split()) for i, line in enumerate(TABLE3, 1)]


@pytest.fixture
def table3_file(tmp_path):
    path = tmp_path / "table3.txt"
    path.write_text("\n".join(TABLE3) + "\n", encoding="utf-8")
    return path


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(n, (title, True))
    _criteria[n] = (title, prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
