import time

import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the H4 cases")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: H4-sized runs, enabled with --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_LINES = pytest.StashKey[list]()


class _Criterion:
    def __init__(self, config, number, title, budget):
        self.config, self.number, self.title, self.budget = config, number, title, budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        secs = time.perf_counter() - self.t0
        over = secs > self.budget
        ok = exc_type is None and not over
        note = f"{secs:.2f}s of {self.budget:g}s"
        if exc_type is not None:
            note += f"; {exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        line = f"criterion {self.number:>2} {'PASS' if ok else 'FAIL'}  {self.title}  ({note})"
        self.config.stash.setdefault(_LINES, []).append(line)
        print(line)
        if exc_type is None and over:
            raise AssertionError(f"over time budget: {note}")
        return False


@pytest.fixture
def criterion(request):
    def make(number, title, budget):
        return _Criterion(request.config, number, title, budget)
    return make


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
