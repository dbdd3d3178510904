import pytest
from hypothesis import strategies as st

from syt.core import Partition, Tableau


def pytest_addoption(parser):
    parser.addoption("--include-k5", action="store_true", default=False, help="run the sc_5 checks (minutes)")


def pytest_configure(config):
    config.addinivalue_line("markers", "k5: long sc_5 run, enabled with --include-k5")
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--include-k5"):
        return
    skip = pytest.mark.skip(reason="needs --include-k5")
    for item in items:
        if "k5" in item.keywords:
            item.add_marker(skip)


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = (marker.args[0], marker.args[1])
    if report.when == "call" or (report.when == "setup" and report.skipped):
        status = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        prev = _criteria.get(key, [])
        _criteria[key] = prev + [(item.name, status)]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, text), runs in sorted(_criteria.items()):
        for name, status in runs:
            terminalreporter.write_line(f"[{status}] criterion {num}: {text} ({name})")


@st.composite
def partitions(draw, min_cells=1, max_cells=9):
    n = draw(st.integers(min_cells, max_cells))
    parts = []
    remaining = n
    while remaining:
        p = draw(st.integers(1, min(remaining, parts[-1] if parts else remaining)))
        parts.append(p)
        remaining -= p
    return Partition(tuple(parts))


@st.composite
def standard_tableaux(draw, max_cells=9, shape=None):
    """Random SYT grown one entry at a time at a drawn addable corner."""
    if shape is None:
        shape = draw(partitions(max_cells=max_cells))
    rows = [[] for _ in shape.parts]
    for v in range(1, shape.n + 1):
        addable = [
            i for i, target in enumerate(shape.parts)
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i]))
        ]
        rows[draw(st.sampled_from(addable))].append(v)
    return Tableau(tuple(map(tuple, rows)))


@st.composite
def staircase_tableaux(draw, max_k=5):
    k = draw(st.integers(2, max_k))
    return draw(standard_tableaux(shape=Partition.staircase(k)))


@st.composite
def rectangular_tableaux(draw, max_side=4):
    c = draw(st.integers(1, max_side))
    r = draw(st.integers(1, max_side))
    return draw(standard_tableaux(shape=Partition.rectangle(c, r)))
