import random

import pytest

from spacegraph._backend import available_backends
from spacegraph.graph import from_edges

BACKENDS = sorted(available_backends())


@pytest.fixture(params=BACKENDS, scope="module")
def backend(request):
    """(name, kernels module, FindAnySet class) for each importable backend."""
    kernels, findany = available_backends()[request.param]
    return request.param, kernels, findany


def random_graph(rng, n, m, directed=False, weighted=False):
    """Simple graph with up to ``m`` edges; adjacency order is insertion order."""
    seen = set()
    edges = []
    if n < 2:
        return from_edges(n, [], directed=directed, weighted=weighted)
    for _ in range(4 * m):
        if len(edges) == m:
            break
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append((u, v))
    if weighted:
        edges = [(u, v, rng.randrange(1, 50)) for u, v in edges]
    return from_edges(n, edges, directed=directed, weighted=weighted)


def connected_graph(rng, n, extra, weighted=False):
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    seen = {(min(u, v), max(u, v)) for u, v in edges}
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and (min(u, v), max(u, v)) not in seen:
            seen.add((min(u, v), max(u, v)))
            edges.append((u, v))
    rng.shuffle(edges)
    if weighted:
        edges = [(u, v, rng.randrange(0, 30)) for u, v in edges]
    return from_edges(n, edges, weighted=weighted)


@pytest.fixture
def rng():
    return random.Random(12345)


# -- acceptance reporting ---------------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")
    config.addinivalue_line("markers", "slow: long-running test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    num, title = mark.args
    notes = "; ".join(f"{k}={v}" for k, v in item.user_properties)
    _CRITERIA[num] = (title, rep.outcome, notes)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, outcome, notes = _CRITERIA[num]
        tag = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        tr.write_line(f"[{tag}] criterion {num:>2}: {title}" + (f"  ({notes})" if notes else ""))
