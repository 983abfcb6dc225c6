import sys

import pytest

import cohesion as pkg
from cohesion import metrics

# Every cohesion evaluated through the public functions during the run is
# recorded here; the bound criterion in test_acceptance audits the lot.
SCORED = []

_originals = {name: getattr(metrics, name) for name in ("cohesion", "weighted_cohesion")}


def _recording(fn):
    def wrapper(g, s):
        score = fn(g, s)
        SCORED.append((score.value, score.stats.inbound, score.size,
                       metrics.internal_edge_count(g, s)))
        return score

    wrapper.__wrapped__ = fn
    return wrapper


for _mod in [m for k, m in sys.modules.items() if k == "cohesion" or k.startswith("cohesion.")]:
    for _name, _fn in _originals.items():
        if getattr(_mod, _name, None) is _fn:
            setattr(_mod, _name, _recording(_fn))


@pytest.fixture(scope="session")
def scored_sets():
    return SCORED


def pytest_collection_modifyitems(config, items):
    # acceptance runs last so it can audit everything scored before it
    items.sort(key=lambda it: it.path.name == "test_acceptance.py")


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and report.fspath.endswith("test_acceptance.py"):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
