import pytest
from hypothesis import HealthCheck, settings

from quiverseq.diagrams import RankConditions, rect_diagram_of
from quiverseq.factor import canonical_filling

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

EXAMPLE_RANKS = [[1, 4, 3, 3], [1, 2, 2], [1, 1], [0]]


@pytest.fixture
def example_rd():
    return rect_diagram_of(RankConditions.from_rows(EXAMPLE_RANKS))


@pytest.fixture
def example_td(example_rd):
    return canonical_filling(example_rd)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, title, detail = RESULTS[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n}: {title}  {detail}")
