import numpy as np
import pytest

from quartic_positivity.core import ReducedQuartic


def random_reduced(n, seed=0, lo=-10.0, hi=10.0):
    rng = np.random.default_rng(seed)
    return [ReducedQuartic(*row) for row in rng.uniform(lo, hi, size=(n, 3)).tolist()]


@pytest.fixture(scope="session")
def sample_1e3():
    return random_reduced(1000, seed=1)


ACCEPTANCE_LINES = []


def report(criterion, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
