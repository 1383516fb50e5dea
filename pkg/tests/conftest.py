from pathlib import Path

import pytest

from catkernel import instances
from catkernel.catspec import load_category

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def zoo():
    return {e.name: e.category for e in instances.zoo()}


@pytest.fixture(scope="session")
def arrow(zoo):
    return zoo["walking_arrow"]


@pytest.fixture(scope="session")
def maybe():
    return instances.maybe_monad(instances.finset(3, exp_cap=64))


@pytest.fixture(scope="session")
def writer_c2():
    return instances.writer_monad(instances.finset(3, exp_cap=64), "c2")


def load(name):
    return load_category((DATA / name).read_text())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
