import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from selfdual.codes import LinearCode
from selfdual.constructions import extended_hamming8, find_element_of_order, golay24, psl2_generators, xqr
from selfdual.perms import Perm


def pytest_addoption(parser):
    parser.addoption("--heavy", action="store_true", default=False, help="run long searches")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--heavy"):
        return
    skip = pytest.mark.skip(reason="heavy; pass --heavy to run")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def golay() -> LinearCode:
    return golay24()


@pytest.fixture(scope="session")
def xqr48() -> LinearCode:
    return xqr(47)


@pytest.fixture(scope="session")
def hamming() -> LinearCode:
    return extended_hamming8()


@pytest.fixture(scope="session")
def g6_golay() -> Perm:
    return find_element_of_order(psl2_generators(23), 6, seed=0)


@pytest.fixture(scope="session")
def g6_xqr48() -> Perm:
    return find_element_of_order(psl2_generators(47), 6, seed=0)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
