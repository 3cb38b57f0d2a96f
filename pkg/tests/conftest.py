import pytest

from gridwalk import Borders, ChainModel, GridSpec


@pytest.fixture
def grid3():
    return GridSpec(3, 3)


@pytest.fixture
def center3(grid3):
    return ChainModel.from_spec(grid3, 5)


@pytest.fixture
def center5():
    return ChainModel.from_spec(GridSpec(5, 5), 13)


def make(w, d, h=1, boundless=False, start="uniform"):
    spec = GridSpec(w, d, h, Borders.BOUNDLESS if boundless else Borders.BORDERED)
    return ChainModel.from_spec(spec, start)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
