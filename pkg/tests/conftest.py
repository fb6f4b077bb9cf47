import pytest

from permutiple.digitnum import parse_perm, parse_tuple
from permutiple.theorems import verify

from worked_examples import BASE6, BASE12, CYCLIC_714285

# lines recorded by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def make_witness(text, n, sigma):
    d = parse_tuple(text)
    return verify(d, n, parse_perm(sigma, len(d)))


@pytest.fixture(scope="session")
def w6():
    return make_witness(BASE6["tuple"], BASE6["n"], BASE6["sigma"])


@pytest.fixture(scope="session")
def w12():
    return make_witness(BASE12["tuple"], BASE12["n"], BASE12["sigma"])


@pytest.fixture(scope="session")
def w87912():
    return make_witness("(8,7,9,1,2)_10", 4, "rho")


@pytest.fixture(scope="session")
def w714285():
    return make_witness(CYCLIC_714285["tuple"], CYCLIC_714285["n"], CYCLIC_714285["sigma"])


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite tests/golden from current output")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
