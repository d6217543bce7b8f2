import pytest

from cosetlab import parse_cycles
from cosetlab.catalog import alternating, symmetric
from cosetlab.group import subgroup


def P(text, degree=3):
    return parse_cycles(text, degree)


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return symmetric(4)


@pytest.fixture(scope="session")
def A3(S3):
    return alternating(3)


@pytest.fixture(scope="session")
def H12(S3):
    return subgroup(S3, [P("(1 2)")])


@pytest.fixture(scope="session")
def K13(S3):
    return subgroup(S3, [P("(1 3)")])


# one line per acceptance criterion, collected by tests/test_acceptance.py
def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request, capsys):
    """Call with a criterion label; records PASS/FAIL when the test finishes."""
    labels = []
    yield labels.append
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    for label in labels:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        request.config.acceptance_lines.append(line)
        with capsys.disabled():
            print(f"\n{line}", end="")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
