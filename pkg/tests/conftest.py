import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def toy_curve():
    from grouplaw.curve import CurveParams
    return CurveParams(7, 1, 1)


@pytest.fixture(scope="session")
def full_report():
    from grouplaw.prover import run_all
    return run_all()
