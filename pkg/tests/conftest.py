import numpy as np
import pytest

from qudit_bell.bell_basis import BellState

SQ2 = 1 / np.sqrt(2)


def state_from_terms(d, terms, c=-1, p=-1):
    """Build a BellState from ``{(left, right): amplitude}`` (unnormalised)."""
    amps = np.zeros(d * d, dtype=complex)
    for (i, j), a in terms.items():
        amps[i * d + j] += a
    return BellState(d, c, p, amps / np.linalg.norm(amps), "test")


@pytest.fixture
def qubit_bell():
    """Textbook two-qubit Bell states keyed by name."""
    return {
        "phi+": state_from_terms(2, {(0, 0): 1, (1, 1): 1}),
        "phi-": state_from_terms(2, {(0, 0): 1, (1, 1): -1}),
        "psi+": state_from_terms(2, {(0, 1): 1, (1, 0): 1}),
        "psi-": state_from_terms(2, {(0, 1): 1, (1, 0): -1}),
    }


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
