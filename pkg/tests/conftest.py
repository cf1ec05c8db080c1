import pytest
from hypothesis import settings

from rank1wordle.words import load_guesses, load_solutions

# wall-clock deadlines turn slow-machine noise into failures; example counts
# already bound the work
settings.register_profile("no-deadline", deadline=None)
settings.load_profile("no-deadline")

SIX_WORDS = ("CLUMP", "CLAMP", "RUNNY", "UNDER", "CAMPS", "CRUNK")

# (criterion, passed, detail) tuples appended by tests/test_acceptance.py and
# echoed in the terminal summary so every criterion gets a visible verdict
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_acceptance(criterion: str, passed: bool, detail: str = "") -> bool:
    ACCEPTANCE_RESULTS.append((criterion, passed, detail))
    return passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if passed else 'FAIL'}  {criterion}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def guesses():
    return load_guesses()


@pytest.fixture(scope="session")
def solutions(guesses):
    return load_solutions(guesses)


@pytest.fixture
def six_words():
    return list(SIX_WORDS)
