import pytest

from lazyntt.modfield import FieldContext
from lazyntt.word_arith import WordParams

# Largest prime below 2^62 that is 1 mod 2^11, found with sympy.isprime.
P62 = 4611686018427365377

W16 = WordParams(16)
W8 = WordParams(8)


@pytest.fixture(scope="session")
def ctx62():
    return FieldContext(P62)


@pytest.fixture(scope="session")
def ctx17():
    return FieldContext(17, W16)


@pytest.fixture(scope="session")
def ctx13():
    return FieldContext(13, W16)


# One line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
