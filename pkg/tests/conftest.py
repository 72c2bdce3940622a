import pytest

from cgsiter.algebra import RingSpec
from cgsiter.polynomial import parse

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def circles_ring():
    # lex with x > y > c > r, as in the two-circles example
    return RingSpec(("x", "y"), ("c", "r"), "lex", "lex")


@pytest.fixture
def circles(circles_ring):
    R = circles_ring
    return [parse("x^2 + y^2 - 1", R), parse("(x - c)^2 + y^2 - r", R)]


@pytest.fixture
def P(circles_ring):
    return lambda text: parse(text, circles_ring)
