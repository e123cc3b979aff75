from fractions import Fraction

import pytest

from lattice_count.exact import SquaredPoly
from lattice_count.store import default_store

_RESULTS = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def store():
    return default_store()


@pytest.fixture
def record_acceptance(request):
    """Call with (number, title, passed); lines are printed in the summary."""
    results = request.config.stash.setdefault(_RESULTS, [])

    def record(number, title, passed):
        results.append((number, title, bool(passed)))

    return record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(results):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {title}")


def u(n, i):
    return SquaredPoly.variable(n, i)


def table_polys():
    """The seven reference polynomials, keyed by (g, n, k), in u_i = b_i^2."""
    one3 = SquaredPoly.constant(3, 1)
    s4 = u(4, 0) + u(4, 1) + u(4, 2) + u(4, 3)
    s2 = u(2, 0) + u(2, 1)
    x = u(1, 0)
    return {
        (0, 3, 0): one3,
        (0, 3, 2): one3,
        (1, 1, 0): (x - 4) * Fraction(1, 48),
        (0, 4, 0): (s4 - 4) * Fraction(1, 4),
        (0, 4, 4): (s4 - 4) * Fraction(1, 4),
        (0, 4, 2): (s4 - 2) * Fraction(1, 4),
        (1, 2, 0): (s2 - 4) * (s2 - 8) * Fraction(1, 384),
        (1, 2, 2): (s2 - 2) * (s2 - 10) * Fraction(1, 384),
        (2, 1, 0): (x - 4) * (x - 16) * (x - 36) * (x * 5 - 32) * Fraction(1, 2 ** 16 * 27 * 5),
    }
