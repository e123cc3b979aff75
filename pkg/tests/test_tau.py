from fractions import Fraction

import pytest

from lattice_count.quasi import InternalConsistencyError
from lattice_count.tau import TauIndex, check_top_degree, intersection_number, parse_signs, tau_bracket


@pytest.mark.parametrize("g, m, signs, value", [
    (0, (0, 0, 0), "+++", 1),
    (1, (1,), "+", Fraction(1, 24)),
    (1, (0, 0), "++", Fraction(1, 12)),
    (1, (0, 0), "+-", 0),
    (1, (2,), "+", 0),          # |m| > 3g - 3 + n
    (0, (1, 0, 0, 0), "-+-+", 1),
])
def test_brackets(store, g, m, signs, value):
    assert tau_bracket(g, m, signs, store) == value


def test_minus_signs_move_first():
    idx = TauIndex(0, (3, 1, 2), ("+", "-", "-"))
    assert idx.m == (1, 2, 3) and idx.signs == ("-", "-", "+") and idx.k == 2 and idx.s == -6


def test_sign_parsing():
    assert parse_signs("+,-") == ("+", "-")
    with pytest.raises(ValueError):
        TauIndex(0, (0, 0), ("+",))


@pytest.mark.parametrize("g, m, value", [
    (0, (0, 0, 0), 1), (0, (0, 0, 0, 1), 1), (1, (1,), Fraction(1, 24)), (2, (4,), Fraction(1, 1152)),
    (1, (1, 1), Fraction(1, 24)), (0, (1, 1, 0, 0, 0), 2),
])
def test_intersection_numbers(store, g, m, value):
    assert intersection_number(g, m, store) == value


def test_intersection_number_needs_top_degree(store):
    with pytest.raises(ValueError):
        intersection_number(1, (0, 0), store)


def test_sign_dependence_is_reported(store, monkeypatch):
    import lattice_count.tau as tau
    monkeypatch.setattr(tau, "tau_bracket", lambda g, m, signs, store=None: Fraction(signs.count("-")))
    with pytest.raises(InternalConsistencyError):
        tau.intersection_number(0, (0, 0, 0, 1), store)


@pytest.mark.parametrize("g, n", [(0, 3), (1, 1), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1), (0, 6), (1, 4), (2, 2)])
def test_top_degree_independence(store, g, n):
    report = check_top_degree(g, n, store)
    assert report.ok, report.counterexamples
