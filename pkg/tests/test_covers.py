from fractions import Fraction
from itertools import permutations

import pytest

from lattice_count._kernels import _fallback
from lattice_count.covers import admissible_genera, compositions, oracle_compare, oracle_count, triple_table


@pytest.mark.parametrize("b, g, value", [
    ((1, 1, 2), 0, 1), ((4,), 1, Fraction(1, 4)), ((2,), 1, 0), ((3,), 0, 0), ((6,), 1, Fraction(2, 3)),
    ((2, 2, 2, 2), 0, 3),
])
def test_oracle_values(b, g, value):
    assert oracle_count(b, g) == value


def test_degree_bound():
    with pytest.raises(ValueError, match="bound 8"):
        oracle_count((5, 5), 0)


def test_relabeling_symmetry():
    for b in {p for p in permutations((1, 1, 2, 4))}:
        assert oracle_count(b, 0) == oracle_count((1, 1, 2, 4), 0)


def test_odd_degree_is_zero():
    for b in compositions(7):
        for g in range(3):
            assert oracle_count(b, g) == 0


def test_compositions_and_genera():
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert admissible_genera((4,)) == [1]
    assert admissible_genera((1, 1)) == []  # only the unstable genus 0


@pytest.mark.parametrize("d", [2, 4, 6])
def test_fallback_matches_selected_backend(d):
    assert _fallback.count_triples(d) == dict(triple_table(d))


def test_compare_small():
    report = oracle_compare(6)
    assert report.ok and report.samples == 37
    assert [0, 3] in report.cases and [1, 2] in report.cases


def test_compare_respects_bound():
    with pytest.raises(ValueError):
        oracle_compare(10)
