from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lattice_count.exact import (GridSpec, SquaredPoly, as_rational, bernoulli, distinct_permutations,
                                 partitions, poly_eval, poly_interpolate, solve_exact)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)


@st.composite
def polys(draw, num_vars=None, max_degree=3):
    n = draw(st.integers(1, 3)) if num_vars is None else num_vars
    exps = st.tuples(*[st.integers(0, max_degree)] * n)
    terms = draw(st.dictionaries(exps, fractions, max_size=6))
    return SquaredPoly(n, terms)


def test_zero_coefficients_are_dropped():
    p = SquaredPoly(2, {(1, 0): 0, (0, 1): Fraction(1, 2)})
    assert p.terms == {(0, 1): Fraction(1, 2)}
    assert SquaredPoly(2).is_zero() and SquaredPoly(2).degree() == -1


def test_rejects_floats_and_bad_exponents():
    with pytest.raises(TypeError):
        SquaredPoly(1, {(1,): 0.5})
    with pytest.raises(ValueError):
        SquaredPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        SquaredPoly(1, {(-1,): 1})
    assert as_rational("3/4") == Fraction(3, 4)


def test_poly_eval_dimension_mismatch():
    with pytest.raises(ValueError):
        poly_eval(SquaredPoly.constant(2, 1), (1,))


def test_eval_at_b_is_eval_at_squares():
    p = SquaredPoly(2, {(2, 0): Fraction(1, 3), (0, 1): -2, (1, 1): Fraction(5, 7)})
    assert p.eval_at_b((3, 4)) == poly_eval(p, (9, 16)) == Fraction(27) - 32 + Fraction(5 * 144, 7)


@given(polys(num_vars=2), polys(num_vars=2), polys(num_vars=2))
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == SquaredPoly(2)


@given(polys(num_vars=2), polys(num_vars=2), st.tuples(fractions, fractions))
def test_evaluation_is_a_homomorphism(p, q, x):
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)


def test_substitute_and_homogeneous_part():
    p = SquaredPoly(2, {(1, 1): 2, (0, 2): 1, (0, 0): 3})
    assert p.substitute(1, 4) == SquaredPoly(1, {(1,): 8, (0,): 19})
    assert p.homogeneous_part(2) == SquaredPoly(2, {(1, 1): 2, (0, 2): 1})
    assert p.permute((1, 0)) == SquaredPoly(2, {(1, 1): 2, (2, 0): 1, (0, 0): 3})


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_interpolation_round_trip(data):
    n = data.draw(st.integers(1, 3))
    D = data.draw(st.integers(0, 3 if n < 3 else 2))
    p = data.draw(polys(num_vars=n, max_degree=D))
    k = data.draw(st.integers(0, n))
    grid = GridSpec.for_parity_class(n, k, D)
    values = {b: p.eval_at_b(b) for b in grid.points()}
    assert poly_interpolate(grid, values) == p


def test_interpolation_missing_value():
    grid = GridSpec.for_parity_class(1, 0, 1)
    with pytest.raises(ValueError, match="missing"):
        poly_interpolate(grid, {(2,): 1})


@pytest.mark.parametrize("nodes, degree", [
    ([[1, 1]], 1),      # duplicate
    ([[1, 3, 5]], 1),   # wrong count
    ([[0, 2]], 1),      # nonpositive
    ([[1, 2]], 1),      # mixed parity
])
def test_grid_validation(nodes, degree):
    with pytest.raises(ValueError):
        GridSpec(nodes, degree)


def test_bernoulli():
    assert [bernoulli(m) for m in (2, 4, 6, 8)] == [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30)]
    with pytest.raises(ValueError):
        bernoulli(3)


def test_solve_exact():
    x, rank = solve_exact([[2, 1], [1, 3], [3, 4]], [3, 4, 7])
    assert x == [1, 1] and rank == 2
    x, rank = solve_exact([[1, 2], [2, 4]], [1, 2])
    assert x is None and rank == 1


def test_combinatorics_helpers():
    assert distinct_permutations((1, 1, 2)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert sorted(partitions(4, 2)) == sorted([(4,), (3, 1), (2, 2)])
