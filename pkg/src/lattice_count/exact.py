"""Exact rational substrate: sparse polynomials in squared variables,
tensor-grid Newton interpolation, Bernoulli numbers and a small exact
linear solver.

Every value is a :class:`fractions.Fraction`; nothing here ever rounds.
Polynomials are written in the variables ``u_i = b_i**2``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from ._kernels import eval_int_terms

Rational = Fraction

Exponents = tuple  # tuple[int, ...]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class SquaredPoly:
    """Sparse polynomial with rational coefficients in ``num_vars`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients. Instances are
    treated as immutable.
    """

    __slots__ = ("num_vars", "_terms", "_int_form", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[tuple, object] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        self.num_vars = num_vars
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent vector {exps} does not have {num_vars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = dict(sorted(clean.items()))
        self._int_form = None
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, num_vars: int, c) -> "SquaredPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "SquaredPoly":
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, {tuple(e): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        """Total degree in the u variables; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def homogeneous_part(self, d: int) -> "SquaredPoly":
        return SquaredPoly(self.num_vars, {e: c for e, c in self._terms.items() if sum(e) == d})

    # arithmetic
    def _check_compatible(self, other: "SquaredPoly"):
        if self.num_vars != other.num_vars:
            raise ValueError(f"variable count mismatch: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other):
        if not isinstance(other, SquaredPoly):
            other = SquaredPoly.constant(self.num_vars, other)
        self._check_compatible(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SquaredPoly(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return SquaredPoly(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SquaredPoly):
            other = SquaredPoly.constant(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SquaredPoly):
            c = as_rational(other)
            return SquaredPoly(self.num_vars, {e: c * v for e, v in self._terms.items()})
        self._check_compatible(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SquaredPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, SquaredPoly):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SquaredPoly.constant(self.num_vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return f"SquaredPoly({self.num_vars}, 0)"
        parts = []
        for e, c in self._terms.items():
            mono = "*".join(f"u{i + 1}^{k}" if k > 1 else f"u{i + 1}" for i, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return f"SquaredPoly({self.num_vars}, " + " + ".join(parts) + ")"

    # variable manipulation
    def substitute(self, var: int, value) -> "SquaredPoly":
        """Set ``u_var = value`` and drop that variable."""
        value = as_rational(value)
        out: dict[tuple, Fraction] = {}
        for e, c in self._terms.items():
            rest = e[:var] + e[var + 1:]
            out[rest] = out.get(rest, 0) + c * value ** e[var]
        return SquaredPoly(self.num_vars - 1, out)

    def permute(self, perm: Sequence[int]) -> "SquaredPoly":
        """New polynomial whose variable ``i`` is old variable ``perm[i]``."""
        if sorted(perm) != list(range(self.num_vars)):
            raise ValueError(f"{perm} is not a permutation of the variables")
        return SquaredPoly(self.num_vars, {tuple(e[p] for p in perm): c for e, c in self._terms.items()})

    # evaluation
    def __call__(self, *point):
        return poly_eval(self, point)

    def int_form(self):
        """``(denominator, [(numerator, exps), ...])`` with a common denominator."""
        if self._int_form is None:
            den = 1
            for c in self._terms.values():
                den = den * c.denominator // _gcd(den, c.denominator)
            terms = tuple((c.numerator * (den // c.denominator), e) for e, c in self._terms.items())
            self._int_form = (den, terms)
        return self._int_form

    def eval_at_b(self, b: Sequence[int]) -> Fraction:
        """Evaluate at ``u_i = b_i**2`` for integer ``b``; uses the integer kernel."""
        if len(b) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} arguments, got {len(b)}")
        den, terms = self.int_form()
        return Fraction(eval_int_terms(terms, [x * x for x in b]), den)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def poly_eval(p: SquaredPoly, point: Sequence) -> Fraction:
    """Exact value of ``p`` at the u-point ``point``."""
    if len(point) != p.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {p.num_vars} variables")
    if all(isinstance(x, int) for x in point):
        den, terms = p.int_form()
        return Fraction(eval_int_terms(terms, list(point)), den)
    point = [as_rational(x) for x in point]
    total = Fraction(0)
    for e, c in p.items():
        t = c
        for x, k in zip(point, e):
            if k:
                t *= x ** k
        total += t
    return total


class GridSpec:
    """Tensor interpolation grid given by per-variable node lists of b-values."""

    def __init__(self, nodes: Sequence[Sequence[int]], degree: int):
        if degree < 0:
            raise ValueError("degree bound must be nonnegative")
        self.nodes = tuple(tuple(int(x) for x in ns) for ns in nodes)
        self.degree = degree
        for i, ns in enumerate(self.nodes):
            if len(set(ns)) != len(ns):
                raise ValueError(f"duplicate nodes for variable {i}: {ns}")
            if len(ns) != degree + 1:
                raise ValueError(f"variable {i} needs {degree + 1} nodes, got {len(ns)}")
            if any(x <= 0 for x in ns):
                raise ValueError(f"grid nodes must be positive integers: {ns}")
            if len({x % 2 for x in ns}) > 1:
                raise ValueError(f"nodes for variable {i} mix parities: {ns}")

    @classmethod
    def for_parity_class(cls, n: int, k: int, degree: int) -> "GridSpec":
        """Odd nodes 1,3,..,2D+1 for the first k variables, even 2,..,2D+2 for the rest."""
        odd = [2 * i + 1 for i in range(degree + 1)]
        even = [2 * i + 2 for i in range(degree + 1)]
        return cls([odd] * k + [even] * (n - k), degree)

    @property
    def num_vars(self) -> int:
        return len(self.nodes)

    def points(self):
        return itertools.product(*self.nodes)

    def __len__(self):
        return (self.degree + 1) ** self.num_vars


def _newton_to_monomial(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (low to high) of the interpolant through ``(xs, ys)``."""
    m = len(xs)
    a = list(ys)
    for k in range(1, m):
        for i in range(m - 1, k - 1, -1):
            a[i] = (a[i] - a[i - 1]) / (xs[i] - xs[i - k])
    coeffs = [a[m - 1]]
    for k in range(m - 2, -1, -1):
        # coeffs <- coeffs * (x - xs[k]) + a[k]
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[k] * c
        shifted[0] += a[k]
        coeffs = shifted
    return coeffs


def poly_interpolate(grid: GridSpec, values: Mapping[tuple, object]) -> SquaredPoly:
    """Unique polynomial of per-variable degree <= D in each u_i matching
    ``values`` on the tensor grid, by successive univariate Newton passes."""
    n, D = grid.num_vars, grid.degree
    # table indexed by (node index or exponent) per axis
    table: dict[tuple, Fraction] = {}
    for idx in itertools.product(range(D + 1), repeat=n):
        b = tuple(grid.nodes[i][j] for i, j in enumerate(idx))
        try:
            table[idx] = as_rational(values[b])
        except KeyError:
            raise ValueError(f"missing grid value at {b}") from None
    for axis in range(n):
        us = [Fraction(x * x) for x in grid.nodes[axis]]
        new: dict[tuple, Fraction] = {}
        others = [range(D + 1)] * (n - 1)
        for rest in itertools.product(*others):
            line = [table[rest[:axis] + (j,) + rest[axis:]] for j in range(D + 1)]
            for e, c in enumerate(_newton_to_monomial(us, line)):
                new[rest[:axis] + (e,) + rest[axis:]] = c
        table = new
    return SquaredPoly(n, table)


@lru_cache(maxsize=None)
def _bernoulli_all(m: int) -> tuple:
    B = [Fraction(1)]
    for j in range(1, m + 1):
        B.append(-sum(comb(j + 1, k) * B[k] for k in range(j)) / (j + 1))
    return tuple(B)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m for even m >= 2 (convention B_1 = -1/2)."""
    if not isinstance(m, int) or m < 2 or m % 2:
        raise ValueError(f"bernoulli() needs an even integer >= 2, got {m!r}")
    return _bernoulli_all(m)[m]


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> tuple[list[Fraction] | None, int]:
    """Solve ``rows @ x = rhs`` exactly by Gauss-Jordan elimination.

    Returns ``(x, rank)``. ``x`` is None when the system is inconsistent or
    the solution is not unique.
    """
    ncols = len(rows[0]) if rows else 0
    M = [[as_rational(v) for v in r] + [as_rational(y)] for r, y in zip(rows, rhs)]
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][col]
        M[rank] = [v * inv for v in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
    if any(M[r][-1] for r in range(rank, len(M))):
        return None, rank
    if rank < ncols:
        return None, rank
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = M[r][-1]
    return x, rank


def distinct_permutations(seq: Iterable) -> list[tuple]:
    """All distinct orderings of a multiset, in lexicographic order."""
    items = sorted(seq)
    out = []

    def rec(prefix, pool):
        if not pool:
            out.append(tuple(prefix))
            return
        prev = object()
        for i, x in enumerate(pool):
            if x == prev:
                continue
            prev = x
            rec(prefix + [x], pool[:i] + pool[i + 1:])

    rec([], items)
    return out


def partitions(total: int, max_parts: int, max_part: int | None = None):
    """Partitions of ``total`` (weakly decreasing tuples) with at most ``max_parts`` parts."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first,) + rest
