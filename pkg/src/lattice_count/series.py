"""Closed-form generating functions for the smallest (g, n) and their power series.

The coefficient function ``w_{g,n}(z_1, ..., z_n)`` is the mixed derivative
of ``sum N_{g,n}(b) z^b``, so the coefficient of ``prod z_i^(b_i - 1)`` is
``prod b_i * N_{g,n}(b)``. Each fixture is stored as a finite sum of terms

    c * prod z_i^e_i * prod (1 - z_i)^(-a_i) * prod (1 + z_i)^(-c_i)

and is expanded, evaluated, or tested against the recursion from that
structured form alone.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, prod
from typing import Mapping, Sequence

from .identities import IdentityReport
from .recursion import n_value


class TruncatedSeries:
    """Multivariate power series with rational coefficients, exact up to
    total degree ``order``."""

    __slots__ = ("num_vars", "order", "_c")

    def __init__(self, num_vars: int, order: int, coeffs: Mapping[tuple, object] | None = None):
        if order < 0:
            raise ValueError(f"truncation order must be nonnegative, got {order}")
        self.num_vars = num_vars
        self.order = order
        self._c: dict[tuple, Fraction] = {}
        for e, v in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != num_vars:
                raise ValueError(f"exponent {e} has wrong length for {num_vars} variables")
            v = Fraction(v)
            if v and sum(e) <= order:
                self._c[e] = self._c.get(e, Fraction(0)) + v
        self._c = {e: v for e, v in self._c.items() if v}

    @classmethod
    def one(cls, num_vars: int, order: int) -> "TruncatedSeries":
        return cls(num_vars, order, {(0,) * num_vars: 1})

    @classmethod
    def monomial(cls, num_vars: int, order: int, exps: Sequence[int], c=1) -> "TruncatedSeries":
        return cls(num_vars, order, {tuple(exps): c})

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        exps = tuple(exps)
        if sum(exps) > self.order:
            raise ValueError(f"exponent {exps} is beyond the truncation order {self.order}")
        return self._c.get(exps, Fraction(0))

    def items(self):
        return sorted(self._c.items())

    def _like(self, other: "TruncatedSeries") -> int:
        if self.num_vars != other.num_vars:
            raise ValueError("series in different numbers of variables")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.one(self.num_vars, self.order) * other
        order = self._like(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, Fraction(0)) + v
        return TruncatedSeries(self.num_vars, order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.num_vars, self.order, {e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.num_vars, self.order, {e: c * v for e, v in self._c.items()})
        order = self._like(other)
        out: dict[tuple, Fraction] = {}
        for e1, v1 in self._c.items():
            d1 = sum(e1)
            for e2, v2 in other._c.items():
                if d1 + sum(e2) <= order:
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, Fraction(0)) + v1 * v2
        return TruncatedSeries(self.num_vars, order, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """1/self, for a series with nonzero constant term."""
        c0 = self._c.get((0,) * self.num_vars)
        if not c0:
            raise ZeroDivisionError("series without constant term has no reciprocal")
        # 1/(c0 (1 + h)) = (1/c0) sum_j (-h)^j and h has no constant term
        h = self * (1 / c0) - TruncatedSeries.one(self.num_vars, self.order)
        term = TruncatedSeries.one(self.num_vars, self.order)
        total = term
        for _ in range(self.order):
            term = term * (-h)
            total = total + term
        return total * (1 / c0)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, min(order, self.order), self._c)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = self._like(other)
        return self.truncate(order)._c == other.truncate(order)._c

    def __repr__(self):
        return f"TruncatedSeries({self.num_vars}, {self.order}, {dict(self.items())})"


def inverse_binomial(power: int, sign: int, order: int) -> list[Fraction]:
    """Coefficients of (1 - sign*z)^(-power) up to z^order."""
    if power == 0:
        return [Fraction(1)] + [Fraction(0)] * order
    return [Fraction(comb(m + power - 1, power - 1) * sign ** m) for m in range(order + 1)]


@dataclass(frozen=True)
class FormTerm:
    coef: Fraction
    mono: tuple  # exponent of z_i in the numerator
    minus: tuple  # a_i in (1 - z_i)^(-a_i)
    plus: tuple  # c_i in (1 + z_i)^(-c_i)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        value = Fraction(self.coef)
        for z, e, a, c in zip(point, self.mono, self.minus, self.plus):
            value *= Fraction(z) ** e / ((1 - Fraction(z)) ** a * (1 + Fraction(z)) ** c)
        return value


@dataclass(frozen=True)
class FixtureForm:
    g: int
    n: int
    terms: tuple
    display: str

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.n:
            raise ValueError(f"fixture ({self.g},{self.n}) takes {self.n} variables")
        return sum((t.evaluate(point) for t in self.terms), Fraction(0))

    def expand(self, order: int) -> TruncatedSeries:
        if order < 1:
            raise ValueError("expansion order must be at least 1")
        out: dict[tuple, Fraction] = {}
        for t in self.terms:
            budget = order - sum(t.mono)
            if budget < 0:
                continue
            factors = []
            for a, c in zip(t.minus, t.plus):
                fa = inverse_binomial(a, 1, budget)
                fc = inverse_binomial(c, -1, budget)
                factors.append([sum(fa[i] * fc[m - i] for i in range(m + 1)) for m in range(budget + 1)])
            for shift in _exponents_up_to(self.n, budget):
                v = t.coef * prod(f[s] for f, s in zip(factors, shift))
                if v:
                    e = tuple(x + y for x, y in zip(t.mono, shift))
                    out[e] = out.get(e, Fraction(0)) + v
        return TruncatedSeries(self.n, order, out)

    def __str__(self):
        return self.display


def _exponents_up_to(n: int, total: int):
    if n == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _exponents_up_to(n - 1, total - first):
            yield (first,) + rest


def _term(coef, n, mono=None, minus=None, plus=None) -> FormTerm:
    zero = (0,) * n
    return FormTerm(Fraction(coef), tuple(mono or zero), tuple(minus or zero), tuple(plus or zero))


def _unit(n: int, i: int, value: int) -> tuple:
    return tuple(value if j == i else 0 for j in range(n))


def _add(*vectors) -> tuple:
    return tuple(map(sum, zip(*vectors)))


def _fixture_03() -> FixtureForm:
    n = 3
    terms = (_term(Fraction(1, 2), n, minus=(2, 2, 2)), _term(Fraction(-1, 2), n, plus=(2, 2, 2)))
    return FixtureForm(0, 3, terms, "1/(2 prod (1-z_i)^2) - 1/(2 prod (1+z_i)^2)")


def _fixture_11() -> FixtureForm:
    return FixtureForm(1, 1, (_term(1, 1, mono=(3,), minus=(4,), plus=(4,)),), "z^3/(1-z^2)^4")


def _fixture_04(ordered: bool = True) -> FixtureForm:
    """``ordered=True`` reads the last sum as all 24 assignments of
    (i, j, k, l) to (0, 1, 2, 3); ``ordered=False`` takes its 12 terms with
    ``z_i z_j`` unordered and doubles their coefficient."""
    n = 4
    two = (2,) * n
    terms = []
    for i in range(n):
        terms.append(_term(Fraction(3, 4), n, mono=_unit(n, i, 1), minus=_add(two, _unit(n, i, 2))))
        terms.append(_term(Fraction(-3, 4), n, mono=_unit(n, i, 1), plus=_add(two, _unit(n, i, 2))))
    seen = set()
    for i, j, k, l in permutations(range(n)):
        key = (i, j, k, l) if ordered else (min(i, j), max(i, j), k, l)
        if key in seen:
            continue
        seen.add(key)
        coef = Fraction(1, 2) if ordered else Fraction(1)
        # (1 + z_k^2)(1 + z_l^2) = 1 + z_k^2 + z_l^2 + z_k^2 z_l^2
        base = _add(_unit(n, i, 1), _unit(n, j, 1))
        for extra in ((), (k,), (l,), (k, l)):
            mono = _add(base, *[_unit(n, x, 2) for x in extra]) if extra else base
            terms.append(_term(coef, n, mono=mono, minus=two, plus=two))
    label = "24 ordered" if ordered else "12 unordered, doubled"
    return FixtureForm(0, 4, tuple(terms),
                       "3/(4 prod (1-z_i)^2) sum z_i/(1-z_i)^2 - 3/(4 prod (1+z_i)^2) sum z_i/(1+z_i)^2"
                       f" + sum z_i z_j (1+z_k^2)(1+z_l^2)/(2 prod (1-z_i^2)^2)  [{label}]")


def _fixture_12() -> FixtureForm:
    n = 2
    two, four = (2, 2), (4, 4)
    both = (1, 1)
    terms = []
    for i in range(n):
        terms.append(_term(Fraction(5, 32), n, mono=_unit(n, i, 2), minus=_add(two, _unit(n, i, 4))))
        terms.append(_term(Fraction(-5, 128), n, mono=_unit(n, i, 1), minus=_add(two, _unit(n, i, 2))))
        terms.append(_term(Fraction(5, 32), n, mono=_unit(n, i, 2), plus=_add(two, _unit(n, i, 4))))
        terms.append(_term(Fraction(5, 128), n, mono=_unit(n, i, 1), plus=_add(two, _unit(n, i, 2))))
    terms.append(_term(Fraction(3, 32), n, mono=both, minus=four))
    terms.append(_term(Fraction(3, 32), n, mono=both, plus=four))
    terms.append(_term(Fraction(1, 8), n, mono=both, minus=two, plus=two))
    return FixtureForm(1, 2, tuple(terms),
                       "5/(32 prod (1-z_i)^2) sum (z_i^2/(1-z_i)^4 - z_i/(4(1-z_i)^2)) + 3 z_0 z_1/(32 prod (1-z_i)^4)"
                       " + 5/(32 prod (1+z_i)^2) sum (z_i^2/(1+z_i)^4 + z_i/(4(1+z_i)^2)) + 3 z_0 z_1/(32 prod (1+z_i)^4)"
                       " + z_0 z_1/(8 prod (1-z_i^2)^2)")


def _fixture_21() -> FixtureForm:
    terms = tuple(_term(c, 1, mono=(e,), minus=(10,), plus=(10,)) for c, e in ((21, 7), (63, 9), (21, 11)))
    return FixtureForm(2, 1, terms, "21 z^7 (1+3z^2+z^4)/(1-z^2)^10")


FIXTURE_IDS = ((0, 3), (1, 1), (0, 4), (1, 2), (2, 1))


def fixture(g: int, n: int, convention: str = "ordered") -> FixtureForm:
    builders = {(0, 3): _fixture_03, (1, 1): _fixture_11, (1, 2): _fixture_12, (2, 1): _fixture_21}
    if (g, n) == (0, 4):
        if convention not in ("ordered", "unordered"):
            raise ValueError(f"unknown convention {convention!r}")
        return _fixture_04(convention == "ordered")
    if (g, n) not in builders:
        raise ValueError(f"no closed form stored for (g, n) = ({g}, {n}); have {list(FIXTURE_IDS)}")
    return builders[(g, n)]()


def coefficient_check(f: FixtureForm, order: int) -> IdentityReport:
    """Every coefficient of total degree <= ``order`` against prod b_i * N(b)."""
    series = f.expand(order)
    report = IdentityReport("series", [[f.g, f.n]])
    for e in _exponents_up_to(f.n, order):
        b = tuple(x + 1 for x in e)
        expected = prod(b) * n_value(f.g, b)
        got = series.coefficient(e)
        report.samples += 1
        if got != expected:
            report.counterexamples.append({"g": f.g, "n": f.n, "exponents": list(e),
                                           "series": str(got), "expected": str(expected)})
    return report


def _random_point(rng: random.Random, n: int) -> tuple:
    return tuple(Fraction(rng.randint(1, 96), 97) for _ in range(n))


def inversion_check(f: FixtureForm, samples: int = 20, seed: int = 0) -> IdentityReport:
    """w(..., 1/z_j, ...) = z_j^2 w(..., z_j, ...) at random rational points in (0, 1)."""
    rng = random.Random(f"{seed}/{f.g}/{f.n}")
    report = IdentityReport("inversion", [[f.g, f.n]])
    for j in range(f.n):
        done = 0
        while done < samples:
            point = _random_point(rng, f.n)
            flipped = point[:j] + (1 / point[j],) + point[j + 1:]
            try:
                lhs = f.evaluate(flipped)
                rhs = point[j] ** 2 * f.evaluate(point)
            except ZeroDivisionError:
                continue
            done += 1
            report.samples += 1
            if lhs != rhs:
                report.counterexamples.append({"g": f.g, "n": f.n, "variable": j,
                                               "point": [str(z) for z in point], "lhs": str(lhs), "rhs": str(rhs)})
    return report
