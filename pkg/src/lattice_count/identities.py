"""Exact checks of the identities satisfied by the lattice counts N_{g,n}.

Each ``check_*`` function returns an :class:`IdentityReport`. Value-level
checks exploit that N_{g,n} is a symmetric function of its integer
arguments, so they run over sorted tuples only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Sequence

from .exact import SquaredPoly, bernoulli, solve_exact
from .quasi import (InternalConsistencyError, LatticeQuasiPolynomial, _symmetric_basis, check_stable,
                    degree_bound, parity_classes, qp_eval)
from .store import PolyStore, default_store


@dataclass
class IdentityReport:
    name: str
    cases: list = field(default_factory=list)  # [g, n] pairs (or other case labels)
    counterexamples: list = field(default_factory=list)
    samples: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        self.cases.extend(other.cases)
        self.counterexamples.extend(other.counterexamples)
        self.samples += other.samples
        return self

    def to_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "counterexamples": self.counterexamples,
                "samples": self.samples, "ok": self.ok}


def _store(store):
    return default_store() if store is None else store


class _Evaluator:
    """Cached evaluation of a fully symmetric quasi-polynomial."""

    def __init__(self, qp: LatticeQuasiPolynomial):
        self.qp = qp
        self._cache: dict[tuple, Fraction] = {}
        self._prefix: dict[tuple, list] = {}

    def __call__(self, b) -> Fraction:
        key = tuple(sorted(b))
        v = self._cache.get(key)
        if v is None:
            v = self._cache[key] = qp_eval(self.qp, key)
        return v

    def weighted_prefix(self, others: tuple, m: int) -> Fraction:
        """sum_{k=1}^{m} k * N(others + (k,))."""
        key = tuple(sorted(others))
        sums = self._prefix.setdefault(key, [Fraction(0)])
        while len(sums) <= m:
            k = len(sums)
            sums.append(sums[-1] + k * self(key + (k,)))
        return sums[m]


def string_rhs(ev: _Evaluator, b: Sequence[int], second: bool = False) -> Fraction:
    """Right side of the first (or second) string equation at ``b``."""
    total = Fraction(0)
    for j, bj in enumerate(b):
        others = tuple(b[:j]) + tuple(b[j + 1:])
        total += ev.weighted_prefix(others, bj)
    if second:
        value = ev(b)
        if value:
            total -= Fraction(sum(b), 2) * value
    return total


def string_rhs_restricted(ev: _Evaluator, b: Sequence[int], second: bool = False) -> Fraction:
    """Right side in the form before parity is used to extend the inner
    sums to ``1 <= k <= b_j``: the first equation sums over ``k < b_j`` with
    ``k`` of opposite parity to ``b_j``, the second over ``k < b_j`` of the
    same parity (doubled) plus ``sum_j b_j N(b)``, all halved."""
    total = Fraction(0)
    for j, bj in enumerate(b):
        others = tuple(b[:j]) + tuple(b[j + 1:])
        start = 2 - bj % 2 if second else 1 + bj % 2
        for k in range(start, bj, 2):
            total += k * ev(others + (k,))
    if second:
        total += Fraction(sum(b), 2) * ev(b)
    return total


def string_box(g: int, n: int) -> int:
    return 2 * degree_bound(g, n) + 3


def _check_string(g: int, n: int, store, second: bool) -> IdentityReport:
    check_stable(g, n)
    store = _store(store)
    lower = _Evaluator(store.quasi(g, n))
    upper = store.quasi(g, n + 1)
    first = 2 if second else 1
    report = IdentityReport("string2" if second else "string1", [[g, n]])
    for b in combinations_with_replacement(range(1, string_box(g, n) + 1), n):
        lhs = qp_eval(upper, (first,) + b)
        if (first + sum(b)) % 2 == 0:
            rhs = string_rhs(lower, b, second)
        else:
            # the full-range sums only agree on admissible parities
            rhs = string_rhs_restricted(lower, b, second)
        report.samples += 1
        if lhs != rhs:
            report.counterexamples.append({"g": g, "n": n, "b": list(b), "lhs": str(lhs), "rhs": str(rhs)})
    return report


def check_string1(g: int, n: int, store: PolyStore | None = None) -> IdentityReport:
    """N_{g,n+1}(1, b) = sum_j sum_{k<=b_j} k N_{g,n}(b)|_{b_j=k} on the box
    1 <= b_i <= 2(3g-3+n)+3.

    When ``1 + sum(b)`` is odd the left side vanishes by parity while the
    full-range sum need not, so those tuples are checked against
    :func:`string_rhs_restricted` instead.
    """
    return _check_string(g, n, store, second=False)


def check_string2(g: int, n: int, store: PolyStore | None = None) -> IdentityReport:
    """As :func:`check_string1` with first argument 2 and the extra
    ``-1/2 sum_j b_j N_{g,n}(b)`` term."""
    return _check_string(g, n, store, second=True)


def dilaton_difference(upper: SquaredPoly) -> SquaredPoly:
    """N^{(k)}_{g,n+1}(2, b) - N^{(k)}_{g,n+1}(0, b), substituting the last (even) variable."""
    last = upper.num_vars - 1
    return upper.substitute(last, 4) - upper.substitute(last, 0)


def check_dilaton(g: int, n: int, store: PolyStore | None = None) -> IdentityReport:
    check_stable(g, n)
    store = _store(store)
    report = IdentityReport("dilaton", [[g, n]])
    factor = 2 * g - 2 + n
    for k in parity_classes(n):
        lhs = dilaton_difference(store.poly(g, n + 1, k))
        rhs = store.poly(g, n, k) * factor
        report.samples += 1
        if lhs != rhs:
            report.counterexamples.append({"g": g, "n": n, "k": k, "lhs": repr(lhs), "rhs": repr(rhs)})
    # consequence for Euler characteristics
    chi_up = qp_eval(store.quasi(g, n + 1), (0,) * (n + 1))
    chi = qp_eval(store.quasi(g, n), (0,) * n)
    report.samples += 1
    if chi_up != (2 - 2 * g - n) * chi:
        report.counterexamples.append({"g": g, "n": n, "euler_recursion": [str(chi_up), str(chi)]})
    return report


def _tuples_up_to(n: int, bound: int, minimum: int = 0):
    """All ordered n-tuples of integers >= minimum with sum <= bound."""
    if n == 0:
        yield ()
        return
    for first in range(minimum, bound - minimum * (n - 1) + 1):
        for rest in _tuples_up_to(n - 1, bound - first, minimum):
            yield (first,) + rest


def check_vanishing(g: int, n: int, store: PolyStore | None = None) -> IdentityReport:
    """Exhaustive check of the three vanishing statements for N_{g,n}."""
    check_stable(g, n)
    store = _store(store)
    ev = _Evaluator(store.quasi(g, n))
    report = IdentityReport("vanishing", [[g, n]])

    def expect_zero(b, rule):
        report.samples += 1
        v = ev(b)
        if v:
            report.counterexamples.append({"g": g, "n": n, "b": list(b), "value": str(v), "rule": rule})

    for b in _tuples_up_to(n, 4 * g - 4 + 2 * n, minimum=1):
        expect_zero(b, "positive")
    for b in _tuples_up_to(n, max(4 * g - 4 + 2 * n, 0)):
        p = b.count(0)
        if p and 0 < sum(b) <= 4 * g - 4 + 2 * (n - p):
            expect_zero(b, "zeros")
    if g == 0:
        for b in _tuples_up_to(n, 2 * (n - 3)):
            if sum(b) > 0:
                expect_zero(b, "genus0")
    return report


def euler_closed_form(g: int, n: int) -> Fraction:
    """Orbifold Euler characteristic of M_{g,n} from the Harer-Zagier formulas."""
    check_stable(g, n)
    sign = -1 if (n - 1) % 2 else 1
    if g == 0:
        return Fraction(sign * factorial(n - 3))
    chi1 = -bernoulli(2 * g) / (2 * g)
    return sign * Fraction(factorial(2 * g - 3 + n), factorial(2 * g - 2)) * chi1


def euler_characteristic(g: int, n: int, store: PolyStore | None = None) -> Fraction:
    """N_{g,n}(0, ..., 0), checked against :func:`euler_closed_form`."""
    value = qp_eval(_store(store).quasi(g, n), (0,) * n)
    expected = euler_closed_form(g, n)
    if value != expected:
        raise InternalConsistencyError(f"N_{{{g},{n}}}(0,...,0) = {value} but the closed form gives {expected}")
    return value


def symplectic_invariant(g: int, store: PolyStore | None = None) -> Fraction:
    if g < 2:
        raise ValueError(f"the symplectic invariant is defined for g > 1, got g={g}")
    return euler_characteristic(g, 1, store) / (2 - 2 * g)


def product_formula(n: int, b: int) -> Fraction:
    value = Fraction(1)
    for k in range(1, n - 2):
        value *= Fraction(b * b - 4 * k * k, 4 * k)
    return value


def product_formula_check(n: int, b_max: int, store: PolyStore | None = None) -> IdentityReport:
    """N_{0,n}(b, 0, ..., 0) against the product formula for 0 <= b <= b_max."""
    if n < 3:
        raise ValueError("product formula needs n >= 3")
    qp = _store(store).quasi(0, n)
    report = IdentityReport("product", [[0, n]])
    for b in range(b_max + 1):
        lhs = qp_eval(qp, (b,) + (0,) * (n - 1))
        rhs = product_formula(n, b) if b % 2 == 0 else Fraction(0)
        report.samples += 1
        if lhs != rhs:
            report.counterexamples.append({"n": n, "b": b, "lhs": str(lhs), "rhs": str(rhs)})
    return report


def genus0_base() -> LatticeQuasiPolynomial:
    return LatticeQuasiPolynomial(0, 3, {0: SquaredPoly.constant(3, 1), 2: SquaredPoly.constant(3, 1)})


def genus0_from_string(n: int, lower: LatticeQuasiPolynomial | None = None,
                       store: PolyStore | None = None, compare: bool = True) -> LatticeQuasiPolynomial:
    """Rebuild N_{0,n} from N_{0,n-1} using only the two string equations.

    Without ``lower`` the chain starts from N_{0,3} = 1, so the main
    recursion is never used. With ``compare`` the result must equal the
    recursion-built polynomials.
    """
    if n < 4:
        raise ValueError("genus-0 reconstruction needs n >= 4")
    if lower is None:
        lower = genus0_base() if n == 4 else genus0_from_string(n - 1, compare=False)
    if (lower.g, lower.n) != (0, n - 1):
        raise ValueError(f"need N_{{0,{n - 1}}}, got N_{{{lower.g},{lower.n}}}")
    ev = _Evaluator(lower)
    D = n - 3
    top = 2 * D + 3
    odd_vals = list(range(1, top + 1, 2))
    even_vals = list(range(2, top + 2, 2))
    polys = {}
    for k in parity_classes(n):
        basis = _symmetric_basis(n, k, D)
        rows, rhs = [], []
        if k >= 1:
            # first argument 1 occupies an odd slot
            for o in combinations_with_replacement(odd_vals, k - 1):
                for e in combinations_with_replacement(even_vals, n - k):
                    rest = o + e
                    rows.append([p.eval_at_b((1,) + rest) for p in basis])
                    rhs.append(string_rhs(ev, rest))
        if n - k >= 1:
            # first argument 2 occupies an even slot (placed last)
            for o in combinations_with_replacement(odd_vals, k):
                for e in combinations_with_replacement(even_vals, n - k - 1):
                    rest = o + e
                    rows.append([p.eval_at_b(rest + (2,)) for p in basis])
                    rhs.append(string_rhs(ev, rest, second=True))
        coeffs, rank = solve_exact(rows, rhs)
        if coeffs is None:
            raise InternalConsistencyError(
                f"string equations do not determine N^({k})_{{0,{n}}}: rank {rank} of {len(basis)} unknowns")
        poly = SquaredPoly(n)
        for c, p in zip(coeffs, basis):
            if c:
                poly = poly + p * c
        polys[k] = poly
    result = LatticeQuasiPolynomial(0, n, polys)
    if compare:
        built = _store(store).quasi(0, n)
        if built != result:
            raise InternalConsistencyError(f"string reconstruction of N_{{0,{n}}} differs from the recursion")
    return result


def check_genus0(n: int, store: PolyStore | None = None) -> IdentityReport:
    report = IdentityReport("genus0", [[0, n]])
    rebuilt = genus0_from_string(n, compare=False)
    built = _store(store).quasi(0, n)
    for k in parity_classes(n):
        report.samples += 1
        if rebuilt[k] != built[k]:
            report.counterexamples.append({"n": n, "k": k, "string": repr(rebuilt[k]), "recursion": repr(built[k])})
    return report
