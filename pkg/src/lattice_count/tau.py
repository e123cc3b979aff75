"""Tau brackets: rescaled coefficients of the parity-class polynomials.

For ``m = (m_1, ..., m_n)`` and a sign per argument (``-`` for an odd
argument, ``+`` for an even one) the bracket is

    2^(2|m| - g) * m! * (3g - 3 + n - |m|)! * c^(k)_m

where ``c^(k)_m`` is the coefficient of ``u_1^m_1 ... u_n^m_n`` in
N^{(k)}_{g,n}, ``k`` is the number of ``-`` signs and ``m! = prod m_i!``.
At top degree ``|m| = 3g - 3 + n`` the bracket is an intersection number
and does not depend on ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Sequence

from .exact import distinct_permutations
from .identities import IdentityReport
from .quasi import InternalConsistencyError, check_stable, degree_bound, parity_classes
from .store import PolyStore, default_store


@dataclass(frozen=True)
class TauIndex:
    g: int
    m: tuple
    signs: tuple

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        signs = tuple(self.signs)
        if len(m) != len(signs):
            raise ValueError(f"{len(m)} exponents but {len(signs)} signs")
        if any(x < 0 for x in m):
            raise ValueError(f"exponents must be nonnegative, got {m}")
        if any(s not in "+-" for s in signs):
            raise ValueError(f"signs must be '+' or '-', got {signs}")
        # odd (-) slots first; entries keep their pairing with m
        pairs = sorted(zip(signs, m), key=lambda p: p[0] != "-")
        object.__setattr__(self, "m", tuple(x for _, x in pairs))
        object.__setattr__(self, "signs", tuple(s for s, _ in pairs))

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def k(self) -> int:
        return self.signs.count("-")

    @property
    def size(self) -> int:
        return sum(self.m)

    @property
    def s(self) -> int:
        return degree_bound(self.g, self.n) - self.size


def parse_signs(text: str) -> tuple:
    """``"+-+"`` or ``"+,-,+"`` to a tuple of signs."""
    return tuple(ch for ch in text if ch in "+-") if text else ()


def tau_bracket(g: int, m: Sequence[int], signs: Sequence[str] | str | None = None,
                store: PolyStore | None = None) -> Fraction:
    if signs is None:
        signs = "+" * len(m)
    if isinstance(signs, str):
        signs = parse_signs(signs)
    idx = TauIndex(g, tuple(m), tuple(signs))
    check_stable(g, idx.n)
    if idx.k % 2 or idx.s < 0:
        return Fraction(0)
    store = default_store() if store is None else store
    c = store.poly(g, idx.n, idx.k).coefficient(idx.m)
    if not c:
        return Fraction(0)
    scale = Fraction(2) ** (2 * idx.size - g) * prod(factorial(x) for x in idx.m) * factorial(idx.s)
    return scale * c


def intersection_number(g: int, m: Sequence[int], store: PolyStore | None = None) -> Fraction:
    """Top-degree bracket, checked to be the same for every even sign count."""
    m = tuple(m)
    n = len(m)
    check_stable(g, n)
    if sum(m) != degree_bound(g, n):
        raise ValueError(f"|m| = {sum(m)} but an intersection number needs |m| = 3g-3+n = {degree_bound(g, n)}")
    values = {k: tau_bracket(g, m, "-" * k + "+" * (n - k), store) for k in parity_classes(n)}
    if len(set(values.values())) > 1:
        raise InternalConsistencyError(f"top-degree bracket for g={g}, m={m} depends on the sign count: {values}")
    return values[0]


def check_top_degree(g: int, n: int, store: PolyStore | None = None) -> IdentityReport:
    """Top homogeneous parts of all N^{(k)}_{g,n} coincide, and so do the
    top-degree brackets over every sign assignment."""
    check_stable(g, n)
    store = default_store() if store is None else store
    D = degree_bound(g, n)
    report = IdentityReport("tau-top", [[g, n]])
    tops = {k: store.poly(g, n, k).homogeneous_part(D) for k in parity_classes(n)}
    for k, top in tops.items():
        report.samples += 1
        if top != tops[0]:
            report.counterexamples.append({"g": g, "n": n, "k": k, "top": repr(top), "top_k0": repr(tops[0])})
    for sorted_m in combinations_with_replacement(range(D + 1), n):
        if sum(sorted_m) != D:
            continue
        for m in distinct_permutations(sorted_m):
            values = {}
            for k in parity_classes(n):
                for pattern in distinct_permutations("-" * k + "+" * (n - k)):
                    values[(k, "".join(pattern))] = tau_bracket(g, m, pattern, store)
            report.samples += len(values)
            if len(set(values.values())) > 1:
                report.counterexamples.append({"g": g, "n": n, "m": list(m),
                                               "values": {f"{k}:{p}": str(v) for (k, p), v in sorted(values.items())}})
    return report
