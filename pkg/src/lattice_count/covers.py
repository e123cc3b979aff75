"""Brute-force count of branched covers of the sphere as permutation triples.

A degree ``d`` cover branched over 0, 1 and infinity is a pair
``(s0, s1)`` in S_d with ``s1`` a fixed-point-free involution (profile
(2, ..., 2) over 1), ``s0`` without fixed points (every point over 0
ramified) and ``s_inf = (s0 s1)^-1``. Connected covers are the transitive
pairs; the genus follows from Riemann-Hurwitz,

    2 - 2g = c(s0) + c(s1) + c(s_inf) - d.

Each cover is weighted by 1/|Aut|, which amounts to dividing the number of
triples (with the cycles of ``s_inf`` labeled by 1..n) by ``d!``.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Sequence

from . import _kernels
from .identities import IdentityReport
from .recursion import n_value

MAX_DEGREE = 8


@lru_cache(maxsize=None)
def triple_table(d: int) -> dict:
    """``{(cycle type of s_inf, cycles of s0): number of transitive pairs}``."""
    return dict(_kernels.count_triples(d))


def labelings(b: Sequence[int]) -> int:
    """Ways to label the cycles of a permutation of cycle type ``b`` so that
    cycle ``i`` has length ``b_i``."""
    return prod(factorial(c) for c in Counter(b).values())


def oracle_count(b: Sequence[int], g: int, max_degree: int = MAX_DEGREE) -> Fraction:
    b = tuple(int(x) for x in b)
    if not b or any(x <= 0 for x in b):
        raise ValueError(f"ramification profile must be positive integers, got {b}")
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    d = sum(b)
    if d > max_degree:
        raise ValueError(f"degree {d} exceeds the enumeration bound {max_degree}")
    if d % 2:
        return Fraction(0)
    c0 = 2 - 2 * g - len(b) + d // 2
    if c0 < 1:
        return Fraction(0)
    count = triple_table(d).get((tuple(sorted(b, reverse=True)), c0), 0)
    return Fraction(count * labelings(b), factorial(d))


def compositions(total: int):
    """Ordered tuples of positive integers summing to ``total``."""
    for cuts in product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def admissible_genera(b: Sequence[int]) -> list[int]:
    """Stable genera for which s0 could have at least one cycle."""
    n, d = len(b), sum(b)
    out = []
    g = 0
    while 2 - 2 * g - n + d // 2 >= 1:
        if 2 * g - 2 + n > 0:
            out.append(g)
        g += 1
    return out


def oracle_compare(max_total: int = MAX_DEGREE, max_degree: int = MAX_DEGREE) -> IdentityReport:
    """Compare :func:`oracle_count` with the recursion on every profile of
    total at most ``max_total`` and every stable admissible genus."""
    if max_total > max_degree:
        raise ValueError(f"max_total {max_total} exceeds the enumeration bound {max_degree}")
    report = IdentityReport("oracle")
    seen = set()
    for d in range(1, max_total + 1):
        for b in compositions(d):
            for g in admissible_genera(b):
                seen.add((g, len(b)))
                lhs = oracle_count(b, g, max_degree)
                rhs = n_value(g, b)
                report.samples += 1
                if lhs != rhs:
                    report.counterexamples.append({"g": g, "b": list(b), "oracle": str(lhs), "recursion": str(rhs)})
    report.cases = [list(c) for c in sorted(seen)]
    return report
