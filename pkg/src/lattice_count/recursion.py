"""Values N_{g,n}(b_1, ..., b_n) at positive integer tuples by the main
recursion, memoized on parity-sorted keys.

The recursion removes the argument ``b_0`` and expresses
``b_0 * N_{g,n+1}(b_0, b_S)`` through N of strictly smaller ``2g - 2 + n``:

* for each remaining ``b_j``, half of the sum of ``p*q*N_{g,n}(b_S | b_j = p)``
  over ``p + q = b_0 + b_j`` plus the same sum over ``p + q = |b_0 - b_j|``,
  the latter negated when ``b_0 < b_j``;
* half the sum over ``p + q + r = b_0`` of ``p*q*r`` times
  ``N_{g-1,n+2}(p, q, b_S)`` plus all products
  ``N_{g1,|I|+1}(p, b_I) * N_{g2,|J|+1}(q, b_J)`` with ``g1 + g2 = g`` and
  ``I`` and ``J`` partitioning ``S``.

Base cases are N_{0,3} = 1 and N_{1,1}(b) = (b^2 - 4)/48; unstable
``(g, n)`` evaluate to 0.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class InconsistentMemoWrite(RuntimeError):
    pass


def canonical(b: Sequence[int]) -> tuple:
    """Odd entries ascending, then even entries ascending."""
    return tuple(sorted(x for x in b if x & 1)) + tuple(sorted(x for x in b if not x & 1))


def complexity(g: int, n: int) -> int:
    return 2 * g - 2 + n


class MemoTable:
    """Write-once cache ``(g, canonical b) -> value``."""

    def __init__(self):
        self._data: dict[tuple, Fraction] = {}

    def get(self, g: int, b: Sequence[int]):
        return self._data.get((g, canonical(b)))

    def put(self, g: int, b: Sequence[int], value: Fraction) -> Fraction:
        key = (g, canonical(b))
        old = self._data.setdefault(key, value)
        if old != value:
            raise InconsistentMemoWrite(f"memo key {key} already holds {old}, refusing {value}")
        return old

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        g, b = key
        return (g, canonical(b)) in self._data

    def clear(self):
        self._data.clear()


DEFAULT_MEMO = MemoTable()


def choose_pivot(b: Sequence[int]) -> int:
    """Index of a maximal entry, lowest index on ties."""
    if not b:
        raise ValueError("empty tuple has no pivot")
    best = 0
    for i, x in enumerate(b):
        if x > b[best]:
            best = i
    return best


def n_value(g: int, b: Sequence[int], memo: MemoTable | None = None,
            pivot: int | None = None) -> Fraction:
    """N_{g,n}(b) for positive integers ``b``.

    ``pivot`` forces which argument plays ``b_0`` in the top-level step
    (the default is :func:`choose_pivot`); deeper calls always use the
    default. ``memo=None`` uses the module-level table.
    """
    b = tuple(int(x) for x in b)
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if not b:
        raise ValueError("need at least one argument")
    if any(x <= 0 for x in b):
        raise ValueError(f"n_value needs positive arguments, got {b}; evaluate zeros through the polynomial")
    if memo is None:
        memo = DEFAULT_MEMO
    if pivot is None:
        return _n(g, b, memo)
    if not 0 <= pivot < len(b):
        raise IndexError(f"pivot {pivot} out of range for {len(b)} arguments")
    early = _trivial(g, b)
    if early is not None:
        return early
    return _step(g, b, pivot, memo)


def _trivial(g: int, b: tuple):
    n = len(b)
    if sum(b) & 1:
        return ZERO
    if g == 0 and n == 3:
        return ONE
    if g == 1 and n == 1:
        return Fraction(b[0] * b[0] - 4, 48)
    if 2 * g - 2 + n <= 0:
        return ZERO
    return None


def _n(g: int, b: tuple, memo: MemoTable) -> Fraction:
    early = _trivial(g, b)
    if early is not None:
        return early
    key = (g, canonical(b))
    hit = memo._data.get(key)
    if hit is not None:
        return hit
    value = _step(g, key[1], choose_pivot(key[1]), memo)
    memo._data[key] = value
    return value


def _step(g: int, b: tuple, pivot: int, memo: MemoTable) -> Fraction:
    b0 = b[pivot]
    rest = b[:pivot] + b[pivot + 1:]
    n = len(rest)
    total = ZERO

    # contributions where b_0 and b_j merge
    if n:
        half = ZERO
        for j in range(n):
            bj = rest[j]
            others = rest[:j] + rest[j + 1:]
            acc = ZERO
            s = b0 + bj
            for p in range(1, s):
                v = _n(g, others + (p,), memo)
                if v:
                    acc += p * (s - p) * v
            d = b0 - bj
            if d:
                a = abs(d)
                diff = ZERO
                for p in range(1, a):
                    v = _n(g, others + (p,), memo)
                    if v:
                        diff += p * (a - p) * v
                acc = acc + diff if d > 0 else acc - diff
            half += acc
        total += half / 2

    # contributions where b_0 splits off two new boundaries
    if b0 >= 3:
        split = _split_table(g, rest, b0, memo)
        acc = ZERO
        for p in range(1, b0 - 1):
            for q in range(1, b0 - p):
                r = b0 - p - q
                inner = split(p, q)
                if inner:
                    acc += p * q * r * inner
        total += acc / 2
    return total / b0


def _split_table(g: int, rest: tuple, b0: int, memo: MemoTable):
    """Return ``f(p, q)`` giving the bracketed genus-reduction and
    splitting term for arguments ``p, q < b0``."""
    n = len(rest)
    idx = range(n)
    # factor values N_{g1,|I|+1}(p, b_I) for each stable (g1, I)
    factors: dict[tuple, list] = {}
    subsets = []
    for size in range(n + 1):
        for I in itertools.combinations(idx, size):
            subsets.append(I)
    for g1 in range(g + 1):
        for I in subsets:
            if 2 * g1 - 1 + len(I) <= 0:
                continue
            bI = tuple(rest[i] for i in I)
            factors[(g1, I)] = [ZERO] + [_n(g1, (p,) + bI, memo) for p in range(1, b0)]
    pairs = []
    full = set(idx)
    for (g1, I), fI in factors.items():
        J = tuple(sorted(full.difference(I)))
        fJ = factors.get((g - g1, J))
        if fJ is not None:
            pairs.append((fI, fJ))
    reduce_genus = g >= 1

    def f(p: int, q: int) -> Fraction:
        v = _n(g - 1, (p, q) + rest, memo) if reduce_genus else ZERO
        for fI, fJ in pairs:
            x = fI[p]
            if x:
                y = fJ[q]
                if y:
                    v += x * y
        return v

    return f
