"""Parity-class polynomials N^{(k)}_{g,n} reconstructed from recursion values.

Variables are in canonical order: the ``k`` odd-class variables first, then
the ``n - k`` even-class ones. Every polynomial is in ``u_i = b_i**2``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import GridSpec, SquaredPoly, distinct_permutations, partitions, poly_interpolate
from .recursion import DEFAULT_MEMO, MemoTable, n_value

# tensor grids larger than this are fitted in a symmetric basis instead
TENSOR_LIMIT = 1024
CROSS_CHECKS = 10


class InternalConsistencyError(RuntimeError):
    """A result failed an exact self-check (degree bound, closed form, ...)."""


def check_stable(g: int, n: int):
    if g < 0 or n < 1 or 2 * g - 2 + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is not stable: need 2g - 2 + n > 0 and n >= 1")


def degree_bound(g: int, n: int) -> int:
    return 3 * g - 3 + n


def parity_classes(n: int) -> list[int]:
    return list(range(0, n + 1, 2))


@dataclass
class LatticeQuasiPolynomial:
    """N_{g,n} as one polynomial per even count ``k`` of odd arguments."""

    g: int
    n: int
    polys: dict = field(default_factory=dict)

    def __post_init__(self):
        for k, p in self.polys.items():
            if k % 2 or not 0 <= k <= self.n:
                raise ValueError(f"invalid parity class {k} for n={self.n}")
            if p.num_vars != self.n:
                raise ValueError(f"class {k} polynomial has {p.num_vars} variables, expected {self.n}")

    def __getitem__(self, k: int) -> SquaredPoly:
        if k % 2:
            return SquaredPoly(self.n)
        return self.polys[k]

    def __call__(self, *b):
        return qp_eval(self, b)

    def __eq__(self, other):
        if not isinstance(other, LatticeQuasiPolynomial):
            return NotImplemented
        return (self.g, self.n, self.polys) == (other.g, other.n, other.polys)


def canonical_order(b: Sequence[int]) -> tuple[tuple, int]:
    odd = [x for x in b if x % 2]
    even = [x for x in b if not x % 2]
    return tuple(odd + even), len(odd)


def qp_eval(qp: LatticeQuasiPolynomial, b: Sequence[int]) -> Fraction:
    """Value of the quasi-polynomial at nonnegative integers ``b`` (zeros allowed)."""
    if len(b) != qp.n:
        raise ValueError(f"N_{{{qp.g},{qp.n}}} takes {qp.n} arguments, got {len(b)}")
    if any(int(x) != x or x < 0 for x in b):
        raise ValueError(f"arguments must be nonnegative integers, got {tuple(b)}")
    ordered, k = canonical_order([int(x) for x in b])
    if k % 2:
        return Fraction(0)
    return qp.polys[k].eval_at_b(ordered)


# sampling helpers

def _class_nodes(k: int, n: int, D: int):
    odd = [2 * i + 1 for i in range(D + 1)]
    even = [2 * i + 2 for i in range(D + 1)]
    return odd, even


def _fresh_points(g: int, n: int, k: int, D: int, count: int) -> list[tuple]:
    """Points with one coordinate just beyond the sampling grid; the rest
    are small so the recursion stays cheap."""
    rng = random.Random(f"{g}/{n}/{k}")
    small = min(D, 2)
    pts = []
    while len(pts) < count:
        b = [2 * rng.randint(0, small) + 1 for _ in range(k)] + [2 * rng.randint(0, small) + 2 for _ in range(n - k)]
        i = rng.randrange(n)
        b[i] = 2 * D + 3 + (0 if i < k else 1) + 2 * rng.randint(0, 1)
        pts.append(tuple(b))
    return pts


def _symmetric_basis(n: int, k: int, D: int) -> list[SquaredPoly]:
    """Orbit sums m_lambda(odd vars) * m_mu(even vars) of total degree <= D."""
    basis = []
    for total in range(D + 1):
        for a in range(total + 1):
            for lam in partitions(a, k):
                for mu in partitions(total - a, n - k):
                    odd_exps = distinct_permutations(lam + (0,) * (k - len(lam)))
                    even_exps = distinct_permutations(mu + (0,) * (n - k - len(mu)))
                    terms = {eo + ee: 1 for eo in odd_exps for ee in even_exps}
                    basis.append(SquaredPoly(n, terms))
    return basis


def _canonical_grid_points(k: int, n: int, D: int) -> list[tuple]:
    from itertools import combinations_with_replacement as cwr
    odd, even = _class_nodes(k, n, D)
    pts = [o + e for o in cwr(odd, k) for e in cwr(even, n - k)]
    pts.sort(key=lambda b: (sum(b), b))
    return pts


def _fit_symmetric(g: int, n: int, k: int, D: int, memo: MemoTable) -> SquaredPoly:
    basis = _symmetric_basis(n, k, D)
    m = len(basis)
    echelon: dict[int, list] = {}  # pivot column -> reduced row
    chosen = []
    for b in _canonical_grid_points(k, n, D):
        row = [p.eval_at_b(b) for p in basis]
        red = list(row)
        for col, prow in echelon.items():
            if red[col]:
                f = red[col] / prow[col]
                red = [x - f * y for x, y in zip(red, prow)]
        piv = next((i for i, x in enumerate(red) if x), None)
        if piv is None:
            continue
        echelon[piv] = red
        chosen.append((b, row))
        if len(chosen) == m:
            break
    if len(chosen) < m:
        raise InternalConsistencyError(f"symmetric basis for ({g},{n},k={k}) not determined by the grid")
    from .exact import solve_exact
    rows = [row for _, row in chosen]
    rhs = [n_value(g, b, memo) for b, _ in chosen]
    coeffs, rank = solve_exact(rows, rhs)
    if coeffs is None:
        raise InternalConsistencyError(f"singular symmetric fit for ({g},{n},k={k}), rank {rank}/{m}")
    out = SquaredPoly(n)
    for c, p in zip(coeffs, basis):
        if c:
            out = out + p * c
    return out


def _fit_tensor(g: int, n: int, k: int, D: int, memo: MemoTable) -> SquaredPoly:
    grid = GridSpec.for_parity_class(n, k, D)
    values = {b: n_value(g, b, memo) for b in grid.points()}
    return poly_interpolate(grid, values)


def build_polynomial(g: int, n: int, k: int, memo: MemoTable | None = None,
                     method: str = "auto") -> SquaredPoly:
    """Reconstruct N^{(k)}_{g,n} from recursion values and cross-validate it.

    ``method`` is ``"tensor"`` (full tensor grid, per-variable degree
    ``3g-3+n``), ``"symmetric"`` (orbit-sum basis of total degree
    ``3g-3+n`` fitted on sorted grid points) or ``"auto"``.
    """
    check_stable(g, n)
    if k % 2 or not 0 <= k <= n:
        raise ValueError(f"parity class k={k} must be even and between 0 and {n}")
    memo = DEFAULT_MEMO if memo is None else memo
    D = degree_bound(g, n)
    if method == "auto":
        method = "tensor" if (D + 1) ** n <= TENSOR_LIMIT else "symmetric"
    if method == "tensor":
        poly = _fit_tensor(g, n, k, D, memo)
    elif method == "symmetric":
        poly = _fit_symmetric(g, n, k, D, memo)
    else:
        raise ValueError(f"unknown interpolation method {method!r}")
    for b in _fresh_points(g, n, k, D, CROSS_CHECKS):
        expected = n_value(g, b, memo)
        got = poly.eval_at_b(b)
        if got != expected:
            raise InternalConsistencyError(
                f"N^({k})_{{{g},{n}}} fails cross-validation at {b}: polynomial {got}, recursion {expected}")
    return poly


def build_quasi(g: int, n: int, memo: MemoTable | None = None, method: str = "auto") -> LatticeQuasiPolynomial:
    check_stable(g, n)
    return LatticeQuasiPolynomial(g, n, {k: build_polynomial(g, n, k, memo, method) for k in parity_classes(n)})
