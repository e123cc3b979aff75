"""Built quasi-polynomials keyed by (g, n, k), with an optional JSON cache file.

Cache file layout (UTF-8 JSON, keys sorted)::

    {"version": "1",
     "entries": [{"g": 1, "n": 1, "k": 0, "degree_bound": 1,
                  "variable_order": "odd-first",
                  "terms": [{"exponents": [0], "coefficient": "-1/12"},
                            {"exponents": [1], "coefficient": "1/48"}]}]}

Coefficients are exact ``"p/q"`` strings (or integers written ``"p"``);
floating point is rejected.
"""
from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from pathlib import Path

from .exact import SquaredPoly
from .quasi import LatticeQuasiPolynomial, build_polynomial, check_stable, degree_bound, parity_classes
from .recursion import DEFAULT_MEMO, MemoTable

FORMAT_VERSION = "1"
VARIABLE_ORDER = "odd-first"
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class CacheFormatError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise CacheFormatError(f"not an exact rational string: {text!r}")
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def poly_entry(g: int, n: int, k: int, poly: SquaredPoly) -> dict:
    return {
        "g": g,
        "n": n,
        "k": k,
        "degree_bound": degree_bound(g, n),
        "variable_order": VARIABLE_ORDER,
        "terms": [{"exponents": list(e), "coefficient": format_rational(c)} for e, c in poly.items()],
    }


def entry_poly(entry: dict) -> tuple[tuple, SquaredPoly]:
    try:
        g, n, k = int(entry["g"]), int(entry["n"]), int(entry["k"])
        if entry.get("variable_order", VARIABLE_ORDER) != VARIABLE_ORDER:
            raise CacheFormatError(f"unsupported variable order {entry['variable_order']!r}")
        terms = {}
        for t in entry["terms"]:
            exps = tuple(t["exponents"])
            if any(not isinstance(e, int) or e < 0 for e in exps):
                raise CacheFormatError(f"bad exponent vector {exps}")
            terms[exps] = parse_rational(t["coefficient"])
    except (KeyError, TypeError) as exc:
        raise CacheFormatError(f"malformed cache entry: {exc}") from None
    return (g, n, k), SquaredPoly(n, terms)


def dumps(entries: dict) -> str:
    doc = {"version": FORMAT_VERSION,
           "entries": [poly_entry(g, n, k, p) for (g, n, k), p in sorted(entries.items())]}
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def loads(text: str) -> dict:
    doc = json.loads(text)
    if str(doc.get("version")) != FORMAT_VERSION:
        raise CacheFormatError(f"unsupported cache version {doc.get('version')!r}")
    out = {}
    for entry in doc.get("entries", []):
        key, poly = entry_poly(entry)
        out[key] = poly
    return out


class PolyStore:
    """Builds each N^{(k)}_{g,n} once; optionally backed by a cache file."""

    def __init__(self, cache_path: str | os.PathLike | None = None, memo: MemoTable | None = None):
        self.memo = DEFAULT_MEMO if memo is None else memo
        self.cache_path = Path(cache_path) if cache_path else None
        self._polys: dict[tuple, SquaredPoly] = {}
        self._dirty = False
        if self.cache_path and self.cache_path.exists():
            self._polys.update(loads(self.cache_path.read_text(encoding="utf-8")))

    def poly(self, g: int, n: int, k: int) -> SquaredPoly:
        key = (g, n, k)
        if key not in self._polys:
            self._polys[key] = build_polynomial(g, n, k, self.memo)
            self._dirty = True
        return self._polys[key]

    def quasi(self, g: int, n: int) -> LatticeQuasiPolynomial:
        check_stable(g, n)
        return LatticeQuasiPolynomial(g, n, {k: self.poly(g, n, k) for k in parity_classes(n)})

    def __contains__(self, key) -> bool:
        return key in self._polys

    def entries(self) -> dict:
        return dict(self._polys)

    def save(self):
        if self.cache_path and self._dirty:
            tmp = self.cache_path.with_suffix(self.cache_path.suffix + ".tmp")
            tmp.write_text(dumps(self._polys), encoding="utf-8")
            tmp.replace(self.cache_path)
            self._dirty = False


_DEFAULT_STORE: PolyStore | None = None


def default_store() -> PolyStore:
    global _DEFAULT_STORE
    if _DEFAULT_STORE is None:
        _DEFAULT_STORE = PolyStore()
    return _DEFAULT_STORE
