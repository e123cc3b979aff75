import json

import pytest
from hypothesis import given, strategies as st

from lattice_count.exact import SquaredPoly
from lattice_count.store import (CacheFormatError, PolyStore, dumps, format_rational, loads, parse_rational)


def test_round_trip(store, tmp_path):
    entries = {(g, n, k): store.poly(g, n, k) for g, n in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)]
               for k in range(0, n + 1, 2)}
    assert loads(dumps(entries)) == entries
    path = tmp_path / "cache.json"
    path.write_text(dumps(entries))
    warm = PolyStore(path)
    assert warm.quasi(1, 2) == store.quasi(1, 2)
    assert (1, 2, 2) in warm


@given(st.fractions(max_denominator=10 ** 6))
def test_rational_strings(x):
    assert parse_rational(format_rational(x)) == x


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/2.0", "", "nan", 0.5])
def test_rejects_non_exact(text):
    with pytest.raises(CacheFormatError):
        parse_rational(text)


def test_rejects_bad_documents():
    with pytest.raises(CacheFormatError):
        loads(json.dumps({"version": "2", "entries": []}))
    bad = {"version": "1", "entries": [{"g": 0, "n": 3, "k": 0, "terms": [{"exponents": [0, 0, 0], "coefficient": "0.1"}]}]}
    with pytest.raises(CacheFormatError):
        loads(json.dumps(bad))
    bad["entries"][0]["terms"][0] = {"coefficient": "1"}
    with pytest.raises(CacheFormatError):
        loads(json.dumps(bad))


def test_save_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path, order in ((a, [(1, 1, 0), (0, 3, 0)]), (b, [(0, 3, 0), (1, 1, 0)])):
        s = PolyStore(path)
        for key in order:
            s.poly(*key)
        s.save()
    assert a.read_bytes() == b.read_bytes()
    assert "." not in "".join(t["coefficient"] for e in json.loads(a.read_text())["entries"] for t in e["terms"])


def test_loaded_poly_types():
    doc = dumps({(1, 1, 0): SquaredPoly(1, {(1,): "1/48", (0,): "-1/12"})})
    assert loads(doc)[(1, 1, 0)].coefficient((1,)).denominator == 48
