import os
import random
import subprocess
import sys

import pytest

from lattice_count import _kernels
from lattice_count._kernels import _fallback

try:
    from lattice_count._kernels import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_fallback] + ([_ckernels] if _ckernels else [])


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_eval_int_terms(mod):
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(1, 4)
        terms = [(rng.randint(-10 ** 20, 10 ** 20), tuple(rng.randint(0, 5) for _ in range(n))) for _ in range(5)]
        u = [rng.randint(0, 400) for _ in range(n)]
        expected = sum(c * eval("*".join(["1"] + [f"{x}**{e}" for x, e in zip(u, exps)])) for c, exps in terms)
        assert mod.eval_int_terms(terms, u) == expected


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_count_triples_small(mod):
    # degree 2: s1 = s0 = (12), s0*s1 = id with two fixed points
    assert dict(mod.count_triples(2)) == {((1, 1), 1): 1}
    assert dict(mod.count_triples(3)) == {}
    table = dict(mod.count_triples(4))
    assert sum(table.values()) <= 3 * 9


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@pytest.mark.parametrize("d", [2, 4, 6])
def test_backends_agree(d):
    assert dict(_ckernels.count_triples(d)) == _fallback.count_triples(d)


def test_enumeration_sizes():
    assert len(_fallback.fixed_point_free_involutions(6)) == 15
    assert len(_fallback.derangements(5)) == 44


def test_pure_python_switch():
    env = dict(os.environ, LATTICE_COUNT_PURE="1")
    code = "from lattice_count import _kernels; from lattice_count.recursion import n_value; " \
           "print(_kernels.BACKEND, n_value(2, (8,)))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split() == ["python", "21/8"]


def test_selected_backend():
    forced = bool(os.environ.get("LATTICE_COUNT_PURE"))
    assert _kernels.BACKEND == ("cython" if _ckernels and not forced else "python")
