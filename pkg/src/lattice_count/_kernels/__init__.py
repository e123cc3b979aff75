"""Hot inner loops, compiled when available.

The Cython extension ``_ckernels`` is used if it was built; otherwise the
pure-Python ``_fallback`` is imported. Set ``LATTICE_COUNT_PURE=1`` to force
the fallback.
"""
import os

from . import _fallback

BACKEND = "python"
if not os.environ.get("LATTICE_COUNT_PURE"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
else:
    _impl = _fallback

eval_int_terms = _impl.eval_int_terms
count_triples = _impl.count_triples
fixed_point_free_involutions = _fallback.fixed_point_free_involutions
derangements = _fallback.derangements

__all__ = ["BACKEND", "eval_int_terms", "count_triples",
           "fixed_point_free_involutions", "derangements"]
