"""Exact lattice-point count quasi-polynomials and identity checks."""
