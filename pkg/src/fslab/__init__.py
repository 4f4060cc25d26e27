"""Exact lattice-theoretic invariants of finite rings and modules."""
