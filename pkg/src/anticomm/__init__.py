"""Anticommutative k-ary algebras: subalgebra counts, dual-variety degrees, and finite-field enumeration."""

__version__ = "0.1.0"
