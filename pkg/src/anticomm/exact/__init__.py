"""Exact arithmetic: fields, sparse polynomials, matrices, univariate tools."""

from .combinat import binomial, factorial, inv_factorial
from .field import DEFAULT_PRIME, GF, QQ, PrimeField, RationalField, field_from_json
from .matrix import Matrix, all_minors, det, det_Y_identity, minimal_polynomial, nullspace, rank, rref
from .poly import MultiPoly

__all__ = [
    "DEFAULT_PRIME", "GF", "QQ", "Matrix", "MultiPoly", "PrimeField", "RationalField",
    "all_minors", "binomial", "det", "det_Y_identity", "factorial", "field_from_json",
    "inv_factorial", "minimal_polynomial", "nullspace", "rank", "rref",
]
