"""Memoized factorials and binomials in arbitrary precision."""

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def factorial(n):
    if n < 0:
        raise ValueError("factorial of negative integer")
    return 1 if n < 2 else n * factorial(n - 1)


@lru_cache(maxsize=None)
def binomial(n, k):
    """C(n, k) for n >= 0, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def inv_factorial(n):
    """1/n! as a Fraction, with the convention 1/n! = 0 for n < 0."""
    from fractions import Fraction

    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))
