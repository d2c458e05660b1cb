"""Coefficient fields: the rationals and prime fields F_p."""

from fractions import Fraction
from numbers import Rational

DEFAULT_PRIME = 32003


class RationalField:
    """The field of rational numbers; elements are ``Fraction`` instances."""

    p = None
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} to a rational")

    zero = Fraction(0)
    one = Fraction(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def to_str(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return "Q"


class PrimeField:
    """The prime field F_p for an odd prime p < 2**63; elements are ints in [0, p)."""

    def __init__(self, p=DEFAULT_PRIME):
        p = int(p)
        if p < 3 or p % 2 == 0 or p >= 2**63 or not _is_probable_prime(p):
            raise ValueError(f"{p} is not an odd prime below 2**63")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (Fraction, Rational)):
            x = Fraction(x)
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} to F_{self.p}")

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def to_str(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self):
        return self.p


QQ = RationalField()


def GF(p=DEFAULT_PRIME):
    return PrimeField(p)


def field_from_json(value):
    if value in ("Q", "QQ"):
        return QQ
    return PrimeField(int(value))


def _is_probable_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
