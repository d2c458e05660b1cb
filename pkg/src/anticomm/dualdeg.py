"""Degree of the dual of the flag variety {V1 in V2 in C^n} in its weight embedding.

The Chow ring of Z = {(V1, V2)} is Q[X, Y]/(f1, f2) with
f1 = X^(n-1) + X^(n-2) Y + ... + Y^(n-1) and f2 = X^n.  Under lex order with
Y > X these form a Groebner basis (coprime leading terms Y^(n-1), X^n), the
standard monomials are X^i Y^j for i < n, j < n - 1, and integration reads
off the coefficient of X^(n-1) Y^(n-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import QQ, MultiPoly, binomial

GENS = ("X", "Y")


@dataclass(frozen=True)
class FlagChowRing:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")

    @property
    def top(self):
        return (self.n - 1, self.n - 2)

    @property
    def dimension(self):
        """Dimension of Z, equal to the top degree 2n - 3."""
        return 2 * self.n - 3

    def basis(self):
        return [(i, j) for i in range(self.n) for j in range(self.n - 1)]

    def f1(self):
        n = self.n
        return MultiPoly(GENS, {(n - 1 - i, i): 1 for i in range(n)}, QQ)

    def f2(self):
        return MultiPoly(GENS, {(self.n, 0): 1}, QQ)

    def X(self):
        return MultiPoly.gen("X", GENS, QQ)

    def Y(self):
        return MultiPoly.gen("Y", GENS, QQ)


@dataclass(frozen=True)
class WeightParams:
    """Weight (a - b) phi_1 + b phi_2; first Chern class aX + bY.

    a == b collapses the orbit to a Grassmannian, so such weights are marked
    degenerate.
    """

    a: int
    b: int = 1

    def __post_init__(self):
        if not self.a >= self.b >= 1:
            raise ValueError(f"need a >= b >= 1, got a={self.a}, b={self.b}")

    @property
    def degenerate(self):
        return self.a == self.b


def _as_weight(w):
    if isinstance(w, WeightParams):
        return w
    if isinstance(w, int):
        return WeightParams(w)
    return WeightParams(*w)


def reduce(p, ring):
    """Normal form modulo (f1, f2), supported on the basis box."""
    n = ring.n
    out = {}
    # Processing in decreasing Y then X keeps rewriting monotone.
    work = {e: c for e, c in p.terms.items()}
    while work:
        e = max(work, key=lambda t: (t[1], t[0]))
        c = work.pop(e)
        i, j = e
        if i >= n:
            continue
        if j >= n - 1:
            # Y^(n-1) = -(X^(n-1) + X^(n-2) Y + ... + X Y^(n-2))
            shift = j - (n - 1)
            for t in range(n - 1):
                ne = (i + n - 1 - t, shift + t)
                v = work.get(ne, 0) - c
                if v:
                    work[ne] = v
                else:
                    work.pop(ne, None)
            continue
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return MultiPoly(GENS, out, QQ)


def integrate(p, ring):
    """Coefficient of X^(n-1) Y^(n-2) in the normal form."""
    return reduce(p, ring).coeff(ring.top)


def _complete_homogeneous(i):
    return MultiPoly(GENS, {(i - t, t): 1 for t in range(i + 1)}, QQ)


def cotangent_chern_class(ring):
    """Total Chern class of the cotangent bundle of Z, reduced.

    (1 - X + Y) prod_{i>=3} (1 - X + x_i) prod_{i>=3} (1 - Y + x_i), with the
    i-th elementary symmetric function of x_3..x_n replaced by
    (-1)^i h_i(X, Y).
    """
    n = ring.n
    one = MultiPoly.one(GENS, QQ)
    X, Y = ring.X(), ring.Y()

    def product(shift):
        # prod (t + x_i) = sum_i t^(n-2-i) e_i with t = 1 - shift
        total = MultiPoly.zero(GENS, QQ)
        t = one - shift
        for i in range(n - 1):
            e_i = _complete_homogeneous(i) * (-1) ** i
            total = total + reduce(t ** (n - 2 - i) * e_i, ring)
        return total

    c = reduce((one - X + Y) * product(X), ring)
    return reduce(c * product(Y), ring)


def kleiman_degree(n, w):
    """deg of the dual variety: sum_i (i + 1) int c_{l-i}(Omega) c_1(L)^i, l = 2n - 3."""
    w = _as_weight(w)
    if n < 3:
        raise ValueError("need n >= 3")
    ring = FlagChowRing(n)
    c = cotangent_chern_class(ring)
    l = ring.dimension
    h = MultiPoly(GENS, {(1, 0): w.a, (0, 1): w.b}, QQ)
    total = MultiPoly.zero(GENS, QQ)
    power = MultiPoly.one(GENS, QQ)
    for i in range(l + 1):
        total = total + reduce(c.homogeneous_component(l - i) * power, ring) * (i + 1)
        power = reduce(power * h, ring)
    value = integrate(total, ring)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral degree {value}")
    return int(value)


def bgg_operator(f, i, j):
    """(f - f with x_i, x_j swapped) / (x_i - x_j); indices are 1-based."""
    if i == j:
        raise ValueError("need distinct indices")
    i0, j0 = i - 1, j - 1
    diff = f - f.swap(i0, j0)
    if not diff.terms:
        return MultiPoly.zero(f.gens, f.field)
    xi = MultiPoly.gen(f.gens[i0], f.gens, f.field)
    xj = MultiPoly.gen(f.gens[j0], f.gens, f.field)
    return diff.exact_div(xi - xj)


def bgg_word(n):
    """Transpositions of A_{w0} in application order (rightmost factor first)."""
    rho1 = [(t, t + 1) for t in range(n - 1, 0, -1)]  # (n-1,n)(n-2,n-1)...(12)
    rho2 = [(t, t + 1) for t in range(n - 1, 1, -1)]  # (n-1,n)...(23)
    written = rho1 + rho2
    return list(reversed(written))


def bgg_normalization(n):
    """A_{w0}(x1^(n-1) x2^(n-2)) in Q[x1..xn]; the result must be the constant 1."""
    if n < 3:
        raise ValueError("need n >= 3")
    gens = tuple(f"x{i}" for i in range(1, n + 1))
    exps = [0] * n
    exps[0], exps[1] = n - 1, n - 2
    f = MultiPoly.monomial(exps, gens, 1, QQ)
    for i, j in bgg_word(n):
        f = bgg_operator(f, i, j)
    if not f.is_constant():
        raise ArithmeticError(f"A_w0 produced a non-constant {f}")
    return f.constant_value()


def dual_degree_closed_form(n, a):
    """((n^2 - n) a^(n+1) - (n^2 + n) a^(n-1) - 2n (-1)^n) / (a + 1)^2."""
    if n < 3 or a < 2:
        raise ValueError("need n >= 3 and a >= 2")
    num = (n * n - n) * a ** (n + 1) - (n * n + n) * a ** (n - 1) - 2 * n * (-1) ** n
    q, r = divmod(num, (a + 1) ** 2)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {(a + 1) ** 2}")
    return q


def dual_degree_weight_two(n):
    """((3n^2 - 5n) 2^n - 4n (-1)^n) / 18."""
    if n < 4:
        raise ValueError("need n >= 4")
    num = (3 * n * n - 5 * n) * 2**n - 4 * n * (-1) ** n
    q, r = divmod(num, 18)
    if r:
        raise ArithmeticError(f"{num} is not divisible by 18")
    return q


@lru_cache(maxsize=None)
def square_symbol(n, k, x, y):
    """sum_{p<=k} sum_{q<=n-k} (-1)^(p+q) x^p y^q C(p+q, p); empty (0) unless 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return sum(
        (-1) ** (p + q) * x**p * y**q * binomial(p + q, p)
        for p in range(k + 1)
        for q in range(n - k + 1)
    )


@lru_cache(maxsize=None)
def brace_symbol(n, k, x, y):
    """As :func:`square_symbol` with an extra weight (p + q + 1)."""
    if k < 0 or k > n:
        return 0
    return sum(
        (p + q + 1) * (-1) ** (p + q) * x**p * y**q * binomial(p + q, p)
        for p in range(k + 1)
        for q in range(n - k + 1)
    )


def bracket_degree(n, w):
    """The dual degree from the closed bracket/brace expression, for weight (a-b, b)."""
    w = _as_weight(w)
    if n < 3:
        raise ValueError("need n >= 3")
    a, b = w.a, w.b
    sq, br = square_symbol, brace_symbol
    sign = (-1) ** n
    first = 0
    second = 0
    for i in range(n):
        left = (
            sign * n * (a - 1) ** (n - 1 - i) * b**i * binomial(n - 1, i)
            + sq(n - 1, n - 1 - i, a - 1, b)
            - sq(n - 2, n - 1 - i, a - 1, b)
        )
        right = sq(n - 2, i, a, b - 1) - sq(n - 2, i - 1, a, b - 1)
        first += left * right
        left2 = sq(n - 1, n - 1 - i, a - 1, b) - sq(n - 2, n - 1 - i, a - 1, b) - 1
        right2 = (
            br(n - 2, i, a, b - 1)
            - br(n - 3, i, a, b - 1)
            - br(n - 2, i - 1, a, b - 1)
            + br(n - 3, i - 1, a, b - 1)
        )
        second += left2 * right2
    return first - second
