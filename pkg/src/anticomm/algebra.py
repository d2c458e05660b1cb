"""Explicit n-dimensional k-argument anticommutative algebras.

An algebra stores [e_I] for every increasing k-tuple I of basis indices
(0-based).  Evaluation on arbitrary vectors uses multilinearity and full
antisymmetry: [v_1, ..., v_k] = sum_I det(V[:, I]) [e_I].
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from .exact import GF, QQ, MultiPoly, all_minors, field_from_json, minimal_polynomial, nullspace, rref
from .exact import univariate


def _zero_of(vectors, field):
    for v in vectors:
        for x in v:
            if isinstance(x, MultiPoly):
                return MultiPoly.zero(x.gens, x.field)
    return field.zero


def _sort_sign(indices):
    """Sign of the permutation sorting ``indices``, or 0 if an index repeats."""
    idx = list(indices)
    if len(set(idx)) < len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


@dataclass(eq=False)
class AlternatingForm:
    """An alternating form of the given arity on F^n, stored on increasing tuples."""

    n: int
    arity: int
    field: object
    values: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, v in self.values.items():
            sign, key = _sort_sign(idx)
            if sign == 0:
                continue
            clean[key] = self.field(clean.get(key, 0) + sign * self.field(v))
        self.values = {
            I: clean.get(I, self.field.zero) for I in combinations(range(self.n), self.arity)
        }

    def __eq__(self, other):
        return (
            isinstance(other, AlternatingForm)
            and (self.n, self.arity, self.field) == (other.n, other.arity, other.field)
            and self.values == other.values
        )

    def is_zero(self):
        return not any(self.values.values())

    def scale(self, c):
        c = self.field(c)
        return AlternatingForm(self.n, self.arity, self.field, {I: v * c for I, v in self.values.items()})

    def __call__(self, *vectors):
        if len(vectors) != self.arity:
            raise ValueError(f"form takes {self.arity} vectors")
        if self.arity == 0:
            return self.values[()]
        minors = all_minors([list(v) for v in vectors], _zero_of(vectors, self.field))
        total = _zero_of(vectors, self.field)
        for I, c in self.values.items():
            if c:
                total = total + minors[I] * c
        return total if isinstance(total, MultiPoly) else self.field(total)


TraceForm = AlternatingForm


@dataclass(eq=False)
class AnticommAlgebra:
    n: int
    k: int
    field: object
    brackets: dict = dc_field(default_factory=dict)
    seed: object = None

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        clean = {}
        for idx, vec in self.brackets.items():
            vec = list(vec)
            if len(vec) != self.n:
                raise ValueError(f"bracket value {vec} has wrong length")
            sign, key = _sort_sign(idx)
            if sign == 0:
                if any(self.field(x) for x in vec):
                    raise ValueError(f"repeated arguments {idx} must give zero")
                continue
            old = clean.get(key, [0] * self.n)
            clean[key] = [self.field(o + sign * self.field(x)) for o, x in zip(old, vec)]
        zero = (self.field.zero,) * self.n
        self.brackets = {
            I: tuple(clean[I]) if I in clean else zero
            for I in combinations(range(self.n), self.k)
        }

    @classmethod
    def zero(cls, n, k, field=QQ):
        return cls(n, k, field, {})

    def __eq__(self, other):
        return (
            isinstance(other, AnticommAlgebra)
            and (self.n, self.k, self.field) == (other.n, other.k, other.field)
            and self.brackets == other.brackets
        )

    def is_zero(self):
        return not any(any(v) for v in self.brackets.values())

    def _combine(self, other, sign):
        if (self.n, self.k, self.field) != (other.n, other.k, other.field):
            raise ValueError("algebras live in different spaces")
        f = self.field
        return AnticommAlgebra(
            self.n, self.k, f,
            {I: [f(a + sign * b) for a, b in zip(v, other.brackets[I])] for I, v in self.brackets.items()},
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def basis_bracket(self, indices):
        """[e_{i1}, ..., e_{ik}] for indices in any order."""
        sign, key = _sort_sign(indices)
        if sign == 0:
            return (self.field.zero,) * self.n
        vec = self.brackets[key]
        return vec if sign > 0 else tuple(self.field(-x) for x in vec)

    def evaluate(self, *args):
        """Multilinear antisymmetric extension of the stored brackets.

        Arguments are coordinate vectors; entries may be field elements or
        polynomials over the same field.
        """
        if len(args) != self.k:
            raise ValueError(f"bracket takes {self.k} vectors, got {len(args)}")
        if any(len(v) != self.n for v in args):
            raise ValueError("dimension mismatch")
        zero = _zero_of(args, self.field)
        minors = all_minors([list(v) for v in args], zero)
        out = [zero] * self.n
        for I, vec in self.brackets.items():
            m = minors[I]
            if isinstance(m, MultiPoly):
                if not m.terms:
                    continue
            elif not m:
                continue
            for t, c in enumerate(vec):
                if c:
                    out[t] = out[t] + m * c
        if isinstance(zero, MultiPoly):
            return out
        return [self.field(x) for x in out]

    # serialization

    def to_json(self):
        data = {
            "n": self.n,
            "k": self.k,
            "field": self.field.to_json(),
            "brackets": [
                {"args": list(I), "value": [self.field.to_str(x) for x in v]}
                for I, v in self.brackets.items()
            ],
        }
        if self.seed is not None:
            data["seed"] = self.seed
        return data

    @classmethod
    def from_json(cls, data):
        field = field_from_json(data["field"])
        brackets = {tuple(b["args"]): [field(x) for x in b["value"]] for b in data["brackets"]}
        return cls(int(data["n"]), int(data["k"]), field, brackets, data.get("seed"))

    def dumps(self):
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


def unit_vector(n, i, field=QQ):
    v = [field.zero] * n
    v[i] = field.one
    return v


def evaluate(A, args):
    return A.evaluate(*args)


# trace form and the splitting A = A0 + omega-algebra


def trace_form(A):
    """tau(v_1..v_{k-1}) = trace of w -> [v_1, ..., v_{k-1}, w] on increasing (k-1)-tuples."""
    f = A.field
    values = {}
    for I in combinations(range(A.n), A.k - 1):
        total = f.zero
        for j in range(A.n):
            if j in I:
                continue
            total = total + A.basis_bracket(I + (j,))[j]
        values[I] = f(total)
    return AlternatingForm(A.n, A.k - 1, f, values)


def omega_algebra(omega, n=None, k=None):
    """[v_1..v_k] = sum_i (-1)^(i-1) omega(v_1..^v_i..v_k) v_i; every subspace is a subalgebra."""
    n = omega.n if n is None else n
    k = omega.arity + 1 if k is None else k
    if omega.n != n or omega.arity != k - 1:
        raise ValueError("form does not match (n, k)")
    f = omega.field
    brackets = {}
    for I in combinations(range(n), k):
        vec = [f.zero] * n
        for t in range(k):
            rest = I[:t] + I[t + 1:]
            c = omega.values[rest]
            if c:
                vec[I[t]] = f(vec[I[t]] + (c if t % 2 == 0 else -c))
        brackets[I] = vec
    return AnticommAlgebra(n, k, f, brackets)


@lru_cache(maxsize=None)
def trace_scalar(n, k, field):
    """The scalar s with trace_form(omega_algebra(w)) = s * w, read off a basis form."""
    basis = tuple(range(k - 1))
    w = AlternatingForm(n, k - 1, field, {basis: 1})
    return trace_form(omega_algebra(w, n, k)).values[basis]


def decompose(A):
    """Split A = A0 + omega_algebra(omega) with trace_form(A0) = 0."""
    f = A.field
    s = trace_scalar(A.n, A.k, f)
    if not s:
        raise ZeroDivisionError(
            f"characteristic {f.characteristic} divides the trace scalar for (n, k) = ({A.n}, {A.k})"
        )
    tau = trace_form(A)
    omega = tau.scale(f.inv(s))
    A0 = A - omega_algebra(omega, A.n, A.k)
    return A0, omega


def zero_trace_part(A):
    return decompose(A)[0]


# subspaces


@dataclass(eq=False)
class Subspace:
    """A subspace of F^n kept as a reduced row-echelon basis, so equality is structural."""

    n: int
    field: object
    basis: list
    pivots: list

    @classmethod
    def span(cls, vectors, n=None, field=QQ):
        vectors = [list(v) for v in vectors]
        if n is None:
            n = len(vectors[0])
        if not vectors:
            return cls(n, field, [], [])
        rows, pivots = rref(vectors, field)
        return cls(n, field, [tuple(r) for r in rows], list(pivots))

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, tuple(self.basis)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[list(b) for b in self.basis]})"

    def free_columns(self):
        return [c for c in range(self.n) if c not in self.pivots]

    def residual(self, v):
        """v minus its projection along the echelon basis; zero iff v is in the span.

        Works for polynomial entries too, since the basis is in echelon form.
        """
        out = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = out[pc]
            if isinstance(c, MultiPoly):
                if not c.terms:
                    continue
            elif not c:
                continue
            for j in range(self.n):
                if row[j]:
                    out[j] = out[j] - c * row[j]
        if not any(isinstance(x, MultiPoly) for x in out):
            out = [self.field(x) for x in out]
        return out

    def contains(self, v):
        return not any(self.field(x) for x in self.residual(v))

    def contains_subspace(self, other):
        return all(self.contains(b) for b in other.basis)


def subalgebra_check(A, U):
    """True iff [u_I] lies in U for every increasing k-tuple of U's basis."""
    if U.dim < A.k:
        return True
    for I in combinations(range(U.dim), A.k):
        if not U.contains(A.evaluate(*[U.basis[i] for i in I])):
            return False
    return True


def induced_operator(A, U):
    """Matrix of w -> [u_1, ..., u_{k-1}, w] on V/U in the free-column coordinates."""
    if U.dim != A.k - 1:
        raise ValueError(f"need a {A.k - 1}-dimensional subspace, got dimension {U.dim}")
    free = U.free_columns()
    cols = []
    for c in free:
        w = A.evaluate(*U.basis, unit_vector(A.n, c, A.field))
        r = U.residual(w)
        cols.append([r[j] for j in free])
    size = len(free)
    return [[cols[j][i] for j in range(size)] for i in range(size)], free


def field_roots(coeffs, field):
    """Distinct roots in the base field of a polynomial given low-to-high."""
    if field.p:
        return univariate.roots([int(c) for c in coeffs], field.p)
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])), x, domain="QQ")
    return sorted(QQ(sympy.Rational(r).p) / sympy.Rational(r).q for r in poly.ground_roots())


def extend_to_k_subalgebra(A, U):
    """k-dimensional subalgebras Fv + U from eigenvectors of the induced operator on V/U.

    Only eigenvalues in the base field are used.  For each eigenvalue the
    eigenspace basis vectors each give one extension.
    """
    mat, free = induced_operator(A, U)
    f = A.field
    size = len(free)
    minpoly = minimal_polynomial(mat, f)
    out = []
    seen = set()
    for lam in field_roots(minpoly, f):
        shifted = [[f(mat[i][j] - (lam if i == j else 0)) for j in range(size)] for i in range(size)]
        for vec in nullspace(shifted, f, size):
            v = [f.zero] * A.n
            for coord, c in zip(vec, free):
                v[c] = coord
            W = Subspace.span(list(U.basis) + [v], A.n, f)
            if W not in seen:
                seen.add(W)
                out.append(W)
    return out


# canonical algebras


def example_algebra_v(n, k, field=QQ):
    """[e_{n-k}, ..., ^e_i, ..., e_n] = e_i for n-k <= i <= n (1-based), other products zero.

    U = <e_{n-k}, ..., e_n> is then a (k+1)-dimensional subalgebra.
    """
    if not 1 < k < n - 1:
        raise ValueError("need 1 < k < n - 1")
    support = list(range(n - k - 1, n))  # 0-based e_{n-k}..e_n
    brackets = {}
    for i in support:
        args = tuple(j for j in support if j != i)
        brackets[args] = unit_vector(n, i, field)
    return AnticommAlgebra(n, k, field, brackets)


def example_subalgebra_v(n, k, field=QQ):
    return Subspace.span([unit_vector(n, i, field) for i in range(n - k - 1, n)], n, field)


RATIONAL_RANGE = 10**6


def random_algebra(n, k, field=None, seed=0, zero_trace=False):
    """Structure constants drawn uniformly from F_p (or [-10^6, 10^6] over Q), seeded."""
    field = GF() if field is None else field
    rng = random.Random(seed)
    brackets = {}
    for I in combinations(range(n), k):
        if field.p:
            brackets[I] = [rng.randrange(field.p) for _ in range(n)]
        else:
            brackets[I] = [rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE) for _ in range(n)]
    A = AnticommAlgebra(n, k, field, brackets, seed)
    if zero_trace:
        A = decompose(A)[0]
        A.seed = seed
    return A


def random_form(n, arity, field, rng):
    if field.p:
        draw = lambda: rng.randrange(field.p)
    else:
        draw = lambda: rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE)
    return AlternatingForm(n, arity, field, {I: draw() for I in combinations(range(n), arity)})


def random_subspace(n, m, field, rng):
    while True:
        if field.p:
            vecs = [[rng.randrange(field.p) for _ in range(n)] for _ in range(m)]
        else:
            vecs = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        U = Subspace.span(vecs, n, field)
        if U.dim == m:
            return U
