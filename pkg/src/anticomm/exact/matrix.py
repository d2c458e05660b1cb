"""Dense exact matrices over a field or over a polynomial ring.

Scalar determinants use fraction-free (Bareiss) elimination; matrices with
:class:`MultiPoly` entries use cofactor expansion memoized on column subsets.
"""

from __future__ import annotations

from itertools import combinations

from .combinat import factorial
from .field import QQ
from .poly import MultiPoly


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field=QQ):
        rows = [list(r) for r in rows]
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")
        self.field = field
        if not any(isinstance(x, MultiPoly) for r in rows for x in r):
            rows = [[field(x) for x in r] for r in rows]
        self.rows = rows

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, r, c, field=QQ):
        return cls([[0] * c for _ in range(r)], field)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __repr__(self):
        return f"Matrix({self.rows!r})"

    def transpose(self):
        return Matrix([list(c) for c in zip(*self.rows)], self.field)

    T = property(transpose)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        p = self.field.p
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = sum(a * b for a, b in zip(r, c))
                row.append(s % p if p else s)
            out.append(row)
        return Matrix(out, self.field)

    def apply(self, vec):
        p = self.field.p
        out = [sum(a * b for a, b in zip(r, vec)) for r in self.rows]
        return [x % p for x in out] if p else out

    def has_poly_entries(self):
        return any(isinstance(x, MultiPoly) for r in self.rows for x in r)

    # determinants

    def det(self):
        if not self.is_square():
            raise ValueError(f"determinant of non-square {self.nrows}x{self.ncols} matrix")
        if self.has_poly_entries():
            return det_cofactor(self.rows)
        return det_bareiss(self.rows, self.field)

    # elimination

    def rref(self):
        """Reduced row-echelon form; returns (matrix, pivot columns)."""
        rows, pivots = rref(self.rows, self.field)
        return Matrix(rows, self.field), pivots

    def rank(self):
        return len(rref(self.rows, self.field)[1])

    def nullspace(self):
        return nullspace(self.rows, self.field, self.ncols)


def det(m, field=QQ):
    """Determinant of a square :class:`Matrix` or list of rows."""
    if not isinstance(m, Matrix):
        m = Matrix(m, field)
    return m.det()


def det_bareiss(rows, field=QQ):
    n = len(rows)
    if n == 0:
        return field.one
    p = field.p
    a = [list(r) for r in rows]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return field.zero
        akk = a[k][k]
        inv_prev = pow(prev, -1, p) if p else None
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                v = row_i[j] * akk - aik * row_k[j]
                # Sylvester's identity: the division is exact
                row_i[j] = v * inv_prev % p if p else v / prev
            row_i[k] = field.zero
        prev = akk
    d = a[n - 1][n - 1]
    return field(d if sign > 0 else -d)


def det_cofactor(rows):
    """Laplace expansion along rows, memoized on the set of remaining columns."""
    n = len(rows)
    if n == 0:
        return 1
    memo = {}

    def minor(r, cols):
        # determinant of rows r.. with column tuple cols
        if r == n:
            return 1
        if cols in memo:
            return memo[cols]
        total = None
        for idx, c in enumerate(cols):
            a = rows[r][c]
            if isinstance(a, MultiPoly) and not a.terms or (not isinstance(a, MultiPoly) and a == 0):
                continue
            sub = minor(r + 1, cols[:idx] + cols[idx + 1:])
            term = a * sub
            if idx % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = _zero_like(rows)
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def _zero_like(rows):
    for r in rows:
        for x in r:
            if isinstance(x, MultiPoly):
                return MultiPoly.zero(x.gens, x.field)
    return 0


def all_minors(rows, zero):
    """All maximal minors of a k x n matrix, keyed by increasing column tuple.

    Works for any entries supporting ``+``, ``-`` and ``*``; ``zero`` is the
    additive identity of the entry ring.  Built row by row, so the cost is
    C(n, k) * k products.
    """
    k = len(rows)
    n = len(rows[0]) if rows else 0
    level = {(): None}
    for t in range(k):
        row = rows[t]
        nxt = {}
        for cols in combinations(range(n), t + 1):
            total = zero
            for idx, c in enumerate(cols):
                a = row[c]
                if _is_zero(a):
                    continue
                rest = cols[:idx] + cols[idx + 1:]
                sub = level[rest]
                term = a if sub is None else a * sub
                if _is_zero(term):
                    continue
                # expansion along the last row: sign (-1)^(t + idx)
                if (t + idx) % 2:
                    total = total - term
                else:
                    total = total + term
            nxt[cols] = total
        level = nxt
    return level


def _is_zero(a):
    if isinstance(a, MultiPoly):
        return not a.terms
    return a == 0


def rref(rows, field=QQ):
    p = field.p
    a = [[field(x) for x in r] for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [x * inv % p if p else x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                ri = a[i]
                rr = a[r]
                if p:
                    a[i] = [(x - f * y) % p for x, y in zip(ri, rr)]
                else:
                    a[i] = [x - f * y for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def rank(rows, field=QQ):
    if not rows:
        return 0
    return len(rref(rows, field)[1])


def nullspace(rows, field=QQ, ncols=None):
    """Basis of the right kernel {x : A x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = field(-row[fc])
        basis.append(v)
    return basis


def minimal_polynomial(m, field):
    """Minimal polynomial of a square scalar matrix, as low-to-high coefficients (monic).

    Finds the first linear dependence among I, M, M^2, ... by incremental
    elimination on the flattened powers.
    """
    n = len(m)
    p = field.p
    mat = Matrix(m, field)
    power = Matrix.identity(n, field)
    echelon = []  # list of (pivot index, reduced vector, combination vector)
    d = 0
    while True:
        vec = [x for r in power.rows for x in r]
        comb = [field.zero] * (d + 1)
        comb[d] = field.one
        for piv, evec, ecomb in echelon:
            f = vec[piv]
            if f:
                vec = [_sub(x, f * y, p) for x, y in zip(vec, evec)]
                comb = [_sub(x, f * y, p) for x, y in zip(comb, ecomb + [field.zero] * (len(comb) - len(ecomb)))]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return [field(c) for c in comb]
        inv = field.inv(vec[piv])
        vec = [field(x * inv) for x in vec]
        comb = [field(x * inv) for x in comb]
        echelon.append((piv, vec, comb))
        power = power @ mat
        d += 1


def _sub(x, y, p):
    return (x - y) % p if p else x - y


def det_Y_identity(s, field=QQ):
    """Determinant of the s x s lower Hessenberg matrix with unit superdiagonal
    and entry 1/(i - j + 1)! on and below the diagonal (1-based i, j).

    The value is 1/s!; the telescoping of the k = n - 2 subalgebra count
    depends on it.
    """
    if s < 1:
        raise ValueError("size must be positive")
    rows = []
    for i in range(s):
        row = []
        for j in range(s):
            if j == i + 1:
                row.append(field.one)
            elif j <= i:
                row.append(field(1) / factorial(i - j + 1) if field.p is None else field.inv(factorial(i - j + 1)))
            else:
                row.append(field.zero)
        rows.append(row)
    return det_bareiss(rows, field)


def independent(vectors, field):
    return rank(vectors, field) == len(vectors)
