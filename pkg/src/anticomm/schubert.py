"""The Chow ring of Gr(m, n) in the Schubert basis.

Two independent routes to the degree of sigma_mu * sigma_nu * sigma_1^e:
the closed determinantal formula (:func:`degree_pair`) and iterated Pieri
multiplication followed by duality (:func:`degree_via_pieri`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import QQ, det, factorial, inv_factorial
from .partitions import EMPTY, Partition, add_box, complement, contains, iterate_box


class InternalError(RuntimeError):
    """An exact computation produced a value its derivation rules out."""


@dataclass(frozen=True)
class GrassmannContext:
    """Gr(m, n): Schubert classes are diagrams in the m x (n - m) rectangle."""

    m: int
    n: int

    def __post_init__(self):
        if not 0 < self.m < self.n:
            raise ValueError(f"need 0 < m < n, got m={self.m}, n={self.n}")

    @property
    def rows(self):
        return self.m

    @property
    def cols(self):
        return self.n - self.m

    @property
    def dim(self):
        return self.m * (self.n - self.m)

    def partitions(self):
        return iterate_box(self.rows, self.cols)

    def complement(self, p):
        return complement(p, self.rows, self.cols)


@dataclass
class SchubertCycle:
    ctx: GrassmannContext
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            if not isinstance(lam, Partition):
                lam = Partition(tuple(lam))
            if not lam.fits(self.ctx.rows, self.ctx.cols):
                raise ValueError(f"{lam} does not fit Gr({self.ctx.m},{self.ctx.n})")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, ctx, lam):
        return cls(ctx, {lam: 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchubertCycle(self.ctx, out)

    def __rmul__(self, c):
        return SchubertCycle(self.ctx, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, SchubertCycle) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def coefficient(self, lam):
        return self.coeffs.get(lam, 0)

    def is_zero(self):
        return not self.coeffs

    def to_json(self):
        return {str(k): str(v) for k, v in sorted(self.coeffs.items())}


def pieri_sigma1(c):
    """sigma_1 * c: each sigma_lam goes to the sum over lam plus one box."""
    out = {}
    for lam, coef in c.coeffs.items():
        for mu in add_box(lam, c.ctx.rows, c.ctx.cols):
            out[mu] = out.get(mu, 0) + coef
    return SchubertCycle(c.ctx, out)


def _check_grading(mu, nu, e, ctx):
    for p in (mu, nu):
        if not p.fits(ctx.rows, ctx.cols):
            raise ValueError(f"{p} does not fit Gr({ctx.m},{ctx.n})")
    if e < 0 or mu.size + nu.size + e != ctx.dim:
        raise ValueError(
            f"grading mismatch: |mu|+|nu|+e = {mu.size + nu.size + e} != dim = {ctx.dim}"
        )


def skew_determinant(lam, mu, rows):
    """det[1/(i - j + lam_j - mu_i)!] over i, j = 1..rows, with 1/N! = 0 for N < 0."""
    lp, mp = lam.padded(rows), mu.padded(rows)
    mat = [[inv_factorial(i - j + lp[j] - mp[i]) for j in range(rows)] for i in range(rows)]
    return det(mat, QQ)


def degree_pair(mu, nu, e, ctx):
    """deg(sigma_mu sigma_nu sigma_1^e) by the closed determinant formula.

    With lam the complement of nu, the degree is
    (|lam| - |mu|)! * det[1/(i - j + lam_j - mu_i)!], the determinant sized by
    the number of rows of the rectangle.
    """
    _check_grading(mu, nu, e, ctx)
    lam = ctx.complement(nu)
    value = factorial(e) * skew_determinant(lam, mu, ctx.rows)
    if value.denominator != 1 or value < 0:
        raise InternalError(f"degree formula gave {value} for mu={mu}, nu={nu}, e={e}")
    return int(value)


def degree_via_pieri(mu, nu, e, ctx):
    """deg(sigma_mu sigma_nu sigma_1^e) by iterated Pieri and Schubert duality."""
    _check_grading(mu, nu, e, ctx)
    cyc = SchubertCycle.basis(ctx, mu)
    for _ in range(e):
        cyc = pieri_sigma1(cyc)
    return cyc.coefficient(ctx.complement(nu))


def grassmannian_degree(ctx):
    """Number of standard Young tableaux of the m x (n - m) rectangle (hook lengths)."""
    rows, cols = ctx.rows, ctx.cols
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (cols - j - 1) + (rows - i - 1) + 1
    return factorial(rows * cols) // hooks


def admissible_triples(ctx):
    """Every (mu, nu, e) with |mu| + |nu| + e = dim Gr."""
    parts = list(ctx.partitions())
    for mu in parts:
        for nu in parts:
            e = ctx.dim - mu.size - nu.size
            if e >= 0:
                yield mu, nu, e


__all__ = [
    "EMPTY", "GrassmannContext", "InternalError", "SchubertCycle", "admissible_triples",
    "contains", "degree_pair", "degree_via_pieri", "grassmannian_degree", "pieri_sigma1",
    "skew_determinant",
]
