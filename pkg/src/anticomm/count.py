"""Number of (k+1)-dimensional subalgebras of a generic n-dimensional k-ary algebra.

The count is the degree of the top Chern class of Lambda^k S^* (x) V/S on
Gr(k+1, n).  Writing that bundle as det(S^*) (x) S (x) V/S gives

    c_top = sum_{mu <= lam} d(lam, mu) (-1)^|mu| sigma_mu sigma_lam' sigma_1^(|lam| - |mu|)

with lam' the complement of lam in the (k+1) x (n-k-1) box.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import QQ, binomial, det, factorial
from .partitions import complement, contains, iterate_box
from .schubert import GrassmannContext, InternalError, degree_pair, skew_determinant


@dataclass(frozen=True)
class CountSpec:
    n: int
    k: int

    def __post_init__(self):
        if not 1 < self.k < self.n - 1:
            raise ValueError(f"need 1 < k < n - 1, got n={self.n}, k={self.k}")

    @property
    def grassmannian(self):
        return GrassmannContext(self.k + 1, self.n)


def d_coeff(lam, mu, k):
    """det[C(lam_i + k + 1 - i, mu_j + k + 1 - j)] over i, j = 1..k+1."""
    rows = k + 1
    if len(lam) > rows or len(mu) > rows:
        raise ValueError(f"diagrams must have at most {rows} parts")
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    lp, mp = lam.padded(rows), mu.padded(rows)
    mat = [
        [binomial(lp[i] + rows - 1 - i, mp[j] + rows - 1 - j) for j in range(rows)]
        for i in range(rows)
    ]
    value = det(mat, QQ)
    return int(value)


def _shifted_factorial_ratio(lam, mu, rows):
    # prod (lam_i + rows - i)! / prod (mu_i + rows - i)!, i = 1..rows
    lp, mp = lam.padded(rows), mu.padded(rows)
    num = den = 1
    for i in range(rows):
        num *= factorial(lp[i] + rows - 1 - i)
        den *= factorial(mp[i] + rows - 1 - i)
    return QQ(num) / den


def summands(spec):
    """Yield (lam, mu, chern_term, closed_term) for every pair mu <= lam in the box.

    ``chern_term`` is d(lam, mu) (-1)^|mu| deg(sigma_mu sigma_lam' sigma_1^e); ``closed_term``
    is the same summand written with the factorial ratio and the squared
    determinant.  The two agree because d(lam, mu) factors as the ratio times
    the determinant.
    """
    ctx = spec.grassmannian
    rows, cols = ctx.rows, ctx.cols
    parts = list(iterate_box(rows, cols))
    for lam in parts:
        lam_dual = complement(lam, rows, cols)
        for mu in parts:
            if not contains(lam, mu):
                continue
            sign = -1 if mu.size % 2 else 1
            e = lam.size - mu.size
            chern = d_coeff(lam, mu, spec.k) * sign * degree_pair(mu, lam_dual, e, ctx)
            d = skew_determinant(lam, mu, rows)
            closed = sign * _shifted_factorial_ratio(lam, mu, rows) * factorial(e) * d * d
            yield lam, mu, chern, closed


def count_subalgebras_formula(spec):
    """Number of (k+1)-dimensional subalgebras of a generic algebra in A(n, k).

    Evaluates both readings of the sum and raises :class:`InternalError` if
    they differ anywhere.
    """
    if not isinstance(spec, CountSpec):
        spec = CountSpec(*spec)
    total_chern = 0
    total_closed = QQ(0)
    for lam, mu, chern, closed in summands(spec):
        if closed != chern:
            raise InternalError(
                f"readings disagree at lam={lam}, mu={mu}: {chern} vs {closed}"
            )
        total_chern += chern
        total_closed += closed
    if total_closed != total_chern:
        raise InternalError(f"totals disagree: {total_chern} vs {total_closed}")
    return total_chern


def count_hyperplane_closed_form(n):
    """(2^n - (-1)^n) / 3, the count when k = n - 2."""
    if n < 4:
        raise ValueError("need n >= 4")
    return (2**n - (-1) ** n) // 3


def telescoping_chain(n):
    """The successive forms of the k = n - 2 sum, each evaluated by direct summation.

    Returns the values of, in order: the factorial-ratio sum divided by (j-i)!,
    the binomial double sum, the geometric sum, and the closed form.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    k = n - 2
    ratio_sum = QQ(0)
    binom_sum = 0
    for i in range(k + 2):
        for j in range(i, k + 2):
            num = den = 1
            for t in range(i, j):
                num *= factorial(1 + k - t)
                den *= factorial(k - t)
            sign = -1 if i % 2 else 1
            ratio_sum += sign * QQ(num) / den / factorial(j - i)
            binom_sum += sign * binomial(k + 1 - i, j - i)
    geometric = sum((-1) ** i * 2 ** (k + 1 - i) for i in range(k + 2))
    return ratio_sum, binom_sum, geometric, count_hyperplane_closed_form(n)


def telescoping_check(n):
    values = telescoping_chain(n)
    return all(v == values[0] for v in values)
