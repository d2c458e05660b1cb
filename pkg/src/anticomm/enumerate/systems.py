"""Polynomial systems on Schubert-cell charts and the counts extracted from them.

A chart of Gr(m, n) is a pivot set P (increasing, size m).  Its subspaces are
the row spans of matrices in reduced echelon form with pivots P: row i has a
1 in column P[i], zeros left of it and in the other pivot columns, and a free
parameter everywhere else.  Every subspace has exactly one pivot pattern, so
the cells partition the Grassmannian and summing point counts over them
counts each point once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from ..algebra import Subspace, subalgebra_check
from ..exact import MultiPoly, all_minors
from .groebner import ZeroDimReport, buchberger, radical_check, rational_points


class PositiveDimensionalError(ValueError):
    """A system expected to have finitely many solutions has a positive-dimensional locus."""

    def __init__(self, message, chart=None, krull_dim=None):
        super().__init__(message)
        self.chart = chart
        self.krull_dim = krull_dim


@dataclass
class PolySystem:
    variables: tuple
    equations: list
    chart: tuple
    field: object
    matrix: list = dc_field(default=None, repr=False)
    kind: str = "subalgebra"

    def solve(self, order="grevlex"):
        return buchberger(self.equations, order=order, gens=self.variables, field=self.field)

    def point_matrix(self, point):
        """Substitute a chart point into the parametrized basis."""
        return [[x.evaluate(point) for x in row] for row in self.matrix]


@dataclass
class CellReport:
    chart: tuple
    report: ZeroDimReport

    def to_json(self):
        return {"chart": [list(c) if isinstance(c, tuple) else c for c in self.chart], **self.report.to_json()}


@dataclass
class GeometricCount:
    """Point counts over all cells; ``total`` counts with multiplicity over the closure."""

    total: int
    cells: list

    @property
    def all_radical(self):
        return all(c.report.is_radical for c in self.cells if c.report.quotient_dim)

    def to_json(self):
        return {
            "total": str(self.total),
            "all_radical": self.all_radical,
            "cells": [c.to_json() for c in self.cells if c.report.quotient_dim],
        }


def _require_prime(A):
    if not A.field.p:
        raise ValueError("enumeration needs an algebra over a prime field")


def check_chart(n, chart):
    chart = tuple(chart)
    if list(chart) != sorted(set(chart)) or not chart or chart[0] < 0 or chart[-1] >= n:
        raise ValueError(f"invalid chart {chart} for dimension {n}")
    return chart


def cell_matrix(n, chart, field, prefix="u", gens=None):
    """Echelon basis of the cell with the given pivots, with fresh parameters.

    Returns (variables, rows); entries are MultiPoly over the (possibly
    supplied) generator tuple.
    """
    chart = check_chart(n, chart)
    names = []
    for i, pc in enumerate(chart):
        for j in range(pc + 1, n):
            if j not in chart:
                names.append(f"{prefix}{i}_{j}")
    if gens is None:
        gens = tuple(names)
    zero = MultiPoly.zero(gens, field)
    one = MultiPoly.one(gens, field)
    rows = []
    for i, pc in enumerate(chart):
        row = [zero] * n
        row[pc] = one
        for j in range(pc + 1, n):
            if j not in chart:
                row[j] = MultiPoly.gen(f"{prefix}{i}_{j}", gens, field)
        rows.append(row)
    return tuple(names), rows


def echelon_residual(rows, chart, v):
    """Coordinates of v off the pivot columns after clearing it against the echelon rows."""
    out = []
    for j in range(len(v)):
        if j in chart:
            continue
        r = v[j]
        for row, pc in zip(rows, chart):
            if row[j].terms and v[pc].terms:
                r = r - v[pc] * row[j]
        out.append(r)
    return out


def charts(n, m):
    return list(combinations(range(n), m))


def subalgebra_system(A, m, chart):
    """Equations of the m-dimensional subalgebras in one cell of Gr(m, n)."""
    _require_prime(A)
    if not 0 < m < A.n:
        raise ValueError(f"need 0 < m < n, got m={m}")
    gens, rows = cell_matrix(A.n, chart, A.field)
    equations = []
    if m >= A.k:
        for idx in combinations(range(m), A.k):
            value = A.evaluate(*[rows[i] for i in idx])
            equations.extend(echelon_residual(rows, chart, value))
    return PolySystem(gens, equations, tuple(chart), A.field, rows)


def solve_cells(systems, radical=True):
    cells = []
    for sys in systems:
        rep = sys.solve()
        if rep.krull_dim > 0:
            raise PositiveDimensionalError(
                f"chart {sys.chart} has a {rep.krull_dim}-dimensional solution set",
                chart=sys.chart, krull_dim=rep.krull_dim,
            )
        if radical:
            radical_check(rep)
        cells.append(CellReport(sys.chart, rep))
    return cells


def count_subalgebras_geometric(A, m=None):
    """Number of m-dimensional subalgebras (default m = k + 1), with multiplicity.

    Raises :class:`PositiveDimensionalError` if some cell carries a curve or
    more of subalgebras.
    """
    m = A.k + 1 if m is None else m
    systems = [subalgebra_system(A, m, c) for c in charts(A.n, m)]
    cells = solve_cells(systems)
    return GeometricCount(sum(c.report.quotient_dim for c in cells), cells)


def subalgebra_variety_dimension(A, m=None):
    """Largest Krull dimension of the subalgebra locus over all cells; -1 if empty."""
    m = A.k if m is None else m
    return max(subalgebra_system(A, m, c).solve().krull_dim for c in charts(A.n, m))


def unit_on_every_cell(A, m):
    """True when no cell of Gr(m, n) contains an m-dimensional subalgebra."""
    return all(subalgebra_system(A, m, c).solve().is_unit for c in charts(A.n, m))


def subalgebra_points(A, m, seed=0):
    """F_p-rational m-dimensional subalgebras, as Subspaces, from every cell.

    Only for spot-checks: a cell whose points do not all split over F_p
    contributes just the ones that do.
    """
    rng = random.Random(seed)
    out = []
    for c in charts(A.n, m):
        sys = subalgebra_system(A, m, c)
        rep = sys.solve()
        if rep.krull_dim != 0:
            continue
        radical_check(rep)
        for pt in rational_points(rep, rng):
            out.append(Subspace.span(sys.point_matrix(pt), A.n, A.field))
    return out


# Pluecker degree of the surface of 2-dimensional subalgebras


@dataclass
class DegreeReport:
    degree: int
    sections: int
    all_radical: bool
    attempts: int
    cells: list

    def to_json(self):
        return {
            "degree": str(self.degree),
            "sections": self.sections,
            "all_radical": self.all_radical,
            "attempts": self.attempts,
        }


def plucker_coordinates(rows):
    zero = rows[0][0] * 0
    return all_minors(rows, zero)


def surface_plucker_degree(A, m=None, seed=0, attempts=3):
    """Degree of the variety of m-dimensional subalgebras (default m = k) in the Pluecker embedding.

    Cuts the variety with as many random hyperplanes of the Pluecker space as
    its dimension and counts the intersection points over all cells.  A draw
    giving a non-radical or positive-dimensional intersection is retried.
    """
    _require_prime(A)
    m = A.k if m is None else m
    dim = subalgebra_variety_dimension(A, m)
    if dim < 0:
        return DegreeReport(0, 0, True, 0, [])
    rng = random.Random(seed)
    p = A.field.p
    subsets = list(combinations(range(A.n), m))
    last_error = None
    for attempt in range(1, attempts + 1):
        forms = [[rng.randrange(p) for _ in subsets] for _ in range(dim)]
        systems = []
        for c in charts(A.n, m):
            sys = subalgebra_system(A, m, c)
            minors = plucker_coordinates(sys.matrix)
            extra = []
            for coeffs in forms:
                h = MultiPoly.zero(sys.variables, A.field)
                for I, a in zip(subsets, coeffs):
                    if a:
                        h = h + minors[I] * a
                extra.append(h)
            systems.append(PolySystem(sys.variables, sys.equations + extra, c, A.field, sys.matrix, "plucker"))
        try:
            cells = solve_cells(systems)
        except PositiveDimensionalError as err:
            last_error = err
            continue
        result = DegreeReport(sum(c.report.quotient_dim for c in cells), dim, False, attempt, cells)
        result.all_radical = all(c.report.is_radical for c in cells if c.report.quotient_dim)
        if result.all_radical:
            return result
        last_error = result
    if isinstance(last_error, DegreeReport):
        return last_error
    raise last_error


# fans: flags V1 in V3 with every plane between them a subalgebra


def wedge(*vectors):
    """Coordinates of v1 ^ ... ^ vr on increasing index tuples."""
    zero = vectors[0][0] * 0
    return all_minors([list(v) for v in vectors], zero)


LINE_CELLS = ((0,), (1,), (2,))


def fan_system(A, plane_chart, line_pivot):
    """Fan equations on one cell of the flag variety {V1 in V3}.

    V3 runs over the Gr(3, n) cell ``plane_chart`` with echelon rows r0, r1, r2;
    V1 = <v> with v = sum a_i r_i, a in the cell of P^2 whose first nonzero
    entry is a 1 at position ``line_pivot``.  With w1, w2 the remaining two rows,
    the pencil u = w1 + t w2 must satisfy v ^ u ^ [v, u] = 0 for every t, and
    the coefficients of t^0, t^1, t^2 are the equations (t^2 is the t = infinity
    member).
    """
    _require_prime(A)
    if A.k != 2:
        raise ValueError("fans are defined for binary algebras")
    n = A.n
    plane_chart = check_chart(n, plane_chart)
    if len(plane_chart) != 3:
        raise ValueError("the plane chart must have 3 pivots")
    plane_names, _ = cell_matrix(n, plane_chart, A.field)
    line_names = tuple(f"a{j}" for j in range(line_pivot + 1, 3))
    gens = plane_names + line_names + ("t",)
    _, rows = cell_matrix(n, plane_chart, A.field, gens=gens)
    one = MultiPoly.one(gens, A.field)
    t = MultiPoly.gen("t", gens, A.field)
    coeffs = [one * 0] * 3
    coeffs[line_pivot] = one
    for j in range(line_pivot + 1, 3):
        coeffs[j] = MultiPoly.gen(f"a{j}", gens, A.field)
    v = [sum((coeffs[i] * rows[i][c] for i in range(3)), one * 0) for c in range(n)]
    others = [i for i in range(3) if i != line_pivot]
    w1, w2 = rows[others[0]], rows[others[1]]
    u = [w1[c] + t * w2[c] for c in range(n)]
    vu = A.evaluate(v, u)
    tpos = len(gens) - 1
    equations = []
    for minor in wedge(v, u, vu).values():
        for d in range(3):
            part = {}
            for e, c in minor.terms.items():
                if e[tpos] == d:
                    part[e[:tpos]] = c
            if part:
                equations.append(MultiPoly(gens[:-1], part, A.field))
    # matrix rows in the solving ring: v, w1, w2 (t dropped)
    drop = lambda x: MultiPoly(gens[:-1], {e[:tpos]: c for e, c in x.terms.items()}, A.field)
    matrix = [[drop(x) for x in vec] for vec in (v, w1, w2)]
    return PolySystem(gens[:-1], equations, (plane_chart, line_pivot), A.field, matrix, "fan")


def fan_systems(A):
    return [fan_system(A, c, lp) for c in charts(A.n, 3) for lp in range(3)]


@dataclass
class FanReport:
    count: int
    all_radical: bool
    cells: list
    rational_fans: list = dc_field(default_factory=list)
    spot_check: bool | None = None

    def to_json(self):
        return {
            "count": str(self.count),
            "all_radical": self.all_radical,
            "rational_fans": len(self.rational_fans),
            "spot_check": self.spot_check,
        }


def fan_spot_check(A, fan, samples=(0, 1, 2, 5)):
    """b1 ^ b2 = 0 for b1 = v ^ w1, b2 = v ^ w2, and sampled planes of the pencil are subalgebras."""
    v, w1, w2 = fan
    f = A.field
    b1, b2 = wedge(v, w1), wedge(v, w2)
    # b1 ^ b2 in Lambda^4: sum over disjoint index pairs with shuffle signs
    total = f.zero
    for I, x in b1.items():
        for J, y in b2.items():
            if set(I) & set(J):
                continue
            order = list(I) + list(J)
            inv = sum(1 for a in range(4) for b in range(a + 1, 4) if order[a] > order[b])
            total = f(total + (-1) ** inv * x * y)
    if total:
        return False
    for s in samples:
        u = [f(a + s * b) for a, b in zip(w1, w2)]
        if not subalgebra_check(A, Subspace.span([v, u], A.n, f)):
            return False
    return subalgebra_check(A, Subspace.span([v, w2], A.n, f))


def fan_count(A, seed=0):
    """Number of fans, with the rational ones extracted and spot-checked."""
    systems = fan_systems(A)
    cells = solve_cells(systems)
    rng = random.Random(seed)
    fans = []
    for sys, cell in zip(systems, cells):
        if not cell.report.quotient_dim:
            continue
        try:
            pts = rational_points(cell.report, rng)
        except RuntimeError:
            continue
        for pt in pts:
            fans.append(tuple(tuple(A.field(x) for x in row) for row in sys.point_matrix(pt)))
    report = FanReport(
        sum(c.report.quotient_dim for c in cells),
        all(c.report.is_radical for c in cells if c.report.quotient_dim),
        cells,
        fans,
    )
    report.spot_check = all(fan_spot_check(A, fan) for fan in fans)
    return report


# ideals


def ideal_system(A, d, chart):
    """[W, V, ..., V] inside W for W in the given cell of Gr(d, n)."""
    _require_prime(A)
    gens, rows = cell_matrix(A.n, chart, A.field)
    one = MultiPoly.one(gens, A.field)
    basis = [[one if i == j else one * 0 for j in range(A.n)] for i in range(A.n)]
    equations = []
    for w in rows:
        for idx in combinations(range(A.n), A.k - 1):
            value = A.evaluate(w, *[basis[i] for i in idx])
            equations.extend(echelon_residual(rows, chart, value))
    return PolySystem(gens, equations, tuple(chart), A.field, rows, "ideal")


@dataclass
class IdealReport:
    d: int
    empty: bool
    cells: list

    def to_json(self):
        return {
            "d": self.d,
            "empty": self.empty,
            "nonempty_cells": [list(c.chart) for c in self.cells if not c.report.is_unit],
        }


def ideal_check(A, d):
    """Whether A has a d-dimensional ideal; ``empty`` means the unit ideal on every cell."""
    cells = []
    for c in charts(A.n, d):
        rep = ideal_system(A, d, c).solve()
        cells.append(CellReport(c, rep))
    return IdealReport(d, all(c.report.is_unit for c in cells), cells)
