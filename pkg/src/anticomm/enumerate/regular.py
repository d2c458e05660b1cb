"""Regular 4-dimensional binary algebras in pentahedral normal form.

A zero-trace algebra on F_p^4 whose five subalgebras of dimension 3 are the
hyperplanes x1 = 0, ..., x4 = 0, x1 + x2 + x3 + x4 = 0 is cut out of the
24 structure constants by linear conditions; a random member of that linear
family is then probed for the behaviour of a regular algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from ..algebra import AnticommAlgebra
from ..exact import GF, nullspace, rank
from .systems import (
    PositiveDimensionalError,
    count_subalgebras_geometric,
    fan_count,
    ideal_check,
    subalgebra_points,
    surface_plucker_degree,
)

N = 4
PAIRS = list(combinations(range(N), 2))
SYLVESTER = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]


def _unknown(pair, t):
    return PAIRS.index(pair) * N + t


def _bracket_coeffs(i, j):
    """Linear form (as a dict unknown -> sign) giving component list of [e_i, e_j]."""
    if i == j:
        return None
    sign = 1 if i < j else -1
    return sign, (min(i, j), max(i, j))


def trace_conditions():
    rows = []
    for i in range(N):
        row = [0] * (len(PAIRS) * N)
        for j in range(N):
            if j == i:
                continue
            sign, pair = _bracket_coeffs(i, j)
            row[_unknown(pair, j)] += sign
        rows.append(row)
    return rows


def hyperplane_conditions(covector, field):
    """c([u, v]) = 0 for all u, v in ker c, as linear conditions on the constants."""
    basis = nullspace([list(covector)], field, N)
    rows = []
    for u, v in combinations(basis, 2):
        row = [0] * (len(PAIRS) * N)
        for a, b in PAIRS:
            minor = field(u[a] * v[b] - u[b] * v[a])
            if not minor:
                continue
            for t in range(N):
                row[_unknown((a, b), t)] = field(row[_unknown((a, b), t)] + minor * covector[t])
        rows.append(row)
    return rows


def ideal_conditions(span_indices):
    """[e_i, e_j] inside span(e_s : s in span_indices) whenever i is in that span."""
    rows = []
    inside = set(span_indices)
    for i in inside:
        for j in range(N):
            if j == i:
                continue
            sign, pair = _bracket_coeffs(i, j)
            for t in range(N):
                if t in inside:
                    continue
                row = [0] * (len(PAIRS) * N)
                row[_unknown(pair, t)] = 1
                rows.append(row)
    return rows


def algebra_from_constants(values, field, seed=None):
    brackets = {pair: [values[_unknown(pair, t)] for t in range(N)] for pair in PAIRS}
    return AnticommAlgebra(N, 2, field, brackets, seed)


def random_solution(conditions, field, rng):
    basis = nullspace(conditions, field, len(PAIRS) * N)
    if not basis:
        raise ValueError("the linear conditions only admit the zero algebra")
    coeffs = [rng.randrange(field.p) for _ in basis]
    return [field(sum(c * b[i] for c, b in zip(coeffs, basis))) for i in range(len(PAIRS) * N)], len(basis)


def pentahedral_algebra(seed, field=None):
    """Random zero-trace algebra having the Sylvester hyperplanes as subalgebras."""
    field = field or GF()
    rng = random.Random(seed)
    conditions = trace_conditions()
    for c in SYLVESTER:
        conditions += hyperplane_conditions(c, field)
    values, _ = random_solution(conditions, field, rng)
    return algebra_from_constants(values, field, seed)


def forced_ideal_algebra(seed, field=None):
    """Like :func:`pentahedral_algebra` but with <e1, e2> forced to be an ideal.

    If the combined conditions leave only the zero algebra, the hyperplane
    conditions are dropped and only trace and ideal conditions kept.
    """
    field = field or GF()
    rng = random.Random(seed)
    conditions = trace_conditions() + ideal_conditions((0, 1))
    full = list(conditions)
    for c in SYLVESTER:
        full += hyperplane_conditions(c, field)
    try:
        values, _ = random_solution(full, field, rng)
    except ValueError:
        values, _ = random_solution(conditions, field, rng)
    return algebra_from_constants(values, field, seed)


def general_position(covectors, field):
    """Every 3 covectors have rank 3 and every 4 have rank 4."""
    return all(
        rank([list(c) for c in sub], field) == size
        for size in (3, 4)
        for sub in combinations(covectors, size)
    )


def sylvester_scaling(covectors, field):
    """Scalars l1..l4 with c5 = sum l_i c_i, all nonzero; None if there are none.

    Rescaling c_i by l_i then gives a basis in which the five covectors are the
    Sylvester pentahedron.
    """
    if len(covectors) != 5:
        return None
    first, last = covectors[:4], covectors[4]
    # solve sum l_i c_i = c5: augmented system in the unknowns l
    rows = [[first[i][t] for i in range(4)] + [field(-last[t])] for t in range(N)]
    ker = nullspace(rows, field, 5)
    if len(ker) != 1 or not ker[0][4]:
        return None
    inv = pow(ker[0][4], -1, field.p)
    lams = [field(x * inv) for x in ker[0][:4]]
    return lams if all(lams) else None


def hyperplane_covector(U, field):
    """The covector (normalized to leading coefficient 1) vanishing on a hyperplane."""
    ker = nullspace([list(b) for b in U.basis], field, U.n)
    if len(ker) != 1:
        raise ValueError("not a hyperplane")
    c = ker[0]
    lead = next(x for x in c if x)
    inv = pow(lead, -1, field.p)
    return tuple(field(x * inv) for x in c)


@dataclass
class ProbeResult:
    name: str
    passed: bool
    detail: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class RegularAlgebraReport:
    seed: int
    attempts: int
    algebra: AnticommAlgebra
    probes: list

    @property
    def passed(self):
        return all(p.passed for p in self.probes)

    @property
    def failed_probes(self):
        return [p.name for p in self.probes if not p.passed]

    def probe(self, name):
        return next(p for p in self.probes if p.name == name)

    def to_json(self):
        return {
            "seed": self.seed,
            "attempts": self.attempts,
            "passed": self.passed,
            "failed_probes": self.failed_probes,
            "probes": [p.to_json() for p in self.probes],
            "algebra": self.algebra.to_json(),
        }


def _probe(name, fn):
    try:
        return fn()
    except PositiveDimensionalError as err:
        return ProbeResult(name, False, {"error": str(err), "krull_dim": err.krull_dim})


def verify_regular(A, seed=0):
    """Run all five regularity probes on a (4, 2) algebra over F_p; each is reported."""
    if (A.n, A.k) != (4, 2):
        raise ValueError("regularity probes are for (n, k) = (4, 2)")
    f = A.field

    def hyperplanes():
        count = count_subalgebras_geometric(A, 3)
        return ProbeResult(
            "hyperplane_subalgebras",
            count.total == 5 and count.all_radical,
            {"count": str(count.total), "all_radical": count.all_radical},
        )

    def covectors():
        subs = subalgebra_points(A, 3, seed)
        covs = sorted(hyperplane_covector(U, f) for U in subs)
        gp = len(covs) == 5 and general_position(covs, f)
        lams = sylvester_scaling(covs, f) if gp else None
        return ProbeResult(
            "general_position",
            gp and lams is not None,
            {
                "covectors": [[str(x) for x in c] for c in covs],
                "general_position": gp,
                "sylvester_scaling": None if lams is None else [str(x) for x in lams],
            },
        )

    def fans():
        rep = fan_count(A, seed)
        return ProbeResult(
            "fans",
            rep.count == 10 and rep.all_radical and bool(rep.spot_check),
            rep.to_json(),
        )

    def ideals():
        reps = [ideal_check(A, d) for d in (1, 2)]
        return ProbeResult(
            "no_ideals", all(r.empty for r in reps), {"d1": reps[0].to_json(), "d2": reps[1].to_json()}
        )

    def surface():
        rep = surface_plucker_degree(A, 2, seed)
        return ProbeResult(
            "surface_degree",
            rep.degree == 5 and rep.sections == 2 and rep.all_radical,
            rep.to_json(),
        )

    probes = [
        _probe("hyperplane_subalgebras", hyperplanes),
        _probe("general_position", covectors),
        _probe("fans", fans),
        _probe("no_ideals", ideals),
        _probe("surface_degree", surface),
    ]
    return RegularAlgebraReport(seed, 1, A, probes)


def pentahedral_suite(seed=1, attempts=3, field=None):
    """Build a pentahedral algebra and verify it, re-seeding on failure.

    Returns the first passing report, or the last failing one (its probes
    name what failed).
    """
    report = None
    for i in range(attempts):
        s = seed + i
        A = pentahedral_algebra(s, field)
        report = verify_regular(A, s)
        report.attempts = i + 1
        if report.passed:
            break
    return report
