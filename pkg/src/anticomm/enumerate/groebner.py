"""Buchberger's algorithm over F_p and zero-dimensional ideal analysis.

Monomials are packed into Python ints whose integer order *is* the monomial
order, and which add under multiplication:

* ``grevlex``: 16-bit exponent fields, last variable highest, plus a total
  degree field on top; the key is ``(deg << S) - E``.
* ``lex``: the packed exponents alone, first variable in the highest field.

Each field reserves its top bit as a guard so divisibility is one subtraction
and a mask.  Exponents must stay below 2**15.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from ..exact import MultiPoly, minimal_polynomial, nullspace
from ..exact import univariate

W = 16
FIELD_MASK = (1 << W) - 1


class MonomialCodec:
    def __init__(self, nvars, order="grevlex"):
        if order not in ("grevlex", "lex"):
            raise ValueError(f"unsupported monomial order {order!r}")
        self.nvars = nvars
        self.order = order
        self.shift = W * nvars
        self.emask = (1 << self.shift) - 1
        self.guard = sum(1 << (W * i + W - 1) for i in range(nvars))
        if order == "grevlex":
            self.pos = list(range(nvars))
        else:
            self.pos = [nvars - 1 - i for i in range(nvars)]

    def pack(self, exps):
        E = 0
        for e, p in zip(exps, self.pos):
            if e >= 1 << (W - 1):
                raise OverflowError("exponent too large for packed monomials")
            E |= e << (W * p)
        return E

    def unpack(self, E):
        return tuple((E >> (W * p)) & FIELD_MASK for p in self.pos)

    def key(self, exps):
        E = self.pack(exps)
        if self.order == "grevlex":
            return (sum(exps) << self.shift) - E
        return E

    def key_to_E(self, key):
        if self.order == "grevlex":
            deg = -((-key) >> self.shift)
            return (deg << self.shift) - key
        return key

    def exps(self, key):
        return self.unpack(self.key_to_E(key))

    def degree(self, key):
        if self.order == "grevlex":
            return -((-key) >> self.shift)
        return sum(self.exps(key))

    def divides(self, Ea, Eb):
        g = self.guard
        return ((Eb | g) - Ea) & g == g

    def lcm(self, ea, eb):
        return tuple(max(a, b) for a, b in zip(ea, eb))


def _leading(poly):
    return max(poly)


def _monic(poly, p):
    lk = max(poly)
    inv = pow(poly[lk], -1, p)
    if inv == 1:
        return poly
    return {k: c * inv % p for k, c in poly.items()}


class _Basis:
    """Reducer set: (lead key, packed lead exponents, lead exps, monic poly)."""

    def __init__(self, codec):
        self.codec = codec
        self.items = []

    def add(self, poly):
        lk = max(poly)
        e = self.codec.exps(lk)
        self.items.append((lk, self.codec.pack(e), e, poly))


def _normal_form(f, reducers, codec, p, full=True):
    """Reduce ``f`` (dict key -> coef) by monic reducers; heap-driven, top-down."""
    f = dict(f)
    heap = [-k for k in f]
    heapq.heapify(heap)
    out = {}
    divides = codec.divides
    key_to_E = codec.key_to_E
    while heap:
        k = -heapq.heappop(heap)
        c = f.pop(k, 0)
        if not c:
            continue
        E = key_to_E(k)
        for lk, lE, _, g in reducers:
            if divides(lE, E):
                s = k - lk
                for gk, gc in g.items():
                    if gk == lk:
                        continue
                    nk = gk + s
                    old = f.get(nk)
                    if old is None:
                        f[nk] = (-c * gc) % p
                        heapq.heappush(heap, -nk)
                    else:
                        v = (old - c * gc) % p
                        if v:
                            f[nk] = v
                        else:
                            del f[nk]
                break
        else:
            out[k] = c
            if not full:
                # only the head needed reducing; keep the rest untouched
                out.update(f)
                return out
    return out


@dataclass
class ZeroDimReport:
    """Groebner data for one polynomial system.

    ``quotient_dim`` and ``std_monomials`` are filled only when the ideal is
    zero-dimensional (or the unit ideal, with dimension -1 and an empty
    staircase).  ``is_radical`` and ``rational_points`` are filled by
    :func:`radical_check` and :func:`rational_points`.
    """

    gens: tuple
    field: object
    order: str
    groebner: list
    lead_exponents: list
    krull_dim: int
    std_monomials: list | None = None
    quotient_dim: int | None = None
    is_radical: bool | None = None
    rational_points: list | None = None
    _raw: list = dc_field(default=None, repr=False)

    @property
    def is_unit(self):
        return self.krull_dim == -1

    @property
    def zero_dimensional(self):
        return self.krull_dim <= 0

    def to_json(self):
        return {
            "krull_dim": self.krull_dim,
            "quotient_dim": None if self.quotient_dim is None else str(self.quotient_dim),
            "is_radical": self.is_radical,
            "groebner_size": len(self.groebner),
            "rational_points": None
            if self.rational_points is None
            else [[str(x) for x in pt] for pt in self.rational_points],
        }


def buchberger(polys, order="grevlex", gens=None, field=None):
    """Reduced Groebner basis of the ideal generated by ``polys`` over F_p.

    Uses the Gebauer-Moeller pair criteria with sugar-degree pair selection,
    then fills staircase, quotient dimension, and Krull dimension.  ``polys``
    may also be a system object carrying ``equations``, ``variables`` and ``field``.
    """
    if hasattr(polys, "equations"):
        gens, field, polys = polys.variables, polys.field, polys.equations
    polys = list(polys)
    if gens is None or field is None:
        if not polys:
            raise ValueError("need generators or an explicit variable set and field")
        gens, field = polys[0].gens, polys[0].field
    p = field.p
    if not p:
        raise ValueError("Groebner engine works over prime fields only")
    codec = MonomialCodec(len(gens), order)
    inputs = []
    for f in polys:
        if f.gens != gens or f.field != field:
            raise ValueError("all polynomials must share variables and field")
        if f.terms:
            inputs.append({codec.key(e): c % p for e, c in f.terms.items()})
    if order == "lex":
        # Zero-dimensional lex bases go through grevlex and FGLM; direct lex
        # Buchberger suffers badly from coefficient and degree growth.
        grev = MonomialCodec(len(gens), "grevlex")
        inputs_grev = [{grev.key(codec.exps(k)): c for k, c in f.items()} for f in inputs]
        first = _make_report(_groebner(inputs_grev, grev, p), grev, gens, field)
        if first.krull_dim == 0:
            return _make_report(_fglm(first, codec, p), codec, gens, field)
    raw = _groebner(inputs, codec, p)
    return _make_report(raw, codec, gens, field)


def _fglm(report, codec, p):
    """Convert a zero-dimensional reduced basis to the order of ``codec`` (FGLM)."""
    src = MonomialCodec(len(report.gens), report.order)
    reducers = [(max(g), src.pack(src.exps(max(g))), None, g) for g in report._raw]
    index = {src.key(m): i for i, m in enumerate(report.std_monomials)}
    nv = codec.nvars
    echelon = {}  # pivot index -> (vector, combination over the new staircase)
    staircase = []
    new_basis = []
    new_leads = []
    heap = [codec.key((0,) * nv)]
    seen = set(heap)
    while heap:
        key = heapq.heappop(heap)
        e = codec.exps(key)
        if any(all(a <= b for a, b in zip(lead, e)) for lead in new_leads):
            continue
        nf = _normal_form({src.key(e): 1}, reducers, src, p)
        vec = {index[k]: c for k, c in nf.items()}
        comb = {len(staircase): 1}
        # reduce against the echelon rows, tracking the combination
        while vec:
            piv = min(vec)
            if piv not in echelon:
                break
            rv, rc = echelon[piv]
            c = vec[piv]
            for i, x in rv.items():
                v = (vec.get(i, 0) - c * x) % p
                if v:
                    vec[i] = v
                else:
                    vec.pop(i, None)
            for i, x in rc.items():
                v = (comb.get(i, 0) - c * x) % p
                if v:
                    comb[i] = v
                else:
                    comb.pop(i, None)
        if vec:
            piv = min(vec)
            inv = pow(vec[piv], -1, p)
            echelon[piv] = (
                {i: x * inv % p for i, x in vec.items()},
                {i: x * inv % p for i, x in comb.items()},
            )
            staircase.append(key)
            for j in range(nv):
                step = [0] * nv
                step[j] = 1
                nk = codec.key(tuple(a + b for a, b in zip(e, step)))
                if nk not in seen:
                    seen.add(nk)
                    heapq.heappush(heap, nk)
        else:
            # e + sum comb_i * staircase_i vanishes in the quotient
            poly = {staircase[i] if i < len(staircase) else key: c for i, c in comb.items()}
            new_basis.append(_monic(poly, p))
            new_leads.append(e)
    new_basis.sort(key=lambda f: max(f))
    return new_basis


def _groebner(inputs, codec, p):
    nv = codec.nvars
    zero_key = codec.key((0,) * nv)
    polys = []  # index -> monic dict
    leads = []  # index -> lead exps tuple
    sugar = []
    G = []  # active indices
    pairs = []  # heap of (sugar, lcm key, i, j)

    def reducers():
        return [(max(polys[i]), codec.pack(leads[i]), leads[i], polys[i]) for i in G]

    def lcm_key(i, j):
        return codec.key(codec.lcm(leads[i], leads[j]))

    def pair_sugar(i, j):
        lc = codec.lcm(leads[i], leads[j])
        d = sum(lc)
        return max(sugar[i] + d - sum(leads[i]), sugar[j] + d - sum(leads[j]))

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def divides_t(a, b):
        return all(x <= y for x, y in zip(a, b))

    def update(h):
        nonlocal G, pairs
        lh = leads[h]
        C = list(G)
        D = []
        while C:
            g1 = C.pop()
            lcm1 = codec.lcm(lh, leads[g1])
            if coprime(lh, leads[g1]):
                D.append(g1)
                continue
            redundant = any(divides_t(codec.lcm(lh, leads[g2]), lcm1) for g2 in C) or any(
                divides_t(codec.lcm(lh, leads[g2]), lcm1) for g2 in D
            )
            if not redundant:
                D.append(g1)
        E = [g for g in D if not coprime(lh, leads[g])]
        kept = []
        for item in pairs:
            _, _, i, j = item
            lij = codec.lcm(leads[i], leads[j])
            if (
                divides_t(lh, lij)
                and codec.lcm(leads[i], lh) != lij
                and codec.lcm(lh, leads[j]) != lij
            ):
                continue
            kept.append(item)
        for g in E:
            kept.append((pair_sugar(g, h), lcm_key(g, h), g, h))
        heapq.heapify(kept)
        pairs = kept
        G = [g for g in G if not divides_t(lh, leads[g])] + [h]

    def add_poly(f, s):
        f = _monic(f, p)
        polys.append(f)
        leads.append(codec.exps(max(f)))
        sugar.append(s)
        return len(polys) - 1

    # Seed with inputs, smallest leading term first, each reduced by the current basis.
    inputs = sorted(inputs, key=lambda f: max(f))
    for f in inputs:
        r = _normal_form(f, reducers(), codec, p) if G else f
        if not r:
            continue
        if max(r) == zero_key:
            return [{zero_key: 1}]
        h = add_poly(r, max(codec.degree(k) for k in f))
        update(h)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        s_sugar = pair_sugar(i, j)
        fi, fj = polys[i], polys[j]
        lc = codec.lcm(leads[i], leads[j])
        lk = codec.key(lc)
        si = lk - max(fi)
        sj = lk - max(fj)
        spoly = {}
        for k, c in fi.items():
            spoly[k + si] = c
        for k, c in fj.items():
            nk = k + sj
            v = (spoly.get(nk, 0) - c) % p
            if v:
                spoly[nk] = v
            else:
                spoly.pop(nk, None)
        if not spoly:
            continue
        r = _normal_form(spoly, reducers(), codec, p)
        if not r:
            continue
        if max(r) == zero_key:
            return [{zero_key: 1}]
        h = add_poly(r, s_sugar)
        update(h)

    # minimal, then fully reduced basis
    active = [polys[i] for i in G]
    active_leads = [leads[i] for i in G]
    minimal = []
    for idx, (f, lf) in enumerate(zip(active, active_leads)):
        if any(
            divides_t(lg, lf) and (lg != lf or jdx < idx)
            for jdx, lg in enumerate(active_leads)
            if jdx != idx
        ):
            continue
        minimal.append(f)
    reduced = []
    for idx, f in enumerate(minimal):
        others = [
            (max(g), codec.pack(codec.exps(max(g))), None, g)
            for jdx, g in enumerate(minimal)
            if jdx != idx
        ]
        lk = max(f)
        tail = {k: c for k, c in f.items() if k != lk}
        tail = _normal_form(tail, others, codec, p) if tail else {}
        tail[lk] = f[lk]
        reduced.append(_monic(tail, p))
    reduced.sort(key=lambda f: max(f))
    return reduced


def _make_report(raw, codec, gens, field):
    nv = len(gens)
    gb = []
    leads = []
    for f in raw:
        gb.append(MultiPoly(gens, {codec.exps(k): c for k, c in f.items()}, field))
        leads.append(codec.exps(max(f)))
    krull = krull_dimension(leads, nv)
    report = ZeroDimReport(tuple(gens), field, codec.order, gb, leads, krull, _raw=raw)
    if krull == -1:
        report.std_monomials = []
        report.quotient_dim = 0
    elif krull == 0:
        report.std_monomials = standard_monomials(leads, nv)
        report.quotient_dim = len(report.std_monomials)
    return report


def krull_dimension(leads, nvars):
    """Largest set of variables containing the support of no leading monomial; -1 for the unit ideal."""
    if any(not any(e) for e in leads):
        return -1
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0


def standard_monomials(leads, nvars):
    """Monomials outside the leading-term ideal; the ideal must be zero-dimensional."""
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in leads if e[i] and all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pure:
            raise ValueError("ideal is not zero-dimensional")
        bounds.append(min(pure))
    out = []

    def rec(prefix):
        if len(prefix) == nvars:
            mono = tuple(prefix)
            if not any(all(a <= b for a, b in zip(e, mono)) for e in leads):
                out.append(mono)
            return
        i = len(prefix)
        for x in range(bounds[i]):
            prefix.append(x)
            # prune: if the partial monomial (rest zero) is already divisible, larger ones are too
            partial = tuple(prefix) + (0,) * (nvars - len(prefix))
            if any(all(a <= b for a, b in zip(e, partial)) for e in leads):
                prefix.pop()
                break
            rec(prefix)
            prefix.pop()

    rec([])
    return sorted(out, key=lambda m: (sum(m), m))


def normal_form(report, poly):
    """Normal form of a MultiPoly modulo the report's Groebner basis."""
    codec = MonomialCodec(len(report.gens), report.order)
    p = report.field.p
    reducers = [(max(g), codec.pack(codec.exps(max(g))), None, g) for g in report._raw]
    f = {codec.key(e): c % p for e, c in poly.terms.items() if c % p}
    r = _normal_form(f, reducers, codec, p) if f else {}
    return MultiPoly(report.gens, {codec.exps(k): c for k, c in r.items()}, report.field)


def multiplication_matrix(report, poly):
    """Matrix of multiplication by ``poly`` on the staircase basis (columns = images)."""
    if report.krull_dim != 0:
        raise ValueError("multiplication matrices need a zero-dimensional ideal")
    basis = report.std_monomials
    index = {m: i for i, m in enumerate(basis)}
    D = len(basis)
    f = report.field
    cols = []
    for m in basis:
        mono = MultiPoly.monomial(m, report.gens, 1, f)
        nf = normal_form(report, poly * mono)
        col = [0] * D
        for e, c in nf.terms.items():
            col[index[e]] = c
        cols.append(col)
    return [[cols[j][i] for j in range(D)] for i in range(D)]


def radical_check(report):
    """Seidenberg: a zero-dimensional ideal over a perfect field is radical iff the
    minimal polynomial of every coordinate multiplication map is squarefree."""
    if report.krull_dim > 0:
        raise ValueError("radical_check needs a zero-dimensional ideal")
    if report.krull_dim == -1:
        report.is_radical = True
        return True
    p = report.field.p
    result = True
    for name in report.gens:
        x = MultiPoly.gen(name, report.gens, report.field)
        mp = minimal_polynomial(multiplication_matrix(report, x), report.field)
        if not univariate.is_squarefree(mp, p):
            result = False
            break
    report.is_radical = result
    return result


def rational_points(report, rng=None, attempts=8):
    """F_p-rational points of a zero-dimensional ideal.

    Diagonalizes multiplication by a random linear form; when that form
    separates the points (simple eigenvalues) each F_p-root of its minimal
    polynomial gives one point, read off a left eigenvector.  Points are
    verified against the Groebner basis before being returned.
    """
    if report.krull_dim > 0:
        raise ValueError("rational points need a zero-dimensional ideal")
    if report.krull_dim == -1:
        report.rational_points = []
        return []
    rng = rng or random.Random(0)
    f = report.field
    p = f.p
    gens = report.gens
    basis = report.std_monomials
    D = len(basis)
    coord_nf = []
    for name in gens:
        nf = normal_form(report, MultiPoly.gen(name, gens, f))
        coord_nf.append(nf)
    index = {m: i for i, m in enumerate(basis)}
    for _ in range(attempts):
        coeffs = [rng.randrange(1, p) for _ in gens]
        ell = MultiPoly(gens, {tuple(int(i == j) for j in range(len(gens))): c for i, c in enumerate(coeffs)}, f)
        M = multiplication_matrix(report, ell)
        mp = minimal_polynomial(M, f)
        roots = univariate.roots(mp, p, rng)
        points = []
        separated = True
        for lam in roots:
            # left eigenvectors: (M^T - lam) w = 0
            shifted = [[(M[j][i] - (lam if i == j else 0)) % p for j in range(D)] for i in range(D)]
            ker = nullspace(shifted, f, D)
            if len(ker) != 1:
                separated = False
                break
            w = ker[0]
            one_idx = index[(0,) * len(gens)]
            scale = w[one_idx]
            if not scale:
                separated = False
                break
            inv = pow(scale, -1, p)
            pt = []
            for nf in coord_nf:
                val = sum(c * w[index[e]] for e, c in nf.terms.items()) * inv % p
                pt.append(val)
            points.append(tuple(pt))
        if not separated:
            continue
        if all(all(not g.evaluate(pt) for g in report.groebner) for pt in points):
            points.sort()
            report.rational_points = points
            return points
    raise RuntimeError("could not separate the points with a random linear form")
