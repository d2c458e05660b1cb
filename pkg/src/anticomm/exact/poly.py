"""Sparse multivariate polynomials with exact coefficients.

A :class:`MultiPoly` is a map from exponent vectors to nonzero coefficients
over either :data:`QQ` or a prime field.  Values are immutable; every
operation returns a new polynomial.
"""

from __future__ import annotations

from operator import add

from .field import QQ


class MultiPoly:
    __slots__ = ("field", "gens", "terms")

    def __init__(self, gens, terms=None, field=QQ):
        self.gens = tuple(gens)
        self.field = field
        nv = len(self.gens)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nv:
                    raise ValueError(f"exponent vector {exps} has wrong length for {self.gens}")
                c = field(c)
                if c:
                    clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, gens, terms, field):
        # trusted constructor: terms already normalized, no zero coefficients
        obj = object.__new__(cls)
        obj.gens = gens
        obj.field = field
        obj.terms = terms
        return obj

    # construction helpers

    @classmethod
    def constant(cls, c, gens, field=QQ):
        return cls(gens, {(0,) * len(gens): c}, field)

    @classmethod
    def zero(cls, gens, field=QQ):
        return cls._raw(tuple(gens), {}, field)

    @classmethod
    def one(cls, gens, field=QQ):
        return cls.constant(1, gens, field)

    @classmethod
    def gen(cls, name, gens, field=QQ):
        gens = tuple(gens)
        i = gens.index(name)
        exps = [0] * len(gens)
        exps[i] = 1
        return cls(gens, {tuple(exps): 1}, field)

    @classmethod
    def monomial(cls, exps, gens, coeff=1, field=QQ):
        return cls(gens, {tuple(exps): coeff}, field)

    @classmethod
    def generators(cls, gens, field=QQ):
        gens = tuple(gens)
        return [cls.gen(g, gens, field) for g in gens]

    # basic queries

    @property
    def nvars(self):
        return len(self.gens)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def homogeneous_component(self, d):
        return MultiPoly._raw(
            self.gens, {e: c for e, c in self.terms.items() if sum(e) == d}, self.field
        )

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order of exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.gens != self.gens:
                raise ValueError(f"variable sets differ: {self.gens} vs {other.gens}")
            if other.field != self.field:
                raise ValueError(f"fields differ: {self.field} vs {other.field}")
            return other
        return MultiPoly.constant(other, self.gens, self.field)

    def _norm(self, c):
        p = self.field.p
        return c % p if p else c

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        p = self.field.p
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.gens, out, self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p:
            return MultiPoly._raw(self.gens, {e: p - c for e, c in self.terms.items()}, self.field)
        return MultiPoly._raw(self.gens, {e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.field(other)
            if not c:
                return MultiPoly._raw(self.gens, {}, self.field)
            return MultiPoly._raw(
                self.gens, {e: self._norm(v * c) for e, v in self.terms.items()}, self.field
            )
        other = self._coerce(other)
        p = self.field.p
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        if p:
            out = {e: v % p for e, v in out.items() if v % p}
        else:
            out = {e: v for e, v in out.items() if v}
        return MultiPoly._raw(self.gens, out, self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.gens, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale_inv(self, c):
        """Divide every coefficient by the nonzero scalar ``c``."""
        return self * self.field.inv(self.field(c))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.gens == other.gens and self.field == other.field and self.terms == other.terms
        try:
            return self == MultiPoly.constant(other, self.gens, self.field)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    # substitutions

    def swap(self, i, j):
        """Exchange variables ``i`` and ``j``."""

        def sw(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)

        return MultiPoly._raw(self.gens, {sw(e): c for e, c in self.terms.items()}, self.field)

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of field elements."""
        f = self.field
        point = [f(x) for x in point]
        p = f.p
        total = f.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * (pow(x, k, p) if p else x**k)
            total = total + v
        return f(total)

    def substitute(self, images, gens=None):
        """Replace variable ``i`` by ``images[i]`` (polynomials in ``gens``)."""
        gens = tuple(gens) if gens is not None else images[0].gens
        result = MultiPoly.zero(gens, self.field)
        powers = [{0: MultiPoly.one(gens, self.field)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        for e, c in self.terms.items():
            term = MultiPoly.constant(c, gens, self.field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # division

    def _lex_lead(self):
        return max(self.terms)

    def divmod_lex(self, divisor):
        """Multivariate division by one polynomial under lex order; returns (q, r)."""
        divisor = self._coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("division by zero polynomial")
        f = self.field
        lt = divisor._lex_lead()
        lc_inv = f.inv(divisor.terms[lt])
        q = MultiPoly.zero(self.gens, f)
        r = MultiPoly.zero(self.gens, f)
        rem = self
        while rem.terms:
            e = rem._lex_lead()
            c = rem.terms[e]
            if all(a >= b for a, b in zip(e, lt)):
                mono = MultiPoly._raw(
                    self.gens, {tuple(a - b for a, b in zip(e, lt)): f(c * lc_inv)}, f
                )
                q = q + mono
                rem = rem - mono * divisor
            else:
                lead = MultiPoly._raw(self.gens, {e: c}, f)
                r = r + lead
                rem = rem - lead
        return q, r

    def exact_div(self, divisor):
        q, r = self.divmod_lex(divisor)
        if r.terms:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    # display

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)
