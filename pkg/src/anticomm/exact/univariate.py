"""Dense univariate polynomials over F_p as low-to-high coefficient lists."""

import random


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(trim(f)) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([x % p for x in out])


def divmod_(f, g, p):
    f = trim([x % p for x in f])
    g = trim([x % p for x in g])
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv % p
        shift = len(r) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        r = trim(r)
    return trim(q), r


def monic(f, p):
    f = trim(f)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [x * inv % p for x in f]


def gcd(f, g, p):
    f, g = trim([x % p for x in f]), trim([x % p for x in g])
    while g:
        f, g = g, divmod_(f, g, p)[1]
    return monic(f, p)


def derivative(f, p):
    return trim([i * c % p for i, c in enumerate(f)][1:])


def powmod(base, e, mod, p):
    result = [1]
    base = divmod_(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = divmod_(mul(base, base, p), mod, p)[1]
    return result


def is_squarefree(f, p):
    """True iff gcd(f, f') is a nonzero constant.

    Over F_p a nonconstant f with f' = 0 is a p-th power, hence not squarefree.
    """
    f = trim(f)
    if len(f) <= 1:
        return True
    d = derivative(f, p)
    if not d:
        return False
    return len(gcd(f, d, p)) == 1


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def roots(f, p, rng=None):
    """Distinct roots of f in F_p, sorted.

    Takes gcd(f, x^p - x) and splits it by Cantor-Zassenhaus; ``rng`` seeds
    the splitting so results are reproducible.
    """
    f = monic(f, p)
    if len(f) <= 1:
        return []
    rng = rng or random.Random(0)
    xp = powmod([0, 1], p, f, p)
    g = gcd(f, sub(xp, [0, 1], p), p)
    found = []
    _split(g, p, rng, found)
    return sorted(found)


def _split(g, p, rng, out):
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append((-g[0]) * pow(g[1], -1, p) % p)
        return
    while True:
        a = rng.randrange(p)
        h = powmod([a, 1], (p - 1) // 2, g, p)
        h = sub(h, [1], p)
        f1 = gcd(g, h, p)
        if 0 < len(f1) - 1 < d:
            _split(f1, p, rng, out)
            _split(divmod_(g, f1, p)[0], p, rng, out)
            return
