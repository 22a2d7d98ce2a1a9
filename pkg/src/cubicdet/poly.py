"""Dense univariate polynomials over a field, as lists of raw values.

Coefficients are stored lowest degree first and kept trimmed (no trailing
zeros); the zero polynomial is ``[]``.
"""

import random


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def deg(c):
    return len(c) - 1


def add(K, a, b):
    n = max(len(a), len(b))
    out = [K.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def sub(K, a, b):
    n = max(len(a), len(b))
    out = [K.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def scale(K, a, c):
    if c == 0:
        return []
    return [K.mul(x, c) for x in a]


def mul(K, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] = K.add(out[i + j], K.mul(x, y))
    return trim(out)


def divmod_(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lead = K.inv(b[-1])
    if len(a) <= db:
        return [], trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        c = K.mul(c, inv_lead)
        quot[i - db] = c
        for j in range(db + 1):
            if b[j] != 0:
                a[i - db + j] = K.sub(a[i - db + j], K.mul(c, b[j]))
    return trim(quot), trim(a[:db])


def mod(K, a, b):
    return divmod_(K, a, b)[1]


def monic(K, a):
    if not a:
        return []
    return scale(K, a, K.inv(a[-1]))


def gcd(K, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(K, a, b)
    return monic(K, a)


def powmod(K, base, e, modulus):
    result = [K.one]
    base = mod(K, base, modulus)
    while e:
        if e & 1:
            result = mod(K, mul(K, result, base), modulus)
        base = mod(K, mul(K, base, base), modulus)
        e >>= 1
    return mod(K, result, modulus)


def evaluate(K, a, x):
    acc = 0
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


def derivative(K, a):
    return trim([K.mul(K.from_int(i), a[i]) for i in range(1, len(a))])


def from_roots(K, roots):
    out = [K.one]
    for r in roots:
        out = mul(K, out, [K.neg(r), K.one])
    return out


def _split_linear(K, g, rng):
    """Roots of a monic g that splits into distinct linear factors over K."""
    if len(g) == 1:
        return []
    if len(g) == 2:
        return [K.neg(g[0])]
    Q = K.q
    while True:
        a = rng.randrange(K.q)
        if K.p == 2:
            # relative trace of a*x to F_2 splits g
            t = [0, a]
            acc = list(t)
            for _ in range(K.m - 1):
                t = mod(K, mul(K, t, t), g)
                acc = add(K, acc, t)
            h = acc
        else:
            h = sub(K, powmod(K, [a, K.one], (Q - 1) // 2, g), [K.one])
        d = gcd(K, g, h)
        if 0 < deg(d) < deg(g):
            other = divmod_(K, g, d)[0]
            return _split_linear(K, d, rng) + _split_linear(K, monic(K, other), rng)


def roots(K, f):
    """Roots of f in the finite field K with multiplicities, sorted by code.

    The distinct roots are isolated as gcd(f, x^q - x) and split by
    Cantor-Zassenhaus with a fixed seed, so the output is deterministic.
    """
    f = trim(f)
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return []
    f = monic(K, f)
    xq = powmod(K, [0, K.one], K.q, f)
    g = gcd(K, f, sub(K, xq, [0, K.one]))
    found = sorted(_split_linear(K, g, random.Random(0)))
    out = []
    for r in found:
        m = 0
        cur = f
        while True:
            quo, rem = divmod_(K, cur, [K.neg(r), K.one])
            if rem:
                break
            cur = quo
            m += 1
        out.append((r, m))
    return out


def has_root_in_closure(K, polys):
    """True when the polynomials share a root over the algebraic closure."""
    polys = [trim(p) for p in polys]
    nonzero = [p for p in polys if p]
    if not nonzero:
        return True
    g = nonzero[0]
    for p in nonzero[1:]:
        g = gcd(K, g, p)
    return deg(g) >= 1
