"""Dense univariate polynomials over a small finite field.

A field object exposes its characteristic ``p``, ``zero``, ``one``, ``add``, ``sub``, ``neg``, ``mul``,
``inv`` and ``elements()``.  Polynomials are tuples of field values in
little-endian order with no trailing zeros; ``()`` is the zero polynomial.
"""

from __future__ import annotations

import itertools


class PrimeField:
    """GF(p) with values stored as ints in ``range(p)``."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def coerce(self, v):
        return int(v) % self.p

    def __repr__(self):
        return f"GF({self.p})"


def trim(f, field) -> tuple:
    f = list(f)
    while f and f[-1] == field.zero:
        f.pop()
    return tuple(f)


def degree(f) -> int:
    return len(f) - 1


def add(field, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(field.add(a, b))
    return trim(out, field)


def sub(field, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(field.sub(a, b))
    return trim(out, field)


def scale(field, f, c):
    return trim([field.mul(c, a) for a in f], field)


def mul(field, f, g):
    if not f or not g:
        return ()
    if type(field) is PrimeField:
        return _mul_p(field.p, f, g)
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == field.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(out, field)


def divmod_(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if type(field) is PrimeField:
        return _divmod_p(field.p, f, g)
    rem = list(f)
    dg = len(g) - 1
    lead_inv = field.inv(g[-1])
    if len(rem) <= dg:
        return (), trim(rem, field)
    quo = [field.zero] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == field.zero:
            continue
        c = field.mul(c, lead_inv)
        quo[i - dg] = c
        for j, b in enumerate(g):
            rem[i - dg + j] = field.sub(rem[i - dg + j], field.mul(c, b))
    return trim(quo, field), trim(rem[:dg], field)


def _trim_ints(out):
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _mul_p(p, f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim_ints([c % p for c in out])


def _divmod_p(p, f, g):
    dg = len(g) - 1
    if len(f) <= dg:
        return (), tuple(f)
    rem = list(f)
    lead_inv = pow(g[-1], p - 2, p)
    quo = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] % p
        if not c:
            continue
        c = c * lead_inv % p
        quo[i - dg] = c
        off = i - dg
        for j in range(dg):
            rem[off + j] -= c * g[j]
    return _trim_ints(quo), _trim_ints([c % p for c in rem[:dg]])


def rem(field, f, g):
    return divmod_(field, f, g)[1]


def monic(field, f):
    if not f:
        return f
    return scale(field, f, field.inv(f[-1]))


def gcd(field, f, g):
    """Monic gcd (zero if both inputs are zero)."""
    while g:
        f, g = g, rem(field, f, g)
    return monic(field, f)


def derivative(field, f):
    out = []
    for i in range(1, len(f)):
        c = field.zero
        for _ in range(i % field.p):
            c = field.add(c, f[i])
        out.append(c)
    return trim(out, field)


def monic_polys(field, deg):
    """All monic polynomials of exact degree ``deg``."""
    elems = list(field.elements())
    for lower in itertools.product(elems, repeat=deg):
        yield tuple(lower) + (field.one,)


def is_irreducible(field, f) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    f = trim(f, field)
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(field, k):
            if not rem(field, f, g):
                return False
    return True


def first_irreducible(field, deg):
    """Smallest monic irreducible of degree ``deg`` (constant coefficient varies fastest)."""
    elems = list(field.elements())
    for lower in itertools.product(elems, repeat=deg):
        f = tuple(reversed(lower)) + (field.one,)
        if is_irreducible(field, f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {deg} over {field}")
