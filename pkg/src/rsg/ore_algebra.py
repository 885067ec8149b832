"""Dense Ore polynomials K[X; theta, partial] and their Euclidean algorithms.

Multiplication follows ``X * a = theta(a) X + partial(a)``.  All algorithms
are schoolbook: quadratic multiplication and division, plain extended
Euclid.  Cofactors of the extended Euclidean algorithm multiply on the left,
so every triple satisfies ``U*A + V*B == R``.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple, Sequence

from rsg.skew_context import FieldElement, SkewContext

#: degree of the zero polynomial
NEG_INF = -math.inf


class OrePoly:
    """Immutable Ore polynomial with little-endian coefficients in K."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: SkewContext, coeffs: Sequence = ()):
        cs = [ctx.element(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, ctx, power: int = 1) -> "OrePoly":
        return cls(ctx, [ctx.zero] * power + [ctx.one])

    @classmethod
    def constant(cls, ctx, c) -> "OrePoly":
        return cls(ctx, [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = OrePoly(self.ctx, [other])
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, OrePoly):
            if other.ctx is not self.ctx:
                raise ValueError("Ore polynomials over different contexts")
            return other
        if isinstance(other, (int, FieldElement)):
            return OrePoly(self.ctx, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ctx, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return OrePoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ore_mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ore_mul(other, self)

    def __pow__(self, n: int):
        result = OrePoly(self.ctx, [self.ctx.one])
        for _ in range(n):
            result = ore_mul(result, self)
        return result

    def shift(self, k: int) -> "OrePoly":
        """Right multiplication by X^k (a plain shift, since X commutes with itself)."""
        if not self.coeffs:
            return self
        return OrePoly(self.ctx, [self.ctx.zero] * k + list(self.coeffs))

    def monic(self) -> "OrePoly":
        """Left-normalize: lc^-1 * self."""
        if not self.coeffs:
            return self
        inv = self.leading.inverse()
        return OrePoly(self.ctx, [inv * c for c in self.coeffs])

    def scale_left(self, c) -> "OrePoly":
        """c * self for a constant c (no twisting needed on the left)."""
        return OrePoly(self.ctx, [c * a for a in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            cs = str(c)
            if i == 0:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({cs}){mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"OrePoly({self})"


def _x_times(P: OrePoly) -> list:
    """Coefficients of X * P."""
    ctx = P.ctx
    out = [ctx.zero] * (len(P.coeffs) + 1)
    for j, b in enumerate(P.coeffs):
        out[j + 1] = out[j + 1] + ctx.theta(b)
        d = ctx.partial(b)
        if d:
            out[j] = out[j] + d
    return out


def ore_mul(A: OrePoly, B: OrePoly) -> OrePoly:
    """Product A*B under the Ore rule, expanding X^i * B one X at a time."""
    if A.ctx is not B.ctx:
        raise ValueError("Ore polynomials over different contexts")
    ctx = A.ctx
    if not A or not B:
        return OrePoly(ctx)
    out = [ctx.zero] * (len(A.coeffs) + len(B.coeffs) - 1)
    power = B  # X^i * B
    for i, a in enumerate(A.coeffs):
        if i:
            power = OrePoly(ctx, _x_times(power))
        if a:
            for j, b in enumerate(power.coeffs):
                out[j] = out[j] + a * b
    return OrePoly(ctx, out)


def right_divmod(A: OrePoly, B: OrePoly) -> tuple[OrePoly, OrePoly]:
    """(Q, R) with A = Q*B + R and deg R < deg B."""
    if not B:
        raise ZeroDivisionError("right division by the zero Ore polynomial")
    ctx = A.ctx
    db = B.degree
    if A.degree < db:
        return OrePoly(ctx), A
    # X^j * B for j = 0 .. deg A - deg B
    shifted = [B]
    for _ in range(A.degree - db):
        shifted.append(OrePoly(ctx, _x_times(shifted[-1])))
    rem = list(A.coeffs)
    quo = [ctx.zero] * (A.degree - db + 1)
    for j in range(A.degree - db, -1, -1):
        c = rem[j + db]
        if not c:
            continue
        q = c / shifted[j].leading
        quo[j] = q
        for i, b in enumerate(shifted[j].coeffs):
            rem[i] = rem[i] - q * b
    return OrePoly(ctx, quo), OrePoly(ctx, rem[:db])


def left_divmod(A: OrePoly, B: OrePoly) -> tuple[OrePoly, OrePoly]:
    """(Q, S) with A = B*Q + S and deg S < deg B.

    The leading coefficient of B*(q X^j) is lc(B) * theta^deg(B)(q), so each
    quotient coefficient is recovered with theta^-1.
    """
    if not B:
        raise ZeroDivisionError("left division by the zero Ore polynomial")
    ctx = A.ctx
    db = B.degree
    lc_inv = B.leading.inverse()
    rem = A
    quo = [ctx.zero] * (max(A.degree - db, -1) + 1)
    while rem.degree >= db:
        j = rem.degree - db
        q = rem.leading * lc_inv
        for _ in range(db):
            q = ctx.theta_inverse(q)
        quo[j] = q
        rem = rem - ore_mul(B, OrePoly(ctx, [q])).shift(j)
    return OrePoly(ctx, quo), rem


class EuclidStep(NamedTuple):
    """One row r = u*A + v*B of the extended Euclidean remainder sequence."""

    r: OrePoly
    u: OrePoly
    v: OrePoly


def euclid_sequence(A: OrePoly, B: OrePoly) -> Iterator[EuclidStep]:
    """Yield (r_i, u_i, v_i) for i = 0, 1, ... starting with r_0 = A, ending at r = 0.

    r_{-1} = B, r_{i+1} = r_{i-1} - q_i r_i where q_i is the right quotient.
    """
    ctx = A.ctx
    if B.ctx is not ctx:
        raise ValueError("Ore polynomials over different contexts")
    if not A and not B:
        raise ValueError("extended Euclid needs a nonzero input")
    zero, one = OrePoly(ctx), OrePoly(ctx, [ctx.one])
    prev = EuclidStep(B, zero, one)
    cur = EuclidStep(A, one, zero)
    yield cur
    while cur.r:
        q, rem = right_divmod(prev.r, cur.r)
        nxt = EuclidStep(rem, prev.u - ore_mul(q, cur.u), prev.v - ore_mul(q, cur.v))
        prev, cur = cur, nxt
        yield cur


def extended_right_euclid_partial(A: OrePoly, B: OrePoly, stop_degree: int) -> EuclidStep:
    """First remainder of degree < stop_degree, with U*A + V*B == R."""
    for step in euclid_sequence(A, B):
        if step.r.degree < stop_degree:
            return step
    raise AssertionError("unreachable: the sequence ends with a zero remainder")


def rgcd_extended(A: OrePoly, B: OrePoly) -> EuclidStep:
    """Monic right gcd G with left cofactors, U*A + V*B == G."""
    last = None
    for step in euclid_sequence(A, B):
        if not step.r:
            break
        last = step
    if last is None:  # A == 0
        last = EuclidStep(B, OrePoly(A.ctx), OrePoly(A.ctx, [A.ctx.one]))
    inv = last.r.leading.inverse()
    return EuclidStep(*(p.scale_left(inv) for p in last))


def rgcd(A: OrePoly, B: OrePoly) -> OrePoly:
    return rgcd_extended(A, B).r


def lclm(A: OrePoly, B: OrePoly) -> OrePoly:
    """Monic left lcm: the zero remainder's cofactors give u*A = -v*B."""
    if not A or not B:
        raise ValueError("lclm of the zero polynomial")
    for step in euclid_sequence(A, B):
        if not step.r:
            return ore_mul(step.u, A).monic()
    raise AssertionError("unreachable")


def evaluate(c: FieldElement, P: OrePoly, a: FieldElement) -> FieldElement:
    """ev_c(P)(a) = a * (P mod (X - u(a)/a)) with u = partial + c*theta."""
    ctx = P.ctx
    ctx._check_good(c)
    if not a:
        return ctx.zero
    b = ctx.pseudo_linear(c, a) / a
    _, rem = right_divmod(P, OrePoly(ctx, [-b, ctx.one]))
    return a * rem[0]


def operator_apply(c: FieldElement, P: OrePoly, a: FieldElement) -> FieldElement:
    """P(u)(a) = sum_i p_i u^i(a), iterating u = partial + c*theta literally."""
    ctx = P.ctx
    total = ctx.zero
    y = a
    for i, coeff in enumerate(P.coeffs):
        if i:
            y = ctx.pseudo_linear(c, y)
        total = total + coeff * y
    return total


def centre_generator(ctx: SkewContext) -> OrePoly:
    """Z(X) = X^r, normalized with zero constant term."""
    return OrePoly.x(ctx, ctx.r)


def kernel_generator(ctx: SkewContext, c: FieldElement) -> OrePoly:
    """Z(X) - N(c), the generator of ker ev_c."""
    return centre_generator(ctx) - OrePoly(ctx, [ctx.norm_value(c)])
