"""Coefficient fields with their twist data.

Two settings are supported:

* ``FrobeniusContext``: K = GF(q^r) built as a tower GF(p) < GF(q) < GF(q^r),
  theta = x -> x^q, partial = 0, fixed field F = GF(q).
* ``DerivationContext``: K = GF(p)(t), theta = id, partial = d/dt,
  fixed field F = GF(p)(t^p) and r = p.

Elements of K are immutable ``FieldElement`` instances supporting the usual
arithmetic operators.  Every element carries the context it belongs to.
"""

from __future__ import annotations

import enum
import functools
import itertools
import random

from rsg import gfp
from rsg.gfp import PrimeField


class Setting(enum.Enum):
    FROBENIUS = "frobenius"
    DERIVATION = "derivation"


class ExtensionField:
    """GF(Q^d) over a base field of order Q, values are length-d tuples."""

    def __init__(self, base, modulus):
        modulus = gfp.trim(tuple(modulus), base)
        if len(modulus) < 2:
            raise ValueError("extension modulus must have degree >= 1")
        modulus = gfp.monic(base, modulus)
        if not gfp.is_irreducible(base, modulus):
            raise ValueError(f"modulus {list(modulus)} is reducible over {base!r}")
        self.base = base
        self.p = base.p
        self.modulus = modulus
        self.degree = d = len(modulus) - 1
        self.order = base.order**d
        self.zero = (base.zero,) * d
        self.one = (base.one,) + (base.zero,) * (d - 1)
        # x^(d+i) mod modulus, for i = 0 .. d-2
        self._reductions = []
        self._reductions.append(tuple(base.neg(c) for c in modulus[:-1]))
        for _ in range(d - 2):
            self._reductions.append(self._times_x(self._reductions[-1]))
        self._inverses = {}

    def _times_x(self, v):
        b = self.base
        top = v[-1]
        shifted = (b.zero,) + v[:-1]
        return tuple(b.add(s, b.mul(top, c)) for s, c in zip(shifted, self._reductions[0]))

    def embed(self, c):
        return (c,) + (self.base.zero,) * (self.degree - 1)

    def add(self, a, b):
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def scale(self, c, a):
        mul = self.base.mul
        return tuple(mul(c, x) for x in a)

    def mul(self, a, b):
        base = self.base
        d = self.degree
        zero = base.zero
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y != zero:
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        out = prod[:d]
        for i, c in enumerate(prod[d:]):
            if c == zero:
                continue
            red = self._reductions[i]
            for j in range(d):
                out[j] = base.add(out[j], base.mul(c, red[j]))
        return tuple(out)

    def pow(self, a, n):
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        try:
            return self._inverses[a]
        except KeyError:
            pass
        result = self.pow(a, self.order - 2)
        self._inverses[a] = result
        return result

    def elements(self):
        for coeffs in itertools.product(list(self.base.elements()), repeat=self.degree):
            yield tuple(coeffs)

    def __repr__(self):
        return f"GF({self.base.order}^{self.degree})"


class FieldElement:
    """Common operator plumbing; subclasses implement the ``_add``/``_mul``/... primitives."""

    __slots__ = ("ctx",)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("elements belong to different contexts")
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._mul(other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else other._mul(self.inverse())

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.element(other)
        if not isinstance(other, FieldElement) or other.ctx is not self.ctx:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class GFElement(FieldElement):
    """Element of GF(q^r): tuple of r GF(q) values in the power basis of ``modulus_ext``."""

    __slots__ = ("v",)

    def __init__(self, ctx, v):
        self.ctx = ctx
        self.v = v

    def _key(self):
        return self.v

    def _add(self, other):
        return GFElement(self.ctx, self.ctx.K.add(self.v, other.v))

    def _mul(self, other):
        return GFElement(self.ctx, self.ctx.K.mul(self.v, other.v))

    def __neg__(self):
        return GFElement(self.ctx, self.ctx.K.neg(self.v))

    def __bool__(self):
        return self.v != self.ctx.K.zero

    def inverse(self):
        return GFElement(self.ctx, self.ctx.K.inv(self.v))

    def __str__(self):
        terms = []
        for j in reversed(range(len(self.v))):
            c = self.v[j]
            if c == self.ctx.Fq.zero:
                continue
            cs = str(c) if isinstance(c, int) else "(" + _render_poly(c, "y") + ")"
            if j == 0:
                terms.append(cs)
            else:
                mono = "x" if j == 1 else f"x^{j}"
                terms.append(mono if c == self.ctx.Fq.one else cs + mono)
        return "+".join(terms) if terms else "0"


class RationalFunction(FieldElement):
    """Element of GF(p)(t) stored as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, ctx, num, den=(1,)):
        F = ctx.Fp
        num = gfp.trim(tuple(F.coerce(c) for c in num), F)
        den = gfp.trim(tuple(F.coerce(c) for c in den), F)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (1,)
        else:
            g = gfp.gcd(F, num, den)
            if len(g) > 1:
                num = gfp.divmod_(F, num, g)[0]
                den = gfp.divmod_(F, den, g)[0]
            lc = F.inv(den[-1])
            num = gfp.scale(F, num, lc)
            den = gfp.scale(F, den, lc)
        self.ctx = ctx
        self.num = num
        self.den = den

    def _key(self):
        return (self.num, self.den)

    def _add(self, other):
        F = self.ctx.Fp
        if self.den == other.den:
            return RationalFunction(self.ctx, gfp.add(F, self.num, other.num), self.den)
        num = gfp.add(F, gfp.mul(F, self.num, other.den), gfp.mul(F, other.num, self.den))
        return RationalFunction(self.ctx, num, gfp.mul(F, self.den, other.den))

    def _mul(self, other):
        F = self.ctx.Fp
        return RationalFunction(self.ctx, gfp.mul(F, self.num, other.num),
                                gfp.mul(F, self.den, other.den))

    def __neg__(self):
        F = self.ctx.Fp
        return _raw_fraction(self.ctx, tuple(F.neg(c) for c in self.num), self.den)

    def __bool__(self):
        return bool(self.num)

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.ctx, self.den, self.num)

    def derivative(self):
        F = self.ctx.Fp
        du = gfp.derivative(F, self.num)
        dv = gfp.derivative(F, self.den)
        num = gfp.sub(F, gfp.mul(F, du, self.den), gfp.mul(F, self.num, dv))
        return RationalFunction(self.ctx, num, gfp.mul(F, self.den, self.den))

    @property
    def degree_bound(self) -> int:
        return max(len(self.num), len(self.den)) - 1

    def __str__(self):
        num = _render_poly(self.num, "t")
        if self.den == (1,):
            return num
        return f"({num})/({_render_poly(self.den, 't')})"


def _raw_fraction(ctx, num, den):
    # num/den already reduced with monic den
    out = RationalFunction.__new__(RationalFunction)
    out.ctx = ctx
    out.num = num
    out.den = den
    return out


def _render_poly(coeffs, var):
    terms = []
    for i in reversed(range(len(coeffs))):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return "+".join(terms) if terms else "0"


class SkewContext:
    """The ambient data (K, theta, partial, F, r) shared by every Ore polynomial."""

    setting: Setting
    p: int
    r: int

    # subclasses provide: element, theta, theta_inverse, partial, basis,
    # coords_over_F, norm_value, is_good, random_element, random_fixed

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    def equivalent(self, c1, c2) -> bool:
        """True when ker ev_c1 = ker ev_c2, decided by comparing N(c1) and N(c2)."""
        return self.norm_value(c1) == self.norm_value(c2)

    def pseudo_linear(self, c, a):
        """(partial + c theta)(a)."""
        return self.partial(a) + c * self.theta(a)

    def in_fixed_field(self, a) -> bool:
        return self.theta(a) == a and not self.partial(a)

    def from_basis(self, coords):
        """Inverse of ``coords_over_F``."""
        total = self.zero
        for f, b in zip(coords, self.basis()):
            total = total + f * b
        return total

    def _check_good(self, c):
        if not self.is_good(c):
            raise ValueError(f"{c} is not a good evaluation parameter")


class FrobeniusContext(SkewContext):
    """K = GF(q^r) with theta = Frob_q and partial = 0."""

    setting = Setting.FROBENIUS

    def __init__(self, p: int, r: int, e: int = 1, modulus_base=None, modulus_ext=None):
        if r < 1 or e < 1:
            raise ValueError("r and e must be positive")
        self.p = p
        self.e = e
        self.r = r
        self.Fp = PrimeField(p)
        if e == 1:
            if modulus_base is not None and len(gfp.trim(modulus_base, self.Fp)) not in (0, 2):
                raise ValueError("modulus_base must have degree e")
            self.Fq = self.Fp
            self.modulus_base = None
        else:
            if modulus_base is None:
                modulus_base = builtin_modulus(p, 1, e)
            self.Fq = ExtensionField(self.Fp, [self.Fp.coerce(c) for c in modulus_base])
            if self.Fq.degree != e:
                raise ValueError("modulus_base must have degree e")
            self.modulus_base = self.Fq.modulus
        self.q = p**e
        if modulus_ext is None:
            modulus_ext = builtin_modulus(p, e, r, self.modulus_base)
        modulus_ext = [self._coerce_fq(c) for c in modulus_ext]
        if len(gfp.trim(modulus_ext, self.Fq)) - 1 != r:
            raise ValueError("modulus_ext must have degree r")
        self.K = ExtensionField(self.Fq, modulus_ext)
        self.modulus_ext = self.K.modulus
        self._basis = [self._wrap(tuple(self.Fq.one if i == j else self.Fq.zero for i in range(r)))
                       for j in range(r)]
        self._theta_images = [self._pow_elem(b, self.q) for b in self._basis]
        self._theta_inv_images = [self._pow_elem(b, self.q ** (r - 1)) for b in self._basis]

    def _coerce_fq(self, c):
        if self.e == 1:
            if isinstance(c, (list, tuple)):
                (c,) = c
            return self.Fp.coerce(c)
        if isinstance(c, int):
            return self.Fq.embed(self.Fp.coerce(c))
        c = list(c) + [0] * (self.e - len(c))
        if len(c) != self.e:
            raise ValueError(f"GF(q) coefficient {c} has more than e entries")
        return tuple(self.Fp.coerce(x) for x in c)

    def _wrap(self, v):
        return GFElement(self, v)

    def _pow_elem(self, a, n):
        return self._wrap(self.K.pow(a.v, n))

    def element(self, value):
        """Build an element from an int, a GFElement or a little-endian coefficient list."""
        if isinstance(value, GFElement):
            if value.ctx is not self:
                raise ValueError("element from another context")
            return value
        if isinstance(value, int):
            return self._wrap(self.K.embed(self._coerce_fq(value)))
        value = list(value)
        if len(value) > self.r:
            raise ValueError(f"element has {len(value)} coefficients, expected at most {self.r}")
        coeffs = [self._coerce_fq(c) for c in value] + [self.Fq.zero] * (self.r - len(value))
        return self._wrap(tuple(coeffs))

    @property
    def gen(self):
        """The class of x in GF(q)[x]/(modulus_ext)."""
        if self.r > 1:
            return self._basis[1]
        return self._wrap((self.Fq.neg(self.modulus_ext[0]),))

    def theta(self, a):
        out = self.K.zero
        for c, img in zip(a.v, self._theta_images):
            if c != self.Fq.zero:
                out = self.K.add(out, self.K.scale(c, img.v))
        return self._wrap(out)

    def theta_inverse(self, a):
        out = self.K.zero
        for c, img in zip(a.v, self._theta_inv_images):
            if c != self.Fq.zero:
                out = self.K.add(out, self.K.scale(c, img.v))
        return self._wrap(out)

    def partial(self, a):
        return self.zero

    def basis(self):
        return list(self._basis)

    def coords_over_F(self, a):
        return [self._wrap(self.K.embed(c)) for c in a.v]

    def norm_value(self, c):
        self._check_good(c)
        out = c
        cur = c
        for _ in range(self.r - 1):
            cur = self.theta(cur)
            out = out * cur
        return out

    def is_good(self, c) -> bool:
        return bool(c)

    def elements(self):
        for v in self.K.elements():
            yield self._wrap(v)

    def fixed_elements(self):
        for c in self.Fq.elements():
            yield self._wrap(self.K.embed(c))

    def primitive_element(self):
        """Smallest multiplicative generator of K* in enumeration order."""
        order = self.K.order - 1
        primes = _prime_factors(order)
        for a in self.elements():
            if a and all(a ** (order // ell) != self.one for ell in primes):
                return a
        raise ArithmeticError("no primitive element found")

    def random_element(self, rng: random.Random):
        return self._wrap(tuple(self._random_fq(rng) for _ in range(self.r)))

    def random_fixed(self, rng: random.Random):
        return self._wrap(self.K.embed(self._random_fq(rng)))

    def _random_fq(self, rng):
        if self.e == 1:
            return rng.randrange(self.p)
        return tuple(rng.randrange(self.p) for _ in range(self.e))

    def descriptor(self) -> dict:
        out = {"setting": "frobenius", "p": self.p, "e": self.e, "r": self.r}
        if self.e > 1:
            out["modulus_base"] = list(self.modulus_base)
        out["modulus_ext"] = [self._fq_to_json(c) for c in self.modulus_ext]
        return out

    def _fq_to_json(self, c):
        return c if self.e == 1 else list(c)

    def element_to_json(self, a):
        return [self._fq_to_json(c) for c in a.v]

    def element_from_json(self, data):
        if isinstance(data, bool) or not isinstance(data, (int, list)):
            raise ValueError(f"expected a coefficient list, got {data!r}")
        return self.element(data)

    def __repr__(self):
        return f"FrobeniusContext(p={self.p}, e={self.e}, r={self.r})"


class DerivationContext(SkewContext):
    """K = GF(p)(t) with theta = id and partial = d/dt; F = GF(p)(t^p), r = p."""

    setting = Setting.DERIVATION

    def __init__(self, p: int):
        self.Fp = PrimeField(p)
        self.p = p
        self.r = p

    def element(self, value, den=None):
        """Build t-rational functions from ints, coefficient lists or ``{"num", "den"}`` dicts."""
        if isinstance(value, RationalFunction):
            if value.ctx is not self:
                raise ValueError("element from another context")
            return value if den is None else value / self.element(den)
        if isinstance(value, dict):
            return RationalFunction(self, value["num"], value.get("den", [1]))
        if isinstance(value, int):
            value = [value]
        if den is None:
            den = [1]
        elif isinstance(den, int):
            den = [den]
        return RationalFunction(self, list(value), list(den))

    @property
    def t(self):
        return RationalFunction(self, (0, 1))

    gen = t

    def theta(self, a):
        return a

    theta_inverse = theta

    def partial(self, a):
        return a.derivative()

    def basis(self):
        return [RationalFunction(self, (0,) * j + (1,)) for j in range(self.p)]

    def coords_over_F(self, a):
        # a = u v^(p-1) / v^p with v^p = v(t^p) in F
        F = self.Fp
        p = self.p
        v_pow = (1,)
        for _ in range(p - 1):
            v_pow = gfp.mul(F, v_pow, a.den)
        num = gfp.mul(F, a.num, v_pow)
        den_p = _inflate(a.den, p)
        out = []
        for j in range(p):
            part = [0] * len(num)
            for i in range(j, len(num), p):
                part[i] = num[i]
            out.append(RationalFunction(self, part, den_p) / self.t**j if part else self.zero)
        return out

    def norm_value(self, c):
        self._check_good(c)
        d = c
        for _ in range(self.p - 1):
            d = d.derivative()
        return c**self.p + d

    def is_good(self, c) -> bool:
        return True

    def random_element(self, rng: random.Random, degree_bound: int = 3):
        num = [rng.randrange(self.p) for _ in range(rng.randint(0, degree_bound) + 1)]
        while True:
            den = [rng.randrange(self.p) for _ in range(rng.randint(0, degree_bound) + 1)]
            if any(den):
                return RationalFunction(self, num, den)

    def random_fixed(self, rng: random.Random, degree_bound: int = 1):
        a = self.random_element(rng, degree_bound)
        return RationalFunction(self, _inflate(a.num, self.p), _inflate(a.den, self.p))

    def polynomials(self, max_degree: int):
        """Every polynomial of GF(p)[t] with degree <= max_degree."""
        for coeffs in itertools.product(range(self.p), repeat=max_degree + 1):
            yield RationalFunction(self, coeffs)

    def descriptor(self) -> dict:
        return {"setting": "derivation", "p": self.p}

    def element_to_json(self, a):
        return {"num": list(a.num), "den": list(a.den)}

    def element_from_json(self, data):
        if isinstance(data, bool):
            raise ValueError(f"expected a rational function, got {data!r}")
        if isinstance(data, dict):
            if set(data) - {"num", "den"} or "num" not in data:
                raise ValueError(f"rational function needs 'num' (and optional 'den'), got {data!r}")
            for key in ("num", "den"):
                val = data.get(key, [1])
                if not isinstance(val, list) or not all(
                        isinstance(x, int) and not isinstance(x, bool) for x in val):
                    raise ValueError(f"'{key}' must be a list of integers, got {val!r}")
            if not any(x % self.p for x in data.get("den", [1])):
                raise ValueError("denominator is zero")
        elif not isinstance(data, (int, list)):
            raise ValueError(f"expected a rational function, got {data!r}")
        return self.element(data)

    def __repr__(self):
        return f"DerivationContext(p={self.p})"


def _inflate(coeffs, p):
    """f(t) -> f(t^p)."""
    out = [0] * ((len(coeffs) - 1) * p + 1) if coeffs else []
    for i, c in enumerate(coeffs):
        out[i * p] = c
    return out


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def _builtin_modulus_cached(p, e, degree, modulus_base):
    base = PrimeField(p) if e == 1 else ExtensionField(PrimeField(p), modulus_base)
    return gfp.first_irreducible(base, degree)


def builtin_modulus(p: int, e: int, degree: int, modulus_base=None):
    """Deterministic default modulus: first monic irreducible of the given degree."""
    if e > 1:
        modulus_base = tuple(modulus_base) if modulus_base is not None else builtin_modulus(p, 1, e)
    return list(_builtin_modulus_cached(p, e, degree, modulus_base))


def context_from_descriptor(desc: dict) -> SkewContext:
    """Build a context from its JSON descriptor."""
    if not isinstance(desc, dict):
        raise ValueError("context descriptor must be a JSON object")
    setting = desc.get("setting")
    if "p" not in desc:
        raise ValueError("context descriptor: missing field 'p'")
    if setting == "derivation":
        return DerivationContext(desc["p"])
    if setting == "frobenius":
        if "r" not in desc:
            raise ValueError("context descriptor: missing field 'r'")
        return FrobeniusContext(desc["p"], desc["r"], desc.get("e", 1),
                                desc.get("modulus_base"), desc.get("modulus_ext"))
    raise ValueError(f"context descriptor: unknown setting {setting!r}")
