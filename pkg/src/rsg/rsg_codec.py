"""Reed-Solomon-Gabidulin codes: construction, encoding, rank-Hamming metric, Gao decoding."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from rsg import linalg
from rsg.ore_algebra import (EuclidStep, OrePoly, evaluate, extended_right_euclid_partial,
                             lclm, left_divmod)
from rsg.skew_context import Setting, SkewContext

#: largest t-degree tolerated in intermediate decoder values (derivation setting)
DEFAULT_DEGREE_LIMIT = 10_000


class InvalidParameters(ValueError):
    """Raised when code parameters violate the construction assumptions."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class BlockVector:
    """An element of K^{n_1} x ... x K^{n_s}."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        self.blocks = tuple(tuple(b) for b in blocks)

    @classmethod
    def zeros(cls, params: "RsgParams") -> "BlockVector":
        z = params.ctx.zero
        return cls([[z] * ni for ni in params.block_sizes])

    @classmethod
    def from_flat(cls, flat, sizes) -> "BlockVector":
        it = iter(flat)
        return cls([[next(it) for _ in range(ni)] for ni in sizes])

    @property
    def shape(self):
        return tuple(len(b) for b in self.blocks)

    def flat(self) -> list:
        return [x for b in self.blocks for x in b]

    def _check(self, other):
        if not isinstance(other, BlockVector):
            return NotImplemented
        if other.shape != self.shape:
            raise ValueError(f"block shapes differ: {self.shape} vs {other.shape}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return BlockVector([[x + y for x, y in zip(a, b)]
                            for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return BlockVector([[x - y for x, y in zip(a, b)]
                            for a, b in zip(self.blocks, other.blocks)])

    def __neg__(self):
        return BlockVector([[-x for x in b] for b in self.blocks])

    def __eq__(self, other):
        if not isinstance(other, BlockVector):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def hamming_weight(self) -> int:
        return sum(1 for x in self.flat() if x)

    def __str__(self):
        return "(" + ", ".join("(" + ", ".join(str(x) for x in b) + ")"
                               for b in self.blocks) + ")"

    __repr__ = __str__


class RsgParams:
    """Code parameters (k, c, g) over a skew context.

    The annihilator L is computed lazily on first use and cached.
    """

    def __init__(self, ctx: SkewContext, k: int, c: Sequence, g: Sequence[Sequence]):
        if len(c) != len(g):
            raise InvalidParameters([f"c has {len(c)} entries but g has {len(g)} blocks"])
        self.ctx = ctx
        self.k = k
        self.c = tuple(ctx.element(ci) for ci in c)
        self.g = tuple(tuple(ctx.element(x) for x in gi) for gi in g)

    @property
    def s(self) -> int:
        return len(self.c)

    @property
    def block_sizes(self) -> tuple:
        return tuple(len(gi) for gi in self.g)

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    @property
    def radius(self) -> int:
        """Decoding radius w = floor((n - k) / 2)."""
        return (self.n - self.k) // 2

    @functools.cached_property
    def points(self):
        return eval_points(self)

    @functools.cached_property
    def annihilator(self) -> OrePoly:
        return annihilator(self)

    @functools.cached_property
    def full_generator(self):
        return generator_matrix(self, self.n)

    def zero_vector(self) -> BlockVector:
        return BlockVector.zeros(self)

    def vector(self, blocks) -> BlockVector:
        """BlockVector with entries coerced into K and shape checked against the code."""
        v = BlockVector([[self.ctx.element(x) for x in b] for b in blocks])
        if v.shape != self.block_sizes:
            raise ValueError(f"vector shape {v.shape} does not match code {self.block_sizes}")
        return v

    def __repr__(self):
        return f"RsgParams({self.ctx!r}, k={self.k}, n={self.n}, s={self.s})"


def validate_params(params: RsgParams) -> list[str]:
    """Every violated construction assumption, one message each; empty when valid."""
    ctx = params.ctx
    errors = []
    if params.s < 1:
        errors.append("at least one evaluation class is required")
    if not 1 <= params.k <= params.n:
        errors.append(f"k = {params.k} must satisfy 1 <= k <= n = {params.n}")
    good = []
    for i, ci in enumerate(params.c):
        if ctx.is_good(ci):
            good.append(i)
        else:
            errors.append(f"c[{i}] = {ci} is not good")
    for i, j in itertools.combinations(good, 2):
        if ctx.equivalent(params.c[i], params.c[j]):
            errors.append(f"c[{i}] and c[{j}] are equivalent")
    for i, gi in enumerate(params.g):
        if not gi:
            errors.append(f"g[{i}] is empty")
        elif len(gi) > ctx.r:
            errors.append(f"g[{i}] has {len(gi)} entries, more than [K:F] = {ctx.r}")
        elif linalg.rank([ctx.coords_over_F(x) for x in gi]) < len(gi):
            errors.append(f"g[{i}] is not F-linearly independent")
    if not errors:
        deg = params.annihilator.degree
        if deg != params.n:
            errors.append(f"annihilator has degree {deg}, expected n = {params.n}")
    return errors


def check_params(params: RsgParams) -> RsgParams:
    errors = validate_params(params)
    if errors:
        raise InvalidParameters(errors)
    return params


def eval_points(params: RsgParams):
    """a_{i,j} = (partial + c_i theta)(g_{i,j}) / g_{i,j}."""
    ctx = params.ctx
    return tuple(tuple(ctx.pseudo_linear(ci, x) / x for x in gi)
                 for ci, gi in zip(params.c, params.g))


def annihilator(params: RsgParams) -> OrePoly:
    """Monic left lcm of the X - a_{i,j}, folded in input order."""
    ctx = params.ctx
    X = OrePoly.x(ctx)
    L = None
    for a in itertools.chain.from_iterable(params.points):
        factor = X - a
        L = factor if L is None else lclm(L, factor)
    if L.degree != params.n:
        raise InvalidParameters([f"annihilator has degree {L.degree}, expected n = {params.n}"])
    return L


def generator_matrix(params: RsgParams, rows: int):
    """rows x n matrix with entry (l, (i,j)) = u_i^l(g_{i,j}), u_i = partial + c_i theta."""
    if not 1 <= rows <= params.n:
        raise ValueError(f"rows must lie in 1..{params.n}, got {rows}")
    ctx = params.ctx
    cols = []
    for ci, gi in zip(params.c, params.g):
        for x in gi:
            col = [x]
            for _ in range(rows - 1):
                col.append(ctx.pseudo_linear(ci, col[-1]))
            cols.append(col)
    return linalg.transpose(cols)


def _as_poly(params: RsgParams, message) -> OrePoly:
    if isinstance(message, OrePoly):
        return message
    return OrePoly(params.ctx, message)


def gamma(params: RsgParams, P: OrePoly) -> BlockVector:
    """The evaluation map gamma_{c,g} on an Ore polynomial of any degree."""
    return BlockVector([[evaluate(ci, P, x) for x in gi]
                        for ci, gi in zip(params.c, params.g)])


def encode(params: RsgParams, message) -> BlockVector:
    """gamma_{k,c,g}(P) for P given as an OrePoly or its k little-endian coefficients."""
    if not isinstance(message, OrePoly) and len(message) != params.k:
        raise ValueError(f"message must have k = {params.k} coefficients, got {len(message)}")
    P = _as_poly(params, message)
    if P.degree >= params.k:
        raise ValueError(f"message polynomial has degree {P.degree} >= k = {params.k}")
    return gamma(params, P)


def rank_hamming_weight(params: RsgParams, x: BlockVector) -> int:
    """Sum over blocks of dim_F of the span of the block entries."""
    x = params.vector(x.blocks)
    ctx = params.ctx
    total = 0
    for block in x.blocks:
        rows = [ctx.coords_over_F(e) for e in block if e]
        total += linalg.rank(rows) if rows else 0
    return total


def rank_hamming_distance(params: RsgParams, x: BlockVector, y: BlockVector) -> int:
    return rank_hamming_weight(params, x - y)


def interpolate(params: RsgParams, m: BlockVector) -> OrePoly:
    """The unique P of degree < n with gamma_{c,g}(P) = m."""
    m = params.vector(m.blocks)
    G = params.full_generator
    coeffs = linalg.solve(linalg.transpose(G), m.flat())
    return OrePoly(params.ctx, coeffs)


@dataclass
class DecodeResult:
    """Outcome of ``decode``; ``message`` is None on failure and ``reason`` says why."""

    message: Optional[OrePoly] = None
    codeword: Optional[BlockVector] = None
    error_weight: Optional[int] = None
    reason: Optional[str] = None
    interpolated: Optional[OrePoly] = None
    euclid: Optional[EuclidStep] = None
    remainder: Optional[OrePoly] = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.message is not None

    def message_coefficients(self, k: int) -> list:
        P = self.message
        return [P[i] for i in range(k)]


def _max_t_degree(polys) -> int:
    best = 0
    for P in polys:
        for c in P.coeffs:
            best = max(best, getattr(c, "degree_bound", 0))
    return best


def decode(params: RsgParams, m: BlockVector, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> DecodeResult:
    """Gao-style decoding up to rank-Hamming weight floor((n-k)/2)."""
    k, w = params.k, params.radius
    m = params.vector(m.blocks)
    L = params.annihilator
    P_tilde = interpolate(params, m)
    step = extended_right_euclid_partial(P_tilde, L, stop_degree=w + k)
    result = DecodeResult(interpolated=P_tilde, euclid=step)
    if params.ctx.setting is Setting.DERIVATION:
        deg = _max_t_degree([P_tilde, step.r, step.u, step.v])
        if deg > degree_limit:
            result.reason = f"intermediate t-degree {deg} exceeds limit {degree_limit}"
            return result
    if step.u.degree > w:
        result.reason = f"deg U = {step.u.degree} exceeds decoding radius {w}"
        return result
    Q, S = left_divmod(step.r, step.u)
    result.remainder = S
    if S:
        result.reason = "U does not left-divide R"
        return result
    if Q.degree >= k:
        result.reason = f"recovered polynomial has degree {Q.degree} >= k = {k}"
        return result
    codeword = encode(params, Q)
    weight = rank_hamming_distance(params, codeword, m)
    if weight > w:
        result.reason = f"re-encoded word is at distance {weight} > {w}"
        return result
    result.message = Q
    result.codeword = codeword
    result.error_weight = weight
    return result
