"""Seeded error vectors with an exact rank-Hamming weight profile."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from rsg import linalg
from rsg.rsg_codec import BlockVector, RsgParams


@dataclass(frozen=True)
class ErrorProfile:
    """Target F-dimension of each block's span, plus the RNG seed."""

    weights: Sequence[int]
    seed: int = 0

    @property
    def total(self) -> int:
        return sum(self.weights)


def _random(ctx, rng, degree_bound):
    if degree_bound is None:
        return ctx.random_element(rng)
    return ctx.random_element(rng, degree_bound)


def _span_dim(ctx, values) -> int:
    rows = [ctx.coords_over_F(v) for v in values if v]
    return linalg.rank(rows) if rows else 0


def sample_error(params: RsgParams, profile: ErrorProfile, degree_bound: int | None = None) -> BlockVector:
    """Draw e with dim_F <e_{i,1}, ..., e_{i,n_i}> = w_i for every block i.

    ``degree_bound`` caps the t-degree of random numerators and denominators in
    the derivation setting and is ignored for finite fields.
    """
    ctx = params.ctx
    weights = list(profile.weights)
    if len(weights) != params.s:
        raise ValueError(f"profile has {len(weights)} weights, code has {params.s} blocks")
    for i, (wi, ni) in enumerate(zip(weights, params.block_sizes)):
        if wi < 0 or wi > ni or wi > ctx.r:
            raise ValueError(f"weight {wi} for block {i} must lie in 0..min(n_i={ni}, r={ctx.r})")
    if ctx.setting.value == "frobenius":
        degree_bound = None
    rng = random.Random(profile.seed)
    blocks = []
    for wi, ni in zip(weights, params.block_sizes):
        if wi == 0:
            blocks.append([ctx.zero] * ni)
            continue
        while True:
            basis = [_random(ctx, rng, degree_bound) for _ in range(wi)]
            if _span_dim(ctx, basis) == wi:
                break
        while True:
            entries = []
            for _ in range(ni):
                e = ctx.zero
                for b in basis:
                    e = e + ctx.random_fixed(rng) * b
                entries.append(e)
            if _span_dim(ctx, entries) == wi:
                break
        blocks.append(entries)
    return BlockVector(blocks)
