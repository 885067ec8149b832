"""JSON encodings of contexts, code parameters, block vectors, messages and Ore polynomials.

Every loader raises ``FormatError`` naming the offending field.
"""

from __future__ import annotations

import json

from rsg.ore_algebra import OrePoly
from rsg.rsg_codec import BlockVector, DecodeResult, RsgParams
from rsg.skew_context import SkewContext, context_from_descriptor


class FormatError(ValueError):
    pass


def _element(ctx, data, where):
    try:
        return ctx.element_from_json(data)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def element_to_json(ctx: SkewContext, a):
    return ctx.element_to_json(a)


def poly_to_json(P: OrePoly) -> list:
    return [P.ctx.element_to_json(c) for c in P.coeffs]


def poly_from_json(ctx, data, where="poly") -> OrePoly:
    if not isinstance(data, list):
        raise FormatError(f"{where}: expected a list of coefficients")
    return OrePoly(ctx, [_element(ctx, x, f"{where}[{i}]") for i, x in enumerate(data)])


def params_to_json(params: RsgParams) -> dict:
    ctx = params.ctx
    out = dict(ctx.descriptor())
    out["k"] = params.k
    out["c"] = [ctx.element_to_json(c) for c in params.c]
    out["g"] = [[ctx.element_to_json(x) for x in gi] for gi in params.g]
    return out


def params_from_json(data) -> RsgParams:
    if not isinstance(data, dict):
        raise FormatError("params: expected a JSON object")
    for key in ("k", "c", "g"):
        if key not in data:
            raise FormatError(f"params: missing field '{key}'")
    desc = {k: v for k, v in data.items() if k not in ("k", "c", "g")}
    try:
        ctx = context_from_descriptor(desc)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"params: {exc}") from None
    k = data["k"]
    if not isinstance(k, int) or isinstance(k, bool):
        raise FormatError("params.k: expected an integer")
    c, g = data["c"], data["g"]
    if not isinstance(c, list):
        raise FormatError("params.c: expected a list")
    if not isinstance(g, list) or not all(isinstance(gi, list) for gi in g):
        raise FormatError("params.g: expected a list of lists")
    if len(c) != len(g):
        raise FormatError(f"params: c has {len(c)} entries but g has {len(g)} blocks")
    cs = [_element(ctx, x, f"params.c[{i}]") for i, x in enumerate(c)]
    gs = [[_element(ctx, x, f"params.g[{i}][{j}]") for j, x in enumerate(gi)]
          for i, gi in enumerate(g)]
    return RsgParams(ctx, k, cs, gs)


def vector_to_json(params: RsgParams, v: BlockVector) -> dict:
    ctx = params.ctx
    return {"blocks": [[ctx.element_to_json(x) for x in b] for b in v.blocks]}


def vector_from_json(params: RsgParams, data) -> BlockVector:
    if not isinstance(data, dict) or "blocks" not in data:
        raise FormatError("vector: expected an object with field 'blocks'")
    blocks = data["blocks"]
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise FormatError("vector.blocks: expected a list of lists")
    if tuple(len(b) for b in blocks) != params.block_sizes:
        raise FormatError(f"vector.blocks: shape {[len(b) for b in blocks]} "
                          f"does not match code {list(params.block_sizes)}")
    ctx = params.ctx
    return BlockVector([[_element(ctx, x, f"vector.blocks[{i}][{j}]") for j, x in enumerate(b)]
                        for i, b in enumerate(blocks)])


def message_to_json(params: RsgParams, coeffs) -> list:
    return [params.ctx.element_to_json(x) for x in coeffs]


def message_from_json(params: RsgParams, data) -> list:
    if not isinstance(data, list):
        raise FormatError("message: expected a list of k elements")
    if len(data) != params.k:
        raise FormatError(f"message: expected k = {params.k} elements, got {len(data)}")
    return [_element(params.ctx, x, f"message[{i}]") for i, x in enumerate(data)]


def failure_to_json(result: DecodeResult) -> dict:
    return {"status": "failure", "reason": result.reason}


def dumps(obj) -> str:
    """Canonical rendering: fixed separators, one object per file, trailing newline."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
