"""Reed-Solomon-Gabidulin codes over Ore polynomial rings, in exact arithmetic."""

from rsg.error_channel import ErrorProfile, sample_error
from rsg.ore_algebra import (OrePoly, evaluate, extended_right_euclid_partial, lclm, left_divmod,
                             operator_apply, ore_mul, rgcd, right_divmod)
from rsg.rsg_codec import (BlockVector, DecodeResult, InvalidParameters, RsgParams, annihilator,
                           check_params, decode, encode, eval_points, generator_matrix,
                           interpolate, rank_hamming_weight, validate_params)
from rsg.skew_context import DerivationContext, FrobeniusContext, Setting, context_from_descriptor

__all__ = [
    "BlockVector", "DecodeResult", "DerivationContext", "ErrorProfile", "FrobeniusContext",
    "InvalidParameters", "OrePoly", "RsgParams", "Setting", "annihilator", "check_params",
    "context_from_descriptor", "decode", "encode", "eval_points", "evaluate",
    "extended_right_euclid_partial", "generator_matrix", "interpolate", "lclm", "left_divmod",
    "operator_apply", "ore_mul", "rank_hamming_weight", "rgcd", "right_divmod", "sample_error",
    "validate_params",
]
