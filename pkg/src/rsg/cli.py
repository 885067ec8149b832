"""Command-line front end: ``rsg <subcommand> <params.json> ...``.

Exit codes: 0 success, 1 decoding failure, 2 invalid parameters or input.
"""

from __future__ import annotations

import argparse
import sys

from rsg import formats
from rsg.error_channel import ErrorProfile, sample_error
from rsg.formats import FormatError
from rsg.rsg_codec import (InvalidParameters, decode, encode, generator_matrix,
                           rank_hamming_weight, validate_params)

EXIT_OK = 0
EXIT_DECODE_FAILURE = 1
EXIT_INVALID = 2


def _load_params(path, check=True):
    params = formats.params_from_json(formats.load(path))
    if check:
        errors = validate_params(params)
        if errors:
            raise InvalidParameters(errors)
    return params


def _emit(obj, out_path):
    text = formats.dumps(obj)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pretty(args, text):
    if args.pretty:
        print(text, file=sys.stderr)


def cmd_validate(args):
    params = _load_params(args.params, check=False)
    errors = validate_params(params)
    if errors:
        for e in errors:
            print(f"invalid: {e}")
        return EXIT_INVALID
    print(f"ok: n={params.n} k={params.k} d={params.n - params.k + 1} radius={params.radius}")
    return EXIT_OK


def cmd_genmat(args):
    params = _load_params(args.params)
    rows = params.k if args.rows is None else args.rows
    if not 1 <= rows <= params.n:
        raise FormatError(f"--rows: must lie in 1..{params.n}")
    G = generator_matrix(params, rows)
    ctx = params.ctx
    _emit([[ctx.element_to_json(x) for x in row] for row in G], None)
    _pretty(args, "\n".join("  ".join(str(x) for x in row) for row in G))
    return EXIT_OK


def cmd_annihilator(args):
    params = _load_params(args.params)
    L = params.annihilator
    _emit(formats.poly_to_json(L), None)
    _pretty(args, str(L))
    return EXIT_OK


def cmd_encode(args):
    params = _load_params(args.params)
    message = formats.message_from_json(params, formats.load(args.message))
    codeword = encode(params, message)
    _emit(formats.vector_to_json(params, codeword), args.out)
    _pretty(args, str(codeword))
    return EXIT_OK


def _parse_weights(text):
    try:
        return [int(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise FormatError(f"--weights: expected comma-separated integers, got {text!r}") from None


def cmd_corrupt(args):
    params = _load_params(args.params)
    codeword = formats.vector_from_json(params, formats.load(args.codeword))
    profile = ErrorProfile(_parse_weights(args.weights), args.seed)
    try:
        error = sample_error(params, profile)
    except ValueError as exc:
        raise FormatError(f"--weights: {exc}") from None
    received = codeword + error
    _emit(formats.vector_to_json(params, received), args.out)
    _pretty(args, f"error: {error}\nreceived: {received}")
    return EXIT_OK


def cmd_decode(args):
    params = _load_params(args.params)
    received = formats.vector_from_json(params, formats.load(args.received))
    result = decode(params, received)
    if not result.ok:
        _emit(formats.failure_to_json(result), args.out)
        _pretty(args, f"decoding failed: {result.reason}")
        return EXIT_DECODE_FAILURE
    coeffs = result.message_coefficients(params.k)
    _emit(formats.message_to_json(params, coeffs), args.out)
    _pretty(args, f"message polynomial: {result.message}\nerror weight: {result.error_weight}")
    return EXIT_OK


def cmd_weight(args):
    params = _load_params(args.params)
    vector = formats.vector_from_json(params, formats.load(args.vector))
    print(rank_hamming_weight(params, vector))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="also print human-readable values to stderr")
    parser = argparse.ArgumentParser(prog="rsg", description="Reed-Solomon-Gabidulin codes over Ore rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check code parameters")
    p.add_argument("params")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("genmat", parents=[common], help="print the generator matrix")
    p.add_argument("params")
    p.add_argument("--rows", type=int)
    p.set_defaults(func=cmd_genmat)

    p = sub.add_parser("annihilator", parents=[common], help="print the annihilator L")
    p.add_argument("params")
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("encode", parents=[common], help="encode a message")
    p.add_argument("params")
    p.add_argument("--message", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", parents=[common], help="add a random error of given per-block rank")
    p.add_argument("params")
    p.add_argument("--codeword", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", parents=[common], help="decode a received word")
    p.add_argument("params")
    p.add_argument("--received", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("weight", parents=[common], help="rank-Hamming weight of a vector")
    p.add_argument("params")
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_weight)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InvalidParameters as exc:
        for e in exc.errors:
            print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
