"""Command-line front end; every subcommand is a thin adapter over the
library with text/json/csv output."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .codes import is_synchronizing, parse_code_set, x_degree
from .infinite import ace_estimate, generator_from_spec
from .mapped_exponent import (
    classify_binary,
    classify_general,
    highpower_word,
    lowpower_morphism,
    mapped_exponent_lower_bound,
)
from .words import (
    ParseError,
    Word,
    WordError,
    fractional_exponent,
    integer_exponent,
    parse_rational,
)


def _parse_word(literal: str) -> Word:
    for i, ch in enumerate(literal):
        if not (ch.isascii() and ch.isprintable() and ch not in ",= "):
            raise ParseError(f"bad letter {ch!r} in word literal", i)
    if not literal:
        raise ParseError("empty word literal")
    return Word(literal)


def _parse_params(literal: str | None) -> dict[str, str]:
    params: dict[str, str] = {}
    if not literal:
        return params
    pos = 0
    for chunk in literal.split(";"):
        if "=" not in chunk:
            raise ParseError(f"expected key=value in params, got {chunk!r}", pos)
        key, value = chunk.split("=", 1)
        params[key] = value
        pos += len(chunk) + 1
    return params


def _emit(record: dict, text: str, fmt: str, csv: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
    elif fmt == "csv":
        if csv is None:
            raise ParseError("csv output is not available for this subcommand")
        print(csv)
    else:
        print(text)


def _cmd_exp(args: argparse.Namespace) -> None:
    w = _parse_word(args.word)
    base, e = fractional_exponent(w)
    n, root = integer_exponent(w)
    record = {
        "word": str(w),
        "exponent": str(e),
        "base": str(base),
        "integer_exponent": n,
        "root": str(root),
    }
    _emit(record, f"E = {e} (base {base}); IE = {n} (root {root})", args.format)


def _verdict_text(record: dict) -> str:
    lines = [f"tag: {record['tag']}"]
    if record["witness_morphism"] is not None:
        lines.append(f"witness: {record['witness_morphism']}")
        lines.append(f"achieved exponent: {record['achieved_exponent']}")
    if record["search_bound"] is not None:
        lines.append(f"search bound: {record['search_bound']}")
    return "\n".join(lines)


def _cmd_classify(args: argparse.Namespace) -> None:
    w = _parse_word(args.word)
    if len(w.letters()) <= 2:
        verdict = classify_binary(w)
    else:
        verdict = classify_general(w, max_image_len=args.max_image_len)
    record = {"word": str(w), **verdict.to_record()}
    _emit(record, _verdict_text(record), args.format)


def _cmd_witness(args: argparse.Namespace) -> None:
    w = _parse_word(args.word)
    target = parse_rational(args.target)
    if len(w.letters()) <= 2:
        verdict = classify_binary(w, target=target)
    else:
        verdict = classify_general(w, max_image_len=args.max_image_len, target=target)
    record = {"word": str(w), "target": str(target), **verdict.to_record()}
    _emit(record, _verdict_text(record), args.format)


def _cmd_lower_bound(args: argparse.Namespace) -> None:
    w = _parse_word(args.word)
    best, argmax = mapped_exponent_lower_bound(
        w, args.max_image_len, codomain_size=args.codomain, threads=args.threads
    )
    record = {
        "word": str(w),
        "max_image_len": args.max_image_len,
        "codomain_size": args.codomain,
        "best_exponent": str(best),
        "argmax_morphism": argmax.to_text(),
    }
    _emit(record, f"best E = {best} via {argmax.to_text()}", args.format)


def _cmd_xdegree(args: argparse.Namespace) -> None:
    w = _parse_word(args.word)
    code = parse_code_set(args.code)
    degree = x_degree(w, code)
    record = {"word": str(w), "code": code.to_text(), "degree": degree}
    _emit(record, f"degree = {degree}", args.format)


def _cmd_sync(args: argparse.Namespace) -> None:
    w = _parse_word(args.word)
    code = parse_code_set(args.code)
    probe = args.probe if args.probe is not None else 4 * (len(w) + code.max_len)
    split = is_synchronizing(w, code, probe_len=probe)
    record = {"word": str(w), "code": code.to_text(), "probe_len": probe, "split": split}
    if split is None:
        text = f"no synchronizing split (probe length {probe})"
    else:
        text = f"synchronizing split at {split} (probe length {probe})"
    _emit(record, text, args.format)


def _cmd_ace(args: argparse.Namespace) -> None:
    gen = generator_from_spec(args.gen, _parse_params(args.params))
    estimate = ace_estimate(gen, args.prefix, args.tail, engine=args.engine)
    record = {
        "generator": args.gen,
        "prefix": args.prefix,
        "tail": args.tail,
        "estimate": str(estimate.estimate),
        "witness_offset": estimate.witness_offset,
        "witness_length": estimate.witness_length,
    }
    text = (
        f"estimate = {estimate.estimate} "
        f"(factor length {estimate.witness_length} at offset {estimate.witness_offset})"
    )
    _emit(record, text, args.format, csv=estimate.to_csv())


def _cmd_generate(args: argparse.Namespace) -> None:
    gen = generator_from_spec(args.gen, _parse_params(args.params))
    word = gen.prefix(args.prefix)
    record = {"generator": args.gen, "prefix": args.prefix, "word": str(word)}
    _emit(record, str(word), args.format)


def _cmd_family(args: argparse.Namespace) -> None:
    if args.which == "lowpower":
        if args.n is None:
            raise ParseError("family lowpower needs --n")
        word, h, expected = lowpower_morphism(args.n, args.k)
    else:
        if args.n is None:
            raise ParseError("family highpower needs --n")
        word, h, expected = highpower_word(args.n)
    computed = fractional_exponent(h.apply(word)).exponent
    record = {
        "family": args.which,
        "n": args.n,
        "k": args.k if args.which == "lowpower" else None,
        "word": str(word),
        "morphism": h.to_text(),
        "expected_exponent": str(expected),
        "computed_exponent": str(computed),
        "verified": computed == expected,
    }
    status = "verified" if record["verified"] else "MISMATCH"
    text = (
        f"word {word}\nmorphism {h.to_text()}\n"
        f"expected E = {expected}; computed E = {computed} ({status})"
    )
    _emit(record, text, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morphexp",
        description="Exact word exponents, injective morphisms, codes, and repetition analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("exp", help="fractional and integer exponent of a word")
    p.add_argument("word")
    add_format(p)
    p.set_defaults(handler=_cmd_exp)

    p = sub.add_parser("classify", help="can injective morphisms map the word to unbounded exponents?")
    p.add_argument("word")
    p.add_argument("--max-image-len", type=int, default=3)
    add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("witness", help="construct a morphism reaching a target exponent")
    p.add_argument("word")
    p.add_argument("--target", required=True)
    p.add_argument("--max-image-len", type=int, default=3)
    add_format(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("lower-bound", help="exact max exponent over bounded injective morphisms")
    p.add_argument("word")
    p.add_argument("--max-image-len", type=int, required=True)
    p.add_argument("--codomain", type=int, default=2)
    p.add_argument("--threads", type=int, default=1)
    add_format(p)
    p.set_defaults(handler=_cmd_lower_bound)

    p = sub.add_parser("xdegree", help="maximal number of pairwise disjoint interpretations")
    p.add_argument("word")
    p.add_argument("--code", required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_xdegree)

    p = sub.add_parser("sync", help="probe for a synchronizing split of the word")
    p.add_argument("word")
    p.add_argument("--code", required=True)
    p.add_argument("--probe", type=int, default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_sync)

    p = sub.add_parser("ace", help="per-length maximal exponents over a generator prefix")
    p.add_argument("--gen", required=True)
    p.add_argument("--params", default=None)
    p.add_argument("--prefix", type=int, required=True)
    p.add_argument("--tail", type=int, required=True)
    p.add_argument("--engine", choices=("border", "sweep"), default="border")
    add_format(p)
    p.set_defaults(handler=_cmd_ace)

    p = sub.add_parser("generate", help="emit a prefix of an infinite-word construction")
    p.add_argument("--gen", required=True)
    p.add_argument("--params", default=None)
    p.add_argument("--prefix", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("family", help="example families with their verified exponents")
    p.add_argument("which", choices=("lowpower", "highpower"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=0)
    add_format(p)
    p.set_defaults(handler=_cmd_family)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.handler(args)
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
