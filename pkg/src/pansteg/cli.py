"""Command line front end: hide text in a BMP, recover it, or measure carriers.

Exit codes are fixed for scripting: 0 success, 2 validation or I/O error,
3 no payload detected in the stego image. Diagnostics go to stderr; only
command output (recovered text, capacity, report lines) goes to stdout.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields
from pathlib import Path

from . import engine
from .bmp_io import Rgb24Image, parse_bmp, serialize_bmp
from .engine import DeterministicSeeds, EncodeOptions, ExplicitSeeds, SystemSeeds
from .errors import StegError
from .index_codec import BadVersion
from .pangram import MatchMode, load_pangram, strip_trailing_newline

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_NO_PAYLOAD = 3

_MODES = {"exact": MatchMode.EXACT, "fold": MatchMode.CASE_INSENSITIVE}


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("rng seed must fit in 64 bits")
    return value


def _seed_list(text: str) -> list[int]:
    try:
        seeds = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if any(seed < 0 for seed in seeds):
        raise argparse.ArgumentTypeError("seeds must be non-negative")
    return seeds


def _read_bmp(path: str) -> Rgb24Image:
    return parse_bmp(Path(path).read_bytes())


def cmd_encode(args: argparse.Namespace) -> int:
    pangram = load_pangram(args.pangram)
    cover = _read_bmp(args.cover)
    if args.message is not None:
        message = args.message
    else:
        # Same rule as the pangram file: one trailing line break is not payload.
        message = strip_trailing_newline(Path(args.message_file).read_text(encoding="utf-8"))

    if args.seeds is not None:
        seeds = ExplicitSeeds(args.seeds)
    elif args.rng_seed is not None:
        seeds = DeterministicSeeds(args.rng_seed)
    else:
        seeds = SystemSeeds()

    options = EncodeOptions(mode=_MODES[args.match_mode], seeds=seeds)
    result = engine.encode(message, pangram, cover, options)
    Path(args.out).write_bytes(serialize_bmp(result.stego))
    print(f"capacity_used={len(message)}/{engine.capacity(cover)}", file=sys.stderr)
    print(f"pairs={len(result.pairs)}", file=sys.stderr)
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    pangram = load_pangram(args.pangram)
    stego = _read_bmp(args.stego)
    message = engine.decode(stego, pangram)
    if args.out is not None:
        Path(args.out).write_text(message, encoding="utf-8")
    else:
        sys.stdout.write(message)
        sys.stdout.flush()
    return EXIT_OK


def cmd_capacity(args: argparse.Namespace) -> int:
    print(engine.capacity(_read_bmp(args.cover)))
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    report = engine.compare(_read_bmp(args.cover), _read_bmp(args.stego))
    for report_field in fields(report):
        print(f"{report_field.name}={getattr(report, report_field.name)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pansteg",
        description="Hide text messages in two mediums: a pangram sentence and a 24-bit BMP image.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="hide a message in a BMP cover image")
    enc.add_argument("--pangram", required=True, metavar="FILE", help="UTF-8 pangram file")
    enc.add_argument("--cover", required=True, metavar="BMP", help="cover image (24-bit uncompressed)")
    enc.add_argument("--out", required=True, metavar="BMP", help="where to write the stego image")
    source = enc.add_mutually_exclusive_group(required=True)
    source.add_argument("--message", help="message text")
    source.add_argument("--message-file", metavar="FILE", help="read the message from a UTF-8 file")
    enc.add_argument(
        "--match-mode",
        choices=sorted(_MODES),
        default="exact",
        help="'exact' round-trips byte-for-byte; 'fold' matches Latin letters case-insensitively",
    )
    seeding = enc.add_mutually_exclusive_group()
    seeding.add_argument("--rng-seed", type=_u64, metavar="U64", help="deterministic seed stream")
    seeding.add_argument("--seeds", type=_seed_list, metavar="N,N,...", help="explicit seed per character")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="recover a message from a stego image")
    dec.add_argument("--pangram", required=True, metavar="FILE")
    dec.add_argument("--stego", required=True, metavar="BMP")
    dec.add_argument("--out", metavar="FILE", help="write the message here instead of stdout")
    dec.set_defaults(func=cmd_decode)

    cap = sub.add_parser("capacity", help="print how many characters a cover can hold")
    cap.add_argument("--cover", required=True, metavar="BMP")
    cap.set_defaults(func=cmd_capacity)

    ins = sub.add_parser("inspect", help="print cover-vs-stego distortion statistics")
    ins.add_argument("--stego", required=True, metavar="BMP")
    ins.add_argument("--cover", required=True, metavar="BMP")
    ins.set_defaults(func=cmd_inspect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BadVersion as exc:
        print(f"error: BadVersion: no payload detected ({exc})", file=sys.stderr)
        return EXIT_NO_PAYLOAD
    except StegError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
