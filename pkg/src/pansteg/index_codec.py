"""Fixed-width 9-bit codec and the framed payload stream the carrier stores.

Wire layout, bit-exact across implementations:

    [4-bit version = 1][32-bit big-endian message length][seed 9b, offset 9b] * length

The 36-bit header is four 9-bit groups, so header plus pairs always maps onto
whole pixels (one group per pixel). Bits are most significant first inside
every field.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator, NamedTuple

from .errors import StegError

GROUP_BITS = 9
MAX_NINE_BIT = 511
HEADER_VERSION = 1
VERSION_BITS = 4
LENGTH_BITS = 32
HEADER_BITS = VERSION_BITS + LENGTH_BITS  # 36 = four 9-bit groups
PAIR_BITS = 2 * GROUP_BITS

NineBits = tuple[int, ...]


class ValueOutOfRange(StegError):
    pass


class WrongWidth(StegError):
    pass


class LengthMismatch(StegError):
    pass


class BadVersion(StegError):
    pass


class Truncated(StegError):
    pass


class LengthExceedsCapacity(StegError):
    pass


class IndexPair(NamedTuple):
    seed: int
    offset: int


@dataclass(frozen=True)
class StegoHeader:
    """36-bit preamble: 4-bit format version, 32-bit big-endian message length."""

    message_len: int
    version: int = HEADER_VERSION

    def __post_init__(self) -> None:
        if not 0 <= self.version < 2**VERSION_BITS:
            raise ValueOutOfRange(f"version {self.version} does not fit in {VERSION_BITS} bits")
        if not 0 <= self.message_len < 2**LENGTH_BITS:
            raise ValueOutOfRange(
                f"message length {self.message_len} does not fit in {LENGTH_BITS} bits"
            )


def _int_to_bits(value: int, width: int) -> list[int]:
    return [(value >> shift) & 1 for shift in range(width - 1, -1, -1)]


def _bits_to_int(bits: Iterable[int]) -> int:
    value = 0
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"bit values must be 0 or 1, got {bit!r}")
        value = (value << 1) | bit
    return value


def to_nine_bits(value: int) -> NineBits:
    """MSB-first fixed-width binary expansion of a value in [0, 511]."""
    if not 0 <= value <= MAX_NINE_BIT:
        raise ValueOutOfRange(f"value {value} outside [0, {MAX_NINE_BIT}]")
    return tuple(_int_to_bits(value, GROUP_BITS))


def from_nine_bits(bits: Iterable[int]) -> int:
    """Inverse of :func:`to_nine_bits`; requires exactly nine bits."""
    seq = tuple(bits)
    if len(seq) != GROUP_BITS:
        raise WrongWidth(f"expected {GROUP_BITS} bits, got {len(seq)}")
    return _bits_to_int(seq)


def build_payload(header: StegoHeader, pairs: Iterable[IndexPair]) -> list[int]:
    """Serialize header and seed/offset pairs into one flat bit list.

    The result is 36 + 18 * n bits, always a multiple of 9.
    """
    pair_list = list(pairs)
    if header.message_len != len(pair_list):
        raise LengthMismatch(
            f"header says {header.message_len} characters but {len(pair_list)} pairs supplied"
        )
    bits = _int_to_bits(header.version, VERSION_BITS)
    bits += _int_to_bits(header.message_len, LENGTH_BITS)
    for seed, offset in pair_list:
        bits += to_nine_bits(seed)
        bits += to_nine_bits(offset)
    return bits


def parse_payload(bits: Iterable[int], limit: int) -> tuple[StegoHeader, list[IndexPair]]:
    """Read a header and exactly ``header.message_len`` pairs from a bit stream.

    ``limit`` is the carrier's character capacity; a header claiming more is
    rejected before any pair is read, which is the decoder's defense against
    garbage headers. The stream may be longer than the payload; extra bits are
    left unconsumed.
    """
    stream: Iterator[int] = iter(bits)

    def take(count: int, what: str) -> list[int]:
        chunk = list(islice(stream, count))
        if len(chunk) < count:
            raise Truncated(f"bit stream ended inside {what}")
        return chunk

    version = _bits_to_int(take(VERSION_BITS, "header version"))
    if version != HEADER_VERSION:
        raise BadVersion(f"payload version {version}; this format uses {HEADER_VERSION}")
    message_len = _bits_to_int(take(LENGTH_BITS, "header length"))
    if message_len > limit:
        raise LengthExceedsCapacity(
            f"header claims {message_len} characters but the carrier holds at most {limit}"
        )
    pairs = []
    for i in range(message_len):
        seed = from_nine_bits(take(GROUP_BITS, f"seed of pair {i}"))
        offset = from_nine_bits(take(GROUP_BITS, f"offset of pair {i}"))
        pairs.append(IndexPair(seed, offset))
    return StegoHeader(message_len), pairs
