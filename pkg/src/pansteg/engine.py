"""Hide and recover text end to end: pangram index pairs embedded in a BMP.

Every message character is turned into a (seed, offset) pair of pangram
indexes and costs two carrier pixels, on top of four fixed header pixels.
Encoding consumes both mediums and emits a stego image plus the pair trace;
decoding needs the stego image and the same pangram.
"""

from __future__ import annotations

import math
import secrets
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Protocol

from .bmp_io import Rgb24Image
from .errors import StegError
from .index_codec import (
    GROUP_BITS,
    HEADER_BITS,
    IndexPair,
    StegoHeader,
    build_payload,
    parse_payload,
)
from .lsb_embed import embed_nine, extract_nine
from .pangram import (
    MatchMode,
    OffsetOutOfRange,
    Pangram,
    SeedOutOfRange,
    char_at,
    coverage_gaps,
    find_offset,
)

HEADER_PIXELS = HEADER_BITS // GROUP_BITS  # 4
PIXELS_PER_CHAR = 2  # one pixel for the seed, one for the offset

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class MessageTooLong(StegError):
    pass


class UncoveredCharacters(StegError):
    """Raised with the set of message characters the pangram cannot encode."""

    def __init__(self, gaps: set[str]):
        self.gaps = gaps
        listed = ", ".join(repr(ch) for ch in sorted(gaps))
        super().__init__(f"message characters with no pangram match: {listed}")


class ExplicitSeedsExhausted(StegError):
    pass


class DimensionMismatch(StegError):
    pass


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step; returns (new state, 64-bit output)."""
    state = (state + _GOLDEN_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


class SeedSource(Protocol):
    """Supplies one pangram index per encoded character.

    Sources advance internal state per call; do not share one instance
    across concurrent encodes.
    """

    def next_seed(self, modulus: int) -> int: ...


class DeterministicSeeds:
    """SplitMix64 stream reduced modulo the pangram length.

    Two encoders built from the same 64-bit seed produce byte-identical
    stego images for the same inputs.
    """

    def __init__(self, seed64: int):
        self._state = seed64 & _MASK64

    def next_seed(self, modulus: int) -> int:
        self._state, value = splitmix64(self._state)
        return value % modulus


class ExplicitSeeds:
    """Hands out a caller-supplied seed sequence in order."""

    def __init__(self, seeds: Iterable[int]):
        self._seeds = list(seeds)
        self._used = 0

    def next_seed(self, modulus: int) -> int:
        if self._used >= len(self._seeds):
            raise ExplicitSeedsExhausted(
                f"seed list supplied only {len(self._seeds)} seeds"
            )
        seed = self._seeds[self._used]
        self._used += 1
        if not 0 <= seed < modulus:
            raise SeedOutOfRange(f"explicit seed {seed} out of range for pangram length {modulus}")
        return seed


class SystemSeeds:
    """Draws seeds from the operating system's entropy source."""

    def next_seed(self, modulus: int) -> int:
        return secrets.randbelow(modulus)


@dataclass
class EncodeOptions:
    mode: MatchMode = MatchMode.EXACT
    seeds: SeedSource = field(default_factory=SystemSeeds)


@dataclass(frozen=True)
class DistortionReport:
    """Cover-vs-stego statistics; embedding bounds max_channel_delta at 7."""

    bytes_changed: int
    max_channel_delta: int
    mean_squared_error: float
    psnr_db: float


class EncodeResult(NamedTuple):
    stego: Rgb24Image
    pairs: list[IndexPair]


def capacity(img: Rgb24Image) -> int:
    """Message characters the carrier can hold after the 4 header pixels."""
    return max(0, (img.pixel_count - HEADER_PIXELS) // PIXELS_PER_CHAR)


def raw_capacity(byte_count: int) -> int:
    """Headerless capacity estimate: one character per 48 carrier bits.

    This ignores both the BMP metadata and the payload preamble; it is the
    back-of-envelope figure for sizing carriers (a 1 MiB file comes out at
    174762 characters), not the exact bound `capacity` computes.
    """
    return byte_count * 8 // 48


def encode(
    message: str,
    pangram: Pangram,
    cover: Rgb24Image,
    options: EncodeOptions | None = None,
) -> EncodeResult:
    """Hide ``message`` in ``cover``, returning the stego image and pair trace.

    Only the low 3 bits of the first ``4 + 2 * len(message)`` pixels change;
    every other byte of the carrier is preserved exactly.
    """
    opts = options if options is not None else EncodeOptions()
    cap = capacity(cover)
    if len(message) > cap:
        raise MessageTooLong(f"message has {len(message)} characters; carrier holds {cap}")
    gaps = coverage_gaps(pangram, message, opts.mode)
    if gaps:
        raise UncoveredCharacters(gaps)

    n = len(pangram)
    pairs = []
    for ch in message:
        seed = opts.seeds.next_seed(n)
        if not 0 <= seed < n:
            raise SeedOutOfRange(f"seed source produced {seed} for pangram length {n}")
        pairs.append(IndexPair(seed, find_offset(pangram, seed, ch, opts.mode)))

    payload = build_payload(StegoHeader(len(message)), pairs)
    pixels = list(cover.pixels)
    for group_index in range(len(payload) // GROUP_BITS):
        start = group_index * GROUP_BITS
        group = tuple(payload[start : start + GROUP_BITS])
        pixels[group_index] = embed_nine(pixels[group_index], group)
    return EncodeResult(Rgb24Image(cover.width, cover.height, pixels), pairs)


def decode(stego: Rgb24Image, pangram: Pangram) -> str:
    """Recover the hidden message; requires the pangram used at encode time."""

    def lsb_bits() -> Iterator[int]:
        for pixel in stego.pixels:
            yield from extract_nine(pixel)

    _header, pairs = parse_payload(lsb_bits(), capacity(stego))
    n = len(pangram)
    out = []
    for i, (seed, offset) in enumerate(pairs):
        if seed >= n or offset >= n:
            raise OffsetOutOfRange(
                f"pair {i} carries indexes ({seed}, {offset}) beyond pangram length {n}; "
                "wrong pangram or corrupted carrier"
            )
        out.append(char_at(pangram, seed, offset))
    return "".join(out)


def compare(cover: Rgb24Image, stego: Rgb24Image) -> DistortionReport:
    """Per-channel distortion statistics between two equally sized images."""
    if (cover.width, cover.height) != (stego.width, stego.height):
        raise DimensionMismatch(
            f"cover is {cover.width}x{cover.height}, stego is {stego.width}x{stego.height}"
        )
    changed = 0
    max_delta = 0
    total_squared = 0
    for (r0, g0, b0), (r1, g1, b1) in zip(cover.pixels, stego.pixels):
        for before, after in ((r0, r1), (g0, g1), (b0, b1)):
            delta = abs(before - after)
            if delta:
                changed += 1
                total_squared += delta * delta
                if delta > max_delta:
                    max_delta = delta
    samples = 3 * cover.pixel_count
    mse = total_squared / samples
    psnr = math.inf if mse == 0 else 10 * math.log10(255**2 / mse)
    return DistortionReport(changed, max_delta, mse, psnr)
