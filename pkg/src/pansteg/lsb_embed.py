"""Per-pixel bit surgery: one 9-bit group lives in one pixel's low bits.

The group's three most significant bits go into R, the middle three into G,
the last three into B, each replacing only that channel's low 3 bits. A
channel byte therefore never moves by more than 7.
"""

from __future__ import annotations

from .bmp_io import Pixel
from .index_codec import NineBits, from_nine_bits, to_nine_bits

LOW_MASK = 0x07
HIGH_MASK = 0xF8  # bits embedding never touches


def embed_nine(pixel: Pixel, group: NineBits) -> Pixel:
    """Overwrite the low 3 bits of R, G and B with the group's bits."""
    value = from_nine_bits(group)
    r, g, b = pixel
    return (
        (r & HIGH_MASK) | (value >> 6),
        (g & HIGH_MASK) | ((value >> 3) & LOW_MASK),
        (b & HIGH_MASK) | (value & LOW_MASK),
    )


def extract_nine(pixel: Pixel) -> NineBits:
    """Read the low 3 bits of R, then G, then B, as one MSB-first group."""
    r, g, b = pixel
    return to_nine_bits(((r & LOW_MASK) << 6) | ((g & LOW_MASK) << 3) | (b & LOW_MASK))
