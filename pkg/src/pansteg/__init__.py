"""Text steganography over two complementary mediums.

A message is never written into the carrier image directly. Each character is
looked up in a user-defined pangram sentence, producing a (seed, offset) pair
of 9-bit indexes, and only those indexes are embedded in the low 3 bits of a
24-bit BMP's color channels. Recovering the text requires both mediums.
"""

from .bmp_io import Rgb24Image, parse_bmp, serialize_bmp
from .engine import (
    DeterministicSeeds,
    DistortionReport,
    EncodeOptions,
    EncodeResult,
    ExplicitSeeds,
    SystemSeeds,
    capacity,
    compare,
    decode,
    encode,
    raw_capacity,
)
from .errors import StegError
from .index_codec import IndexPair, StegoHeader, from_nine_bits, to_nine_bits
from .lsb_embed import embed_nine, extract_nine
from .pangram import (
    MatchMode,
    Pangram,
    char_at,
    coverage_gaps,
    find_offset,
    load_pangram,
    make_pangram,
)

__version__ = "0.1.0"

__all__ = [
    "DeterministicSeeds",
    "DistortionReport",
    "EncodeOptions",
    "EncodeResult",
    "ExplicitSeeds",
    "IndexPair",
    "MatchMode",
    "Pangram",
    "Rgb24Image",
    "StegError",
    "StegoHeader",
    "SystemSeeds",
    "capacity",
    "char_at",
    "compare",
    "coverage_gaps",
    "decode",
    "embed_nine",
    "encode",
    "extract_nine",
    "find_offset",
    "from_nine_bits",
    "load_pangram",
    "make_pangram",
    "parse_bmp",
    "raw_capacity",
    "serialize_bmp",
    "to_nine_bits",
]
