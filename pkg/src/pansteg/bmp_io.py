"""Reader and writer for uncompressed 24-bit BMP files.

Only the classic layout is accepted: 'BM' signature, 40-byte BITMAPINFOHEADER,
24 bits per pixel, compression 0. Everything else (V4/V5 headers, palettes,
RLE, other depths) is rejected rather than coerced, because low-bit embedding
does not survive a lossy conversion.

Pixels are exposed in raster order (top-left first) regardless of whether the
file stores its rows bottom-up (positive height, the common case) or top-down
(negative height). Serialization is canonical and therefore bit-exact:
bottom-up rows, zero padding to 4-byte strides, pixel array at offset 54,
resolution and palette fields zeroed.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .errors import StegError

FILE_HEADER_SIZE = 14
INFO_HEADER_SIZE = 40
PIXEL_ARRAY_OFFSET = FILE_HEADER_SIZE + INFO_HEADER_SIZE  # 54, no palette

Pixel = tuple[int, int, int]


class BmpError(StegError):
    pass


class BadSignature(BmpError):
    pass


class UnsupportedHeader(BmpError):
    pass


class UnsupportedBitDepth(BmpError):
    pass


class UnsupportedCompression(BmpError):
    pass


class TruncatedPixelArray(BmpError):
    pass


class ZeroDimension(BmpError):
    pass


@dataclass
class Rgb24Image:
    """Decoded image: row-major (R, G, B) byte triples, row 0 at the top."""

    width: int
    height: int
    pixels: list[Pixel]

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ZeroDimension(f"invalid dimensions {self.width}x{self.height}")
        if len(self.pixels) != self.width * self.height:
            raise ValueError(
                f"{self.width}x{self.height} image needs {self.width * self.height} pixels, "
                f"got {len(self.pixels)}"
            )
        for pixel in self.pixels:
            r, g, b = pixel
            if not (0 <= r <= 255 and 0 <= g <= 255 and 0 <= b <= 255):
                raise ValueError(f"channel value out of byte range in pixel {pixel!r}")

    @property
    def pixel_count(self) -> int:
        return self.width * self.height


def row_stride(width: int) -> int:
    """Bytes per stored row: 3 per pixel, padded up to a multiple of 4."""
    return (3 * width + 3) // 4 * 4


def parse_bmp(data: bytes) -> Rgb24Image:
    """Decode a BMP byte string into raster-order RGB pixels."""
    if len(data) < 2 or data[:2] != b"BM":
        raise BadSignature("missing 'BM' signature")
    if len(data) < PIXEL_ARRAY_OFFSET:
        raise TruncatedPixelArray(
            f"file is {len(data)} bytes; the BMP headers alone need {PIXEL_ARRAY_OFFSET}"
        )
    (pixel_offset,) = struct.unpack_from("<I", data, 10)
    header_size, width, raw_height, _planes, depth, compression = struct.unpack_from(
        "<IiiHHI", data, FILE_HEADER_SIZE
    )
    if header_size != INFO_HEADER_SIZE:
        raise UnsupportedHeader(
            f"DIB header of {header_size} bytes; only the {INFO_HEADER_SIZE}-byte header is supported"
        )
    if depth != 24:
        raise UnsupportedBitDepth(f"{depth} bits per pixel; only 24 is supported")
    if compression != 0:
        raise UnsupportedCompression(f"compression {compression}; only uncompressed (0) is supported")
    if width < 1 or raw_height == 0:
        raise ZeroDimension(f"invalid dimensions {width}x{raw_height}")

    height = abs(raw_height)
    bottom_up = raw_height > 0
    stride = row_stride(width)
    end = pixel_offset + stride * height
    if len(data) < end:
        raise TruncatedPixelArray(f"pixel array needs {end} bytes; file has {len(data)}")

    pixels: list[Pixel] = []
    for row in range(height):
        file_row = height - 1 - row if bottom_up else row
        base = pixel_offset + file_row * stride
        row_bytes = data[base : base + 3 * width]
        it = iter(row_bytes)
        pixels.extend((r, g, b) for b, g, r in zip(it, it, it))
    return Rgb24Image(width, height, pixels)


def serialize_bmp(img: Rgb24Image) -> bytes:
    """Emit the canonical file form; parse(serialize(img)) == img, bit-exact."""
    stride = row_stride(img.width)
    padding = b"\x00" * (stride - 3 * img.width)
    rows = []
    for row in range(img.height - 1, -1, -1):  # stored bottom-up
        start = row * img.width
        row_pixels = img.pixels[start : start + img.width]
        rows.append(bytes(c for r, g, b in row_pixels for c in (b, g, r)) + padding)
    pixel_array = b"".join(rows)

    image_size = stride * img.height
    file_header = struct.pack(
        "<2sIHHI", b"BM", PIXEL_ARRAY_OFFSET + image_size, 0, 0, PIXEL_ARRAY_OFFSET
    )
    info_header = struct.pack(
        "<IiiHHIIiiII",
        INFO_HEADER_SIZE,
        img.width,
        img.height,  # positive: bottom-up
        1,  # planes
        24,  # bits per pixel
        0,  # no compression
        image_size,
        0,  # x pixels per meter
        0,  # y pixels per meter
        0,  # colors used
        0,  # important colors
    )
    return file_header + info_header + pixel_array
