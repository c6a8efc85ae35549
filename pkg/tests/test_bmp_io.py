import io
import random
import struct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from PIL import Image

from pansteg.bmp_io import (
    BadSignature,
    Rgb24Image,
    TruncatedPixelArray,
    UnsupportedBitDepth,
    UnsupportedCompression,
    UnsupportedHeader,
    ZeroDimension,
    parse_bmp,
    row_stride,
    serialize_bmp,
)

# 1x1 white image assembled by hand from the file layout:
# 14-byte file header + 40-byte info header + one padded row.
WHITE_1X1 = (
    b"BM"
    + struct.pack("<IHHI", 58, 0, 0, 54)
    + struct.pack("<IiiHHIIiiII", 40, 1, 1, 1, 24, 0, 4, 0, 0, 0, 0)
    + b"\xff\xff\xff\x00"
)


def random_image(rng, width, height):
    raw = rng.randbytes(3 * width * height)
    it = iter(raw)
    return Rgb24Image(width, height, list(zip(it, it, it)))


def test_handmade_white_pixel_parses():
    assert len(WHITE_1X1) == 58
    img = parse_bmp(WHITE_1X1)
    assert (img.width, img.height) == (1, 1)
    assert img.pixels == [(255, 255, 255)]


def test_serialize_matches_handmade_file():
    assert serialize_bmp(Rgb24Image(1, 1, [(255, 255, 255)])) == WHITE_1X1


def test_padding_arithmetic():
    data = serialize_bmp(Rgb24Image(2, 1, [(0, 0, 0), (0, 0, 0)]))
    assert len(data) == 54 + 8  # 6 pixel bytes padded to 8


@pytest.mark.parametrize("width,stride", [(1, 4), (2, 8), (3, 12), (4, 12), (5, 16)])
def test_row_stride(width, stride):
    assert row_stride(width) == stride


def test_rows_are_stored_bottom_up():
    # two rows: red on top, blue on bottom; the file stores bottom first
    img = Rgb24Image(1, 2, [(255, 0, 0), (0, 0, 255)])
    data = serialize_bmp(img)
    first_stored = data[54:57]
    assert first_stored == bytes([255, 0, 0])  # B,G,R of the blue bottom pixel


def test_top_down_storage_is_honored():
    img = Rgb24Image(1, 2, [(255, 0, 0), (0, 0, 255)])
    canonical = bytearray(serialize_bmp(img))
    struct.pack_into("<i", canonical, 22, -2)  # declare top-down
    flipped = parse_bmp(bytes(canonical))
    assert flipped.pixels == [(0, 0, 255), (255, 0, 0)]


def test_pixel_array_offset_is_honored():
    img = Rgb24Image(1, 1, [(10, 20, 30)])
    data = bytearray(serialize_bmp(img))
    gap = b"\xee" * 6
    data[2:6] = struct.pack("<I", len(data) + len(gap))
    data[10:14] = struct.pack("<I", 54 + len(gap))
    shifted = data[:54] + gap + data[54:]
    assert parse_bmp(bytes(shifted)).pixels == [(10, 20, 30)]


def test_bad_signature():
    with pytest.raises(BadSignature):
        parse_bmp(b"PNG whatever")
    with pytest.raises(BadSignature):
        parse_bmp(b"B")


def test_truncated_header():
    with pytest.raises(TruncatedPixelArray):
        parse_bmp(b"BM" + b"\x00" * 20)


def test_truncated_pixel_array():
    with pytest.raises(TruncatedPixelArray):
        parse_bmp(WHITE_1X1[:-1])


def test_unsupported_bit_depth():
    data = bytearray(WHITE_1X1)
    struct.pack_into("<H", data, 28, 8)
    with pytest.raises(UnsupportedBitDepth):
        parse_bmp(bytes(data))


def test_unsupported_compression():
    data = bytearray(WHITE_1X1)
    struct.pack_into("<I", data, 30, 1)  # BI_RLE8
    with pytest.raises(UnsupportedCompression):
        parse_bmp(bytes(data))


def test_unsupported_header_variant():
    data = bytearray(WHITE_1X1)
    struct.pack_into("<I", data, 14, 124)  # V5 header size
    with pytest.raises(UnsupportedHeader):
        parse_bmp(bytes(data))


def test_zero_dimensions_rejected():
    for field_offset in (18, 22):
        data = bytearray(WHITE_1X1)
        struct.pack_into("<i", data, field_offset, 0)
        with pytest.raises(ZeroDimension):
            parse_bmp(bytes(data))


def test_image_validation():
    with pytest.raises(ValueError):
        Rgb24Image(2, 1, [(0, 0, 0)])
    with pytest.raises(ValueError):
        Rgb24Image(1, 1, [(0, 0, 256)])
    with pytest.raises(ZeroDimension):
        Rgb24Image(0, 1, [])


@given(
    width=st.integers(1, 17),
    height=st.integers(1, 17),
    seed=st.integers(0, 2**32 - 1),
)
@settings(max_examples=60)
def test_parse_serialize_roundtrip(width, height, seed):
    img = random_image(random.Random(seed), width, height)
    again = parse_bmp(serialize_bmp(img))
    assert (again.width, again.height, again.pixels) == (img.width, img.height, img.pixels)


@given(width=st.integers(1, 9), height=st.integers(1, 9), seed=st.integers(0, 2**32 - 1))
@settings(max_examples=30)
def test_serialize_parse_is_byte_identical_on_canonical_files(width, height, seed):
    data = serialize_bmp(random_image(random.Random(seed), width, height))
    assert serialize_bmp(parse_bmp(data)) == data


@given(width=st.integers(1, 12), height=st.integers(1, 12), seed=st.integers(0, 2**32 - 1))
@settings(max_examples=30)
def test_pillow_agrees_with_our_serializer(width, height, seed):
    img = random_image(random.Random(seed), width, height)
    with Image.open(io.BytesIO(serialize_bmp(img))) as decoded:
        assert decoded.size == (width, height)
        flat = bytes(channel for pixel in img.pixels for channel in pixel)
        assert decoded.convert("RGB").tobytes() == flat
