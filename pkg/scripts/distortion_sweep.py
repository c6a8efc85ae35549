#!/usr/bin/env python3
"""Sweep message length on a fixed carrier and tabulate the distortion.

The payload only ever rewrites the low 3 bits of the first 4 + 2n pixels, so
MSE grows linearly with message length and PSNR stays high even at full
capacity. Usage: python3 scripts/distortion_sweep.py [--width W --height H]
"""

import argparse
import random
import string

from pansteg import (
    DeterministicSeeds,
    EncodeOptions,
    Rgb24Image,
    capacity,
    compare,
    encode,
    make_pangram,
)

PANGRAM = string.ascii_letters + string.digits + " .,;:!?"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--width", type=int, default=200)
    parser.add_argument("--height", type=int, default=150)
    parser.add_argument("--rng-seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.rng_seed)
    raw = rng.randbytes(3 * args.width * args.height)
    it = iter(raw)
    cover = Rgb24Image(args.width, args.height, list(zip(it, it, it)))
    pangram = make_pangram(PANGRAM)

    cap = capacity(cover)
    lengths = sorted({0, 10, 100, 1000, cap // 4, cap // 2, cap})
    print(f"carrier {args.width}x{args.height}, capacity {cap} characters")
    print(f"{'chars':>8} {'bytes_changed':>14} {'max_delta':>10} {'mse':>12} {'psnr_db':>9}")
    for n in lengths:
        message = "".join(rng.choice(PANGRAM) for _ in range(n))
        stego, _ = encode(
            message, pangram, cover, EncodeOptions(seeds=DeterministicSeeds(rng.getrandbits(64)))
        )
        r = compare(cover, stego)
        print(
            f"{n:>8} {r.bytes_changed:>14} {r.max_channel_delta:>10} "
            f"{r.mean_squared_error:>12.6f} {r.psnr_db:>9.2f}"
        )


if __name__ == "__main__":
    main()
