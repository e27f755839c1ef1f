#!/usr/bin/env python3
"""Regenerates tests/data/*.pgm from the standard images bundled with scikit-image."""
import pathlib
import sys

import numpy as np
import skimage.data
from skimage.color import rgb2gray

IMAGES = {
    "astronaut": lambda: (rgb2gray(skimage.data.astronaut()) * 255 + 0.5).astype(np.uint8),
    "brick": skimage.data.brick,
    "camera": skimage.data.camera,
    "grass": skimage.data.grass,
    "gravel": skimage.data.gravel,
    "moon": skimage.data.moon,
}


def write_pgm(path, img):
    h, w = img.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode())
        f.write(np.ascontiguousarray(img, dtype=np.uint8).tobytes())


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
    out.mkdir(parents=True, exist_ok=True)
    for name, load in IMAGES.items():
        img = load()
        assert img.shape == (512, 512) and img.dtype == np.uint8, name
        write_pgm(out / f"{name}.pgm", img)


if __name__ == "__main__":
    main()
