"""Render the characteristic attention patterns of each 2D scheme to PGM.

The key sits at the origin; the query sweeps [-pi, pi]^2.  Axial blocks give
axis-aligned stripes, mixed blocks give oblique waves, and the 3D-rotation
scheme gives curved non-separable patterns.

Run:  python3 demos/attention_patterns.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from ropekit import make_encoder, render_pattern
from ropekit.cli import _write_pgm

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("patterns")
outdir.mkdir(parents=True, exist_ok=True)

rng = np.random.Generator(np.random.Philox(key=42))
SIZE = 96


def unit(v):
    return v / np.linalg.norm(v)


for scheme, dim in (("axial", 16), ("mixed", 16), ("spherical", 12), ("uniform", 16)):
    enc = make_encoder(scheme, dim)
    z_q = unit(rng.standard_normal(dim))
    z_k = unit(rng.standard_normal(dim))
    combined = render_pattern(enc, z_q, z_k, SIZE, SIZE)
    path = outdir / f"{scheme}.pgm"
    _write_pgm(str(path), combined.values)
    print(f"{scheme:10} combined pattern -> {path}")
    # the first few per-block contributions, to see what the sum is made of
    for b in range(min(3, enc.pattern_blocks)):
        part = render_pattern(enc, z_q, z_k, SIZE, SIZE, block=b)
        bpath = outdir / f"{scheme}_block{b}.pgm"
        _write_pgm(str(bpath), part.values)
        print(f"{'':10} block {b}          -> {bpath}")

print("\naxial block 0 rotates by the x-position only - open the image and the")
print("columns are perfectly constant; block 1 is its y-axis counterpart.")
