"""Which schemes see only relative positions?  Measure it.

A scheme is shift-equivariant when moving query and key together leaves the
attention score unchanged.  The check suite measures the worst violation
over random trials; abelian schemes sit at machine precision while the
non-commutative ones are off by order one.

Run:  python3 demos/equivariance_probe.py
"""

import numpy as np

from ropekit import (check_equivariance, check_non_equivariance,
                     commuting_generators, locality_probe, make_encoder)
from ropekit.verify import random_skew

rng = np.random.default_rng(11)

print(f"{'encoder':24} {'worst shift residual':>22}   verdict")
print("-" * 60)
for scheme, dim in (("rope1d", 16), ("trivial2d", 16), ("axial", 16),
                    ("mixed", 16), ("uniform", 16)):
    r = check_equivariance(make_encoder(scheme, dim), trials=100, seed=0)
    print(f"{scheme:24} {r.residual:>22.3e}   {'equivariant' if r.passed else 'NOT'}")

enc = make_encoder("liere", generators=commuting_generators(8, rng))
r = check_equivariance(enc, trials=100, seed=0)
print(f"{'liere (commuting)':24} {r.residual:>22.3e}   {'equivariant' if r.passed else 'NOT'}")

for label, enc in (
    ("spherical", make_encoder("spherical", 12)),
    ("liere (random)", make_encoder("liere", generators=(random_skew(8, rng),
                                                         random_skew(8, rng)))),
):
    r = check_non_equivariance(enc, trials=100, seed=0)
    print(f"{label:24} {r.residual:>22.3e}   violation found" if r.passed
          else f"{label:24} {r.residual:>22.3e}   no violation")

print("\nlocality probe: mean |score| of matched unit tokens vs distance")
enc = make_encoder("rope1d", 16)
curve = locality_probe(enc, np.pi, 9, draws=64, seed=0)
for s, v in zip(np.linspace(0, np.pi, 9), curve):
    print(f"  shift {s:5.2f}: {v:.3f} " + "#" * int(40 * v))
print("no monotone decay: rotary attention is not a local windowing scheme.")
