"""A guided tour of the encoding families on tiny concrete vectors.

Run:  python3 demos/encoders_tour.py
"""

import numpy as np

from ropekit import (FrequencyTable, frequency_schedule, liere, make_encoder,
                     matrix_exp, mixed, rope1d, spherical, trivial2d)

np.set_printoptions(precision=4, suppress=True)


def banner(title):
    print(f"\n=== {title} ===")


banner("frequency schedule")
print("eight geometric frequencies, base 100:")
print(frequency_schedule(8))

banner("plain rotary pairs (1D)")
table = FrequencyTable("rope1d", np.array([[1.0]]))
z = np.array([1.0, 0.0])
print(f"unit x-vector, quarter turn:      {rope1d(z, np.pi / 2, table)}")
print(f"half turn:                        {rope1d(z, np.pi, table)}")
print("the rotation preserves length and the zero position is the identity.")

banner("summed-coordinate 2D (degenerate)")
t8 = FrequencyTable("rope1d", frequency_schedule(4)[:, None])
z8 = np.arange(8.0)
a = trivial2d(z8, (0.9, -0.2), t8)
b = trivial2d(z8, (0.9 + 0.5, -0.2 - 0.5), t8)
print(f"encodings at (0.9, -0.2) and shifted along the anti-diagonal differ by "
      f"{np.max(np.abs(a - b)):.2e}")
print("every position with the same x+y gets the same encoding - the 2D")
print("information collapses to a single scalar.")

banner("combined-angle pairs (mixed)")
tm = FrequencyTable("mixed", np.array([[1.0, 1.0]]))
print(f"(1,0) at p=(pi/2, pi/2) rotates by the SUM of the angles: "
      f"{mixed(np.array([1.0, 0.0]), (np.pi / 2, np.pi / 2), tm)}")

banner("3D rotations (non-commutative)")
ts = FrequencyTable("spherical", np.ones((1, 2)))
z3 = np.array([1.0, 2.0, 3.0])
p1, p2 = np.array([1.0, 0.7]), np.array([-0.3, 1.2])
once = spherical(z3, p1 + p2, ts)
twice = spherical(spherical(z3, p1, ts), p2, ts)
print(f"encode at p1+p2 directly:  {once}")
print(f"encode at p1 then p2:      {twice}")
print(f"difference norm {np.linalg.norm(once - twice):.4f}: yaw and roll do not")
print("commute, so successive encodings do not compose like translations.")

banner("generator form")
gen = np.array([[0.0, -0.7], [0.7, 0.0]])
print("a 2x2 rotation generator with frequency 0.7; exp(gen * p) at p=1:")
print(matrix_exp(gen))
print(f"matches rope1d with omega=0.7: "
      f"{liere(np.array([1.0, 0.0]), [1.0], [gen])} vs "
      f"{rope1d(np.array([1.0, 0.0]), 1.0, FrequencyTable('rope1d', np.array([[0.7]])))}")

banner("encoder objects")
enc = make_encoder("axial", 16)
print(f"axial encoder: dim={enc.dim}, axes={enc.axes}, "
      f"{enc.pattern_blocks} score blocks")
print(f"x-frequencies: {enc.table.freqs[:, 0]}")
