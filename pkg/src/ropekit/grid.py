"""Patch-position lattices.

A training-size grid spans [-pi, pi] per axis, endpoints inclusive: the
top-left patch sits at (-pi, -pi) and the bottom-right at (pi, pi).  Grids
built at a different size than the reference ("training") size scale each
axis by the size ratio, so a grid twice as wide covers [-2*pi, 2*pi] in x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _axis_coords(n: int, train_n: int) -> np.ndarray:
    # a single patch sits at the range midpoint
    if n == 1:
        return np.zeros(1)
    extent = np.pi * n / train_n
    return np.linspace(-extent, extent, n)


@dataclass(frozen=True)
class PatchGrid:
    """Immutable lattice of 2D positions, row-major with row 0 at the top.

    ``positions[i, j]`` is ``(p_x, p_y)`` for the patch in row i, column j;
    p_x varies along columns and p_y along rows.
    """

    rows: int
    cols: int
    train_rows: int
    train_cols: int
    positions: np.ndarray  # (rows, cols, 2)

    def __post_init__(self):
        self.positions.setflags(write=False)


def make_grid(rows: int, cols: int, train_rows: int | None = None,
              train_cols: int | None = None) -> PatchGrid:
    """Build a rows x cols position lattice relative to a reference size.

    The reference size defaults to the actual size, giving the plain
    [-pi, pi]^2 lattice.
    """
    train_rows = rows if train_rows is None else train_rows
    train_cols = cols if train_cols is None else train_cols
    for name, v in (("rows", rows), ("cols", cols),
                    ("train_rows", train_rows), ("train_cols", train_cols)):
        if not isinstance(v, (int, np.integer)) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    xs = _axis_coords(cols, train_cols)
    ys = _axis_coords(rows, train_rows)
    positions = np.empty((rows, cols, 2))
    positions[:, :, 0] = xs[None, :]
    positions[:, :, 1] = ys[:, None]
    return PatchGrid(rows, cols, train_rows, train_cols, positions)


def flatten_raster(grid: PatchGrid) -> np.ndarray:
    """Row-major (rows*cols, 2) view of the grid positions; index 0 is top-left."""
    return grid.positions.reshape(grid.rows * grid.cols, 2)
