"""Deterministic tile-parallel rasterization and image output.

Every pixel is an independent escape-time evaluation at its cell center
(row 0 at the top). Work is banded over rows across a thread pool; the
kernels release the GIL, so worker counts trade wall time only -- the
output is bitwise identical for any number of workers.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import BinaryIO, Literal

import numpy as np

from ._backend import kernels
from .escape import EscapeConfig
from .hypnum import HyperbolicNumber

Frame = Literal["cartesian", "characteristic"]

SURVIVED = 0  # counts-array marker for pixels that never escaped


@dataclass(frozen=True)
class GridSpec:
    """Pixel lattice over a plane rectangle.

    In the cartesian frame (u, v) = (x, y); in the characteristic frame
    (u, v) = (X, Y). u increases left to right, v decreases top to bottom.
    """

    frame: Frame
    min_u: float
    max_u: float
    min_v: float
    max_v: float
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.frame not in ("cartesian", "characteristic"):
            raise ValueError(f"unknown frame {self.frame!r}")
        if not (self.max_u > self.min_u and self.max_v > self.min_v):
            raise ValueError("empty viewport")
        if self.width < 1 or self.height < 1:
            raise ValueError("grid must be at least 1x1")

    @property
    def du(self) -> float:
        return (self.max_u - self.min_u) / self.width

    @property
    def dv(self) -> float:
        return (self.max_v - self.min_v) / self.height


@dataclass(frozen=True)
class IterationGrid:
    """Escape-step counts per pixel; SURVIVED (0) marks bounded pixels."""

    spec: GridSpec
    cfg: EscapeConfig
    counts: np.ndarray  # (height, width) int32, row-major

    def survived_mask(self) -> np.ndarray:
        return self.counts == SURVIVED


@dataclass(frozen=True)
class Image:
    """8-bit RGB image, row-major, top row first."""

    width: int
    height: int
    pixels: bytes  # 3 * width * height

    def __post_init__(self) -> None:
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError("pixel buffer size mismatch")


def pixel_center(spec: GridSpec, i: int, j: int) -> HyperbolicNumber:
    """The hyperbolic number at the center of pixel (column i, row j)."""
    if not (0 <= i < spec.width and 0 <= j < spec.height):
        raise IndexError(f"pixel ({i}, {j}) outside {spec.width}x{spec.height}")
    u = spec.min_u + (i + 0.5) * spec.du
    v = spec.max_v - (j + 0.5) * spec.dv
    if spec.frame == "characteristic":
        return HyperbolicNumber.from_char(u, v)
    return HyperbolicNumber(u, v)


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError("workers must be >= 1")
    return workers


def row_bands(height: int, workers: int) -> list[tuple[int, int]]:
    """Contiguous row ranges assigned to workers (pure function of inputs)."""
    edges = [height * k // workers for k in range(workers + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def run_rows_parallel(fn, height: int, workers: int, args: tuple) -> None:
    """Evaluate fn(*args, j0, j1) over disjoint row bands covering the grid.

    Every pixel is a pure function of its coordinates, so the output is
    identical for any worker count; the count only sets the parallelism
    budget. Execution never uses more threads than cores (oversubscribing
    buys nothing and slows the pure backend down).
    """
    parallelism = min(workers, os.cpu_count() or workers)
    bands = row_bands(height, parallelism)
    if len(bands) <= 1:
        fn(*args, 0, height)
        return
    with ThreadPoolExecutor(max_workers=len(bands)) as pool:
        futures = [pool.submit(fn, *args, j0, j1) for j0, j1 in bands]
        for f in futures:
            f.result()


def render_mandelbrot(spec: GridSpec, cfg: EscapeConfig = EscapeConfig(),
                      workers: int | None = None) -> IterationGrid:
    """Escape counts of the critical orbit with c at each pixel center."""
    k = kernels()
    counts = np.zeros((spec.height, spec.width), dtype=np.int32)
    args = (counts, spec.min_u, spec.du, spec.max_v, spec.dv,
            spec.frame == "characteristic", cfg.max_iter, cfg.bound)
    run_rows_parallel(k.mandelbrot_counts, spec.height,
                      _resolve_workers(workers), args)
    return IterationGrid(spec=spec, cfg=cfg, counts=counts)


def render_julia(c: HyperbolicNumber, spec: GridSpec,
                 cfg: EscapeConfig = EscapeConfig(),
                 workers: int | None = None) -> IterationGrid:
    """Escape counts with each pixel center as the seed, fixed parameter c."""
    k = kernels()
    counts = np.zeros((spec.height, spec.width), dtype=np.int32)
    args = (counts, spec.min_u, spec.du, spec.max_v, spec.dv,
            spec.frame == "characteristic", c.x, c.y, cfg.max_iter, cfg.bound)
    run_rows_parallel(k.julia_counts, spec.height,
                      _resolve_workers(workers), args)
    return IterationGrid(spec=spec, cfg=cfg, counts=counts)


def colorize(grid: IterationGrid) -> Image:
    """Linear red-to-blue ramp by escape step; survived pixels are pure blue.

    Escaped at step n: t = (n - 1)/max_iter, R = round(255*(1 - t)), G = 0,
    B = round(255*t), rounding half away from zero.
    """
    counts = grid.counts
    h, w = counts.shape
    rgb = np.zeros((h, w, 3), dtype=np.uint8)
    escaped = counts > 0
    t = (counts[escaped] - 1).astype(np.float64) / grid.cfg.max_iter
    rgb[escaped, 0] = np.floor(255.0 * (1.0 - t) + 0.5).astype(np.uint8)
    rgb[escaped, 2] = np.floor(255.0 * t + 0.5).astype(np.uint8)
    rgb[~escaped, 2] = 255
    return Image(width=w, height=h, pixels=rgb.tobytes())


def write_ppm(img: Image, sink: BinaryIO) -> None:
    """Binary PPM (P6, maxval 255), top row first."""
    sink.write(b"P6\n%d %d\n255\n" % (img.width, img.height))
    sink.write(img.pixels)


def write_counts(grid: IterationGrid, sink: BinaryIO) -> None:
    """CSV of escape counts, header i,j,count, rows in (j, i) order;
    count 0 denotes survived."""
    lines = ["i,j,count"]
    counts = grid.counts
    for j in range(grid.spec.height):
        row = counts[j]
        lines.extend(f"{i},{j},{row[i]}" for i in range(grid.spec.width))
    sink.write(("\n".join(lines) + "\n").encode("ascii"))
