"""Empirical verification layer.

Rasterizes filled Julia sets as binary masks, measures connectivity by
connected-component labeling, and cross-checks the analytic chamber and
Mandelbrot predicates against brute-force escape iteration. Failures are
data (reported), not exceptions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from ._backend import kernels
from .classify import (
    AxisParameterError,
    Chamber,
    _axis_kind,
    quadchotomy_char,
)
from .escape import EscapeConfig
from .hypnum import DIAGONAL_EPS, HyperbolicNumber
from .realdyn import (
    CANTOR_EDGE,
    EMPTY_EDGE,
    Cantor,
    EmptySet,
    Interval,
    classify_real,
)
from .render import GridSpec, render_julia, render_mandelbrot, run_rows_parallel

# 4-connectivity: components touch along axes only, the faithful adjacency
# for products of 1-D sets.
_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.uint8)

# Representative off-wall parameters, one batch per chamber type
# (characteristic coordinates).
DEFAULT_VERIFY_PARAMETERS: tuple[tuple[float, float], ...] = (
    (-1.0, -1.0),
    (-1.5, 0.1),
    (-2.5, -1.0),
    (-1.0, -2.5),
    (-2.5, -2.5),
    (0.5, 0.5),
    (0.5, -1.0),
    (-1.0, 0.5),
    (-2.5, 0.5),
)


@dataclass(frozen=True)
class BinaryMask:
    """Boolean raster; True marks member/survived pixels."""

    width: int
    height: int
    data: np.ndarray  # (height, width) bool

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "BinaryMask":
        a = np.asarray(arr, dtype=bool)
        return cls(width=a.shape[1], height=a.shape[0], data=a)


@dataclass(frozen=True)
class ConnectivityReport:
    component_count: int
    component_sizes: tuple[int, ...]  # descending
    largest_fraction: float
    max_component_diameter_px: int


def _factor_params(c_coord: float) -> tuple[int, float, float]:
    """(mode, c, radius) triple driving the 1-D boundedness kernels."""
    factor = classify_real(c_coord)
    if isinstance(factor, EmptySet):
        return 0, c_coord, 0.0
    if isinstance(factor, Interval):
        return 1, c_coord, factor.radius
    return 2, c_coord, factor.radius


def rasterize_julia_mask(c: HyperbolicNumber, spec: GridSpec,
                         cfg: EscapeConfig = EscapeConfig(),
                         source: str = "analytic",
                         workers: int | None = None,
                         eps: float = DIAGONAL_EPS) -> BinaryMask:
    """Membership mask of the filled Julia set of c over a pixel grid.

    source="analytic" evaluates the product law at every pixel center
    (1-D boundedness per characteristic coordinate, iteration capped at
    cfg.max_iter in the Cantor regime); source="escape" marks the pixels
    that survive brute-force iteration under cfg.
    """
    if source == "escape":
        grid = render_julia(c, spec, cfg, workers=workers)
        return BinaryMask.from_array(grid.survived_mask())
    if source != "analytic":
        raise ValueError(f"unknown mask source {source!r}")
    return analytic_mask_char(*c.to_char(), spec=spec, cfg=cfg,
                              workers=workers, eps=eps)


def analytic_mask_char(cX: float, cY: float, spec: GridSpec,
                       cfg: EscapeConfig = EscapeConfig(),
                       workers: int | None = None,
                       eps: float = DIAGONAL_EPS) -> BinaryMask:
    """Analytic membership mask with c given directly in the (X, Y) frame."""
    if _axis_kind(cX, cY, eps) is not None:
        raise AxisParameterError(
            "analytic masks need an off-diagonal parameter; "
            "rasterize with source='escape' for exploratory axis output"
        )
    k = kernels()
    mode_x, _, rho_x = _factor_params(cX)
    mode_y, _, rho_y = _factor_params(cY)
    if spec.frame == "characteristic":
        # X depends only on the column and Y only on the row: two 1-D
        # sweeps and an outer AND give exactly the per-pixel verdicts.
        col = np.zeros(spec.width, dtype=np.uint8)
        row = np.zeros(spec.height, dtype=np.uint8)
        k.bounded_mask_1d(col, spec.min_u, spec.du, mode_x, cX, rho_x,
                          cfg.max_iter)
        k.bounded_mask_1d(row, spec.max_v, -spec.dv, mode_y, cY, rho_y,
                          cfg.max_iter)
        mask = (row[:, None] & col[None, :]).astype(bool)
        return BinaryMask.from_array(mask)
    out = np.zeros((spec.height, spec.width), dtype=np.uint8)
    args = (out, spec.min_u, spec.du, spec.max_v, spec.dv,
            mode_x, cX, rho_x, mode_y, cY, rho_y, cfg.max_iter)
    run_rows_parallel(k.bounded_mask_cart, spec.height, workers or 1, args)
    return BinaryMask.from_array(out)


def flood_components(mask: BinaryMask) -> ConnectivityReport:
    """4-connected components of the mask.

    Diameter is the Chebyshev distance between the farthest pixels of a
    component's bounding box (a single pixel has diameter 0).
    """
    labels, count = ndimage.label(mask.data, structure=_CROSS)
    if count == 0:
        return ConnectivityReport(0, (), 0.0, 0)
    sizes = np.bincount(labels.ravel())[1:]
    total = int(sizes.sum())
    max_diam = 0
    for sl in ndimage.find_objects(labels):
        if sl is None:
            continue
        rows = sl[0].stop - sl[0].start
        cols = sl[1].stop - sl[1].start
        max_diam = max(max_diam, max(rows, cols) - 1)
    ordered = tuple(sorted((int(s) for s in sizes), reverse=True))
    return ConnectivityReport(
        component_count=int(count),
        component_sizes=ordered,
        largest_fraction=ordered[0] / total,
        max_component_diameter_px=max_diam,
    )


def mask_perimeter_px(mask: BinaryMask) -> int:
    """True pixels with a false 4-neighbor or lying on the frame edge."""
    m = mask.data
    pad = np.pad(m, 1, constant_values=False)
    interior = (pad[:-2, 1:-1] & pad[2:, 1:-1] & pad[1:-1, :-2] & pad[1:-1, 2:])
    return int((m & ~interior).sum())


def empirical_chamber(report: ConnectivityReport, resolution: int) -> Chamber:
    """Chamber proxy from a connectivity report at the given resolution.

    "Totally disconnected" is approximated as: more than one component and
    every component smaller than resolution/64 across. Interval factors
    always produce components spanning a fixed fraction of the frame, so
    they can never satisfy the threshold.
    """
    if report.component_count == 0:
        return Chamber.EMPTY
    if report.component_count == 1:
        return Chamber.CONNECTED_NONEMPTY
    if report.max_component_diameter_px <= resolution / 64:
        return Chamber.TOTALLY_DISCONNECTED
    return Chamber.DISCONNECTED


def connectivity_mask_depth(resolution: int) -> int:
    """Iteration depth for connectivity masks of Cantor-regime factors.

    The bounded set in the Cantor regime has measure zero: at a fixed pixel
    size, survivors of n-step iteration thin out roughly geometrically in n,
    and past the depth that resolves sub-pixel structure the raster set
    collapses to nothing. Matching depth to log2(resolution) keeps one to a
    few pixels per Cantor cluster -- faithful set geometry at every
    resolution (validated by the resolution-scaling tests).
    """
    return max(1, math.ceil(math.log2(max(2, resolution)))) + 2


def connectivity_viewport(cX: float, cY: float, resolution: int) -> GridSpec:
    """Characteristic-frame square viewport that contains the whole set."""
    halves = []
    for coord in (cX, cY):
        factor = classify_real(coord)
        halves.append(2.25 if isinstance(factor, EmptySet)
                      else factor.radius + 0.25)
    half = max(halves)
    return GridSpec(frame="characteristic", min_u=-half, max_u=half,
                    min_v=-half, max_v=half,
                    width=resolution, height=resolution)


@dataclass(frozen=True)
class QuadchotomyCheck:
    c_char: tuple[float, float]
    expected: Chamber
    observed: Chamber
    component_count: int
    max_component_diameter_px: int

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.c_char[0]!r} {self.c_char[1]!r} "
                f"expected={self.expected} observed={self.observed} "
                f"components={self.component_count}")


@dataclass(frozen=True)
class QuadchotomyReport:
    resolution: int
    mask_depth: int
    checks: tuple[QuadchotomyCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def lines(self) -> list[str]:
        return [ch.line() for ch in self.checks]


def verify_quadchotomy(parameters=DEFAULT_VERIFY_PARAMETERS,
                       resolution: int = 512,
                       cfg: EscapeConfig = EscapeConfig(),
                       workers: int | None = None,
                       wall_margin: float = 0.05) -> QuadchotomyReport:
    """Check the predicted chamber of each parameter against the raster.

    Parameters are (cX, cY) characteristic pairs or HyperbolicNumbers; they
    must sit at least wall_margin away from the walls {-2, 1/4} and off the
    diagonals. Masks are analytic, rasterized at a connectivity-matched
    iteration depth (see connectivity_mask_depth) over an auto viewport.
    """
    depth = min(cfg.max_iter, connectivity_mask_depth(resolution))
    mask_cfg = EscapeConfig(max_iter=depth, bound=cfg.bound)
    checks = []
    for p in parameters:
        cX, cY = p.to_char() if isinstance(p, HyperbolicNumber) else p
        for coord in (cX, cY):
            if min(abs(coord - CANTOR_EDGE), abs(coord - EMPTY_EDGE)) < wall_margin:
                raise ValueError(
                    f"parameter coordinate {coord} is within {wall_margin} "
                    "of a wall; chamber detection is unreliable there"
                )
            if abs(coord) <= DIAGONAL_EPS:
                raise ValueError("diagonal parameters are excluded")
        expected = quadchotomy_char(cX, cY)
        assert isinstance(expected, Chamber)
        spec = connectivity_viewport(cX, cY, resolution)
        mask = analytic_mask_char(cX, cY, spec, mask_cfg, workers=workers)
        report = flood_components(mask)
        observed = empirical_chamber(report, resolution)
        checks.append(QuadchotomyCheck(
            c_char=(cX, cY),
            expected=expected,
            observed=observed,
            component_count=report.component_count,
            max_component_diameter_px=report.max_component_diameter_px,
        ))
    return QuadchotomyReport(resolution=resolution, mask_depth=depth,
                             checks=tuple(checks))


@dataclass(frozen=True)
class MandelbrotSquareReport:
    resolution: int
    margin: float
    inside_checked: int
    outside_checked: int
    inside_violations: int
    outside_violations: int
    violation_examples: tuple[tuple[float, float], ...]

    @property
    def all_passed(self) -> bool:
        return self.inside_violations == 0 and self.outside_violations == 0

    def lines(self) -> list[str]:
        status = "PASS" if self.all_passed else "FAIL"
        return [
            f"{status} mandelbrot-square resolution={self.resolution} "
            f"margin={self.margin!r} inside_checked={self.inside_checked} "
            f"outside_checked={self.outside_checked} "
            f"violations={self.inside_violations + self.outside_violations}"
        ]


def verify_mandelbrot_square(resolution: int = 512, margin: float = 0.05,
                             cfg: EscapeConfig = EscapeConfig(),
                             workers: int | None = None) -> MandelbrotSquareReport:
    """Escape-iterate a characteristic grid over [-3, 1.25]^2 and assert:
    samples at least margin inside the square survive, samples at least
    margin outside the square and off the diagonals escape.

    Margins are per characteristic coordinate (Chebyshev distance to the
    square; |cX| and |cY| at least margin for the diagonal exclusion).
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    spec = GridSpec(frame="characteristic", min_u=-3.0, max_u=1.25,
                    min_v=-3.0, max_v=1.25,
                    width=resolution, height=resolution)
    grid = render_mandelbrot(spec, cfg, workers=workers)
    survived = grid.survived_mask()

    u = spec.min_u + (np.arange(spec.width) + 0.5) * spec.du
    v = spec.max_v - (np.arange(spec.height) + 0.5) * spec.dv
    cX, cY = np.meshgrid(u, v)

    def dist_to_wall_interval(t):
        return np.maximum(np.maximum(CANTOR_EDGE - t, t - EMPTY_EDGE), 0.0)

    inside = ((cX >= CANTOR_EDGE + margin) & (cX <= EMPTY_EDGE - margin)
              & (cY >= CANTOR_EDGE + margin) & (cY <= EMPTY_EDGE - margin))
    outside = (np.maximum(dist_to_wall_interval(cX), dist_to_wall_interval(cY))
               >= margin) & (np.abs(cX) >= margin) & (np.abs(cY) >= margin)

    inside_bad = inside & ~survived
    outside_bad = outside & survived
    examples = []
    for mask_bad in (inside_bad, outside_bad):
        jj, ii = np.nonzero(mask_bad)
        for j, i in list(zip(jj, ii))[:5]:
            examples.append((float(cX[j, i]), float(cY[j, i])))
    return MandelbrotSquareReport(
        resolution=resolution,
        margin=margin,
        inside_checked=int(inside.sum()),
        outside_checked=int(outside.sum()),
        inside_violations=int(inside_bad.sum()),
        outside_violations=int(outside_bad.sum()),
        violation_examples=tuple(examples),
    )
