"""Quadratic dynamics over the split-complex (hyperbolic) numbers.

Analytic classification of the hyperbolic Mandelbrot set and filled Julia
sets, a deterministic parallel escape-time renderer, and a verification
harness cross-checking the analytic results against brute-force iteration.
"""

__version__ = "0.1.0"

from ._backend import BACKEND_NAME, available_backends, kernels
from .classify import (
    Axis,
    AxisDegenerate,
    AxisJuliaDescription,
    AxisParameterError,
    Chamber,
    ChamberClass,
    JuliaDescription,
    axis_julia,
    julia_description,
    julia_membership,
    mandelbrot_member,
    quadchotomy,
)
from .escape import (
    DIVERGED,
    EscapeConfig,
    EscapeResult,
    escape_time,
    hyper_orbit,
    hyper_step,
    mandelbrot_escape,
)
from .hypnum import DIAGONAL_EPS, ZERO, CharCoords, HyperbolicNumber
from .oracle import (
    DEFAULT_VERIFY_PARAMETERS,
    BinaryMask,
    ConnectivityReport,
    MandelbrotSquareReport,
    QuadchotomyReport,
    empirical_chamber,
    flood_components,
    rasterize_julia_mask,
    verify_mandelbrot_square,
    verify_quadchotomy,
)
from .realdyn import (
    Cantor,
    EmptySet,
    Interval,
    LogisticParams,
    RealBoundednessClass,
    bounded_real,
    cantor_inner_radius,
    classify_real,
    escape_radius,
    fixed_points,
    logistic_band_edges,
    logistic_params,
    logistic_step,
    real_orbit,
    real_step,
    to_logistic,
)
from .render import (
    SURVIVED,
    GridSpec,
    Image,
    IterationGrid,
    colorize,
    pixel_center,
    render_julia,
    render_mandelbrot,
    write_counts,
    write_ppm,
)
