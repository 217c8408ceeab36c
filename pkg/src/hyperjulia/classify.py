"""Analytic parameter-space classification.

Membership in the hyperbolic Mandelbrot set is a closed-form test (the
square [-2, 1/4]^2 in characteristic coordinates, union the two diagonals),
and each off-diagonal filled Julia set is the product of two 1-D bounded
sets, which yields a four-chamber decomposition of parameter space.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .hypnum import DIAGONAL_EPS, HyperbolicNumber
from .realdyn import (
    CANTOR_EDGE,
    EMPTY_EDGE,
    Cantor,
    EmptySet,
    Interval,
    RealBoundednessClass,
    bounded_real,
    cantor_inner_radius,
    classify_real,
    escape_radius,
)


class Axis(Enum):
    """Which characteristic coordinate of the parameter vanishes."""

    CX_ZERO = "cX_zero"
    CY_ZERO = "cY_zero"
    BOTH_ZERO = "both_zero"


class Chamber(Enum):
    """Qualitative type of the filled Julia set, off the diagonals."""

    CONNECTED_NONEMPTY = "ConnectedNonempty"
    DISCONNECTED = "Disconnected"
    TOTALLY_DISCONNECTED = "TotallyDisconnected"
    EMPTY = "Empty"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AxisDegenerate:
    """Chamber tag for parameters on a diagonal (product law fails there)."""

    which_axis: Axis
    nonaxis_c: float

    def __str__(self) -> str:
        return "AxisDegenerate"


ChamberClass = Chamber | AxisDegenerate


@dataclass(frozen=True)
class JuliaDescription:
    """Filled Julia set as a product of 1-D bounded sets, in (X, Y) coords."""

    factor_X: RealBoundednessClass
    factor_Y: RealBoundednessClass
    chamber: ChamberClass


@dataclass(frozen=True)
class AxisJuliaDescription:
    """Filled Julia set for a parameter on a diagonal.

    kind is one of:
      * "empty": the nonzero coordinate exceeds 1/4.
      * "unit_square": c = 0; each coordinate orbit is bounded exactly for
        |X0| <= 1 and |Y0| <= 1. Note the defining norm criterion accepts
        more: |z_n*conj(z_n)| = |X0*Y0|**(2**n) stays bounded on the whole
        hyperbola region |X0*Y0| <= 1 (escape rasterization shows this).
      * "band_product": single zero coordinate; reported as a subset of
        +-[band_inner, band_outer] along the nonzero axis times [-1, 1]
        along the zero axis. This restates a claim inconsistent with the
        doubly-exponential growth of the zero-coordinate factor, hence
        per_paper_unverified; empirical rasterization is the trustworthy
        view.
    """

    which_axis: Axis
    nonaxis_c: float
    kind: str
    band_outer: float | None = None
    band_inner: float | None = None
    axis_interval: tuple[float, float] | None = None
    per_paper_unverified: bool = False


class AxisParameterError(ValueError):
    """Raised for diagonal parameters where the product law does not apply."""


def _axis_kind(cX: float, cY: float, eps: float) -> Axis | None:
    x_zero = abs(cX) <= eps
    y_zero = abs(cY) <= eps
    if x_zero and y_zero:
        return Axis.BOTH_ZERO
    if x_zero:
        return Axis.CX_ZERO
    if y_zero:
        return Axis.CY_ZERO
    return None


def _in_square(t: float) -> bool:
    # Closed square: the walls -2 and 1/4 count as inside, matching the
    # Interval assignment of classify_real.
    return CANTOR_EDGE <= t <= EMPTY_EDGE


def mandelbrot_member(c: HyperbolicNumber, eps: float = DIAGONAL_EPS) -> bool:
    """Exact membership test: the closed square union the diagonals."""
    cX, cY = c.to_char()
    return (_in_square(cX) and _in_square(cY)) or abs(cX) <= eps or abs(cY) <= eps


def quadchotomy(c: HyperbolicNumber, eps: float = DIAGONAL_EPS) -> ChamberClass:
    """Chamber of the parameter c in the wall-and-chamber decomposition.

    Off the diagonals, with (cX, cY) the characteristic coordinates:
    both in [-2, 1/4] -> connected nonempty; one in, the other below -2 ->
    disconnected; both below -2 -> totally disconnected; any coordinate
    above 1/4 -> empty. Diagonal parameters get the AxisDegenerate tag.
    """
    return quadchotomy_char(*c.to_char(), eps=eps)


def quadchotomy_char(cX: float, cY: float,
                     eps: float = DIAGONAL_EPS) -> ChamberClass:
    """quadchotomy with the parameter given directly in the (X, Y) frame."""
    axis = _axis_kind(cX, cY, eps)
    if axis is not None:
        nonaxis = 0.0
        if axis is Axis.CX_ZERO:
            nonaxis = cY
        elif axis is Axis.CY_ZERO:
            nonaxis = cX
        return AxisDegenerate(which_axis=axis, nonaxis_c=nonaxis)
    in_x, in_y = _in_square(cX), _in_square(cY)
    if in_x and in_y:
        return Chamber.CONNECTED_NONEMPTY
    if (in_x and cY < CANTOR_EDGE) or (in_y and cX < CANTOR_EDGE):
        return Chamber.DISCONNECTED
    if cX < CANTOR_EDGE and cY < CANTOR_EDGE:
        return Chamber.TOTALLY_DISCONNECTED
    return Chamber.EMPTY


def julia_description(c: HyperbolicNumber,
                      eps: float = DIAGONAL_EPS) -> JuliaDescription:
    """1-D factor classes and chamber of the filled Julia set of c."""
    cX, cY = c.to_char()
    if _axis_kind(cX, cY, eps) is not None:
        raise AxisParameterError(
            f"parameter with characteristic coordinates ({cX}, {cY}) lies on "
            "a diagonal; use axis_julia for the degenerate description"
        )
    return JuliaDescription(
        factor_X=classify_real(cX),
        factor_Y=classify_real(cY),
        chamber=quadchotomy(c, eps),
    )


def julia_membership(z0: HyperbolicNumber, c: HyperbolicNumber,
                     max_iter: int = 200, eps: float = DIAGONAL_EPS) -> bool:
    """Product-law membership: both characteristic seeds bounded in 1-D."""
    cX, cY = c.to_char()
    if _axis_kind(cX, cY, eps) is not None:
        raise AxisParameterError(
            "membership via the product law needs both characteristic "
            "coordinates of c nonzero; use axis_julia"
        )
    X0, Y0 = z0.to_char()
    return bounded_real(X0, cX, max_iter) and bounded_real(Y0, cY, max_iter)


def axis_julia(c: HyperbolicNumber,
               eps: float = DIAGONAL_EPS) -> AxisJuliaDescription:
    """Describe the filled Julia set for a parameter on a diagonal."""
    cX, cY = c.to_char()
    axis = _axis_kind(cX, cY, eps)
    if axis is None:
        raise ValueError(
            f"parameter ({cX}, {cY}) is off the diagonals; use julia_description"
        )
    if axis is Axis.BOTH_ZERO:
        # Pure squaring map: each coordinate is bounded exactly on [-1, 1].
        return AxisJuliaDescription(
            which_axis=axis, nonaxis_c=0.0, kind="unit_square",
            band_outer=1.0, band_inner=0.0, axis_interval=(-1.0, 1.0),
        )
    nonaxis = cY if axis is Axis.CX_ZERO else cX
    if nonaxis > EMPTY_EDGE:
        return AxisJuliaDescription(which_axis=axis, nonaxis_c=nonaxis,
                                    kind="empty")
    inner = cantor_inner_radius(nonaxis) if nonaxis < CANTOR_EDGE else 0.0
    return AxisJuliaDescription(
        which_axis=axis,
        nonaxis_c=nonaxis,
        kind="band_product",
        band_outer=escape_radius(nonaxis),
        band_inner=inner,
        axis_interval=(-1.0, 1.0),
        per_paper_unverified=True,
    )


def describe_factor(factor: RealBoundednessClass) -> str:
    """One-token rendering of a 1-D factor class, for reports."""
    if isinstance(factor, Interval):
        return f"Interval[radius={factor.radius!r}]"
    if isinstance(factor, Cantor):
        return f"Cantor[radius={factor.radius!r},inner={factor.inner_radius!r}]"
    if isinstance(factor, EmptySet):
        return "Empty"
    raise TypeError(f"not a factor class: {factor!r}")
