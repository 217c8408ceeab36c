"""Dynamics of the real quadratic family f_c(x) = x**2 + c.

Everything the two-dimensional theory needs reduces to this family:
boundedness of real orbits, the conjugacy to the logistic map, and the
radii that bracket the bounded set in each parameter regime.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

# Orbit values beyond this are treated as diverged; orbits are padded with
# +inf from there on so counts stay well defined (no inf - inf downstream).
OVERFLOW_GUARD = 1e150

# Parameter walls of the real family: bounded orbits fill an interval for
# CANTOR_EDGE <= c <= EMPTY_EDGE, thin out to a Cantor set below, vanish above.
CANTOR_EDGE = -2.0
EMPTY_EDGE = 0.25


@dataclass(frozen=True)
class Cantor:
    """Bounded set is a Cantor set inside +-[inner_radius, radius]."""

    radius: float
    inner_radius: float


@dataclass(frozen=True)
class Interval:
    """Bounded set is the full interval [-radius, radius]."""

    radius: float


@dataclass(frozen=True)
class EmptySet:
    """No bounded real orbits (c > 1/4)."""


RealBoundednessClass = Cantor | Interval | EmptySet


@dataclass(frozen=True)
class LogisticParams:
    """Parameters of the affine conjugacy to xi -> r*(1 - xi)*xi.

    ``scale`` is the larger fixed point of f_c; the conjugacy is
    xi = (1 - x/scale)/2 with r = 2*scale.
    """

    r: float
    scale: float


def real_step(x: float, c: float) -> float:
    return x * x + c


def real_orbit(x0: float, c: float, n: int) -> list[float]:
    """Orbit prefix [x0, f(x0), ..., f^n(x0)], padded with +inf once the
    overflow guard trips."""
    if n < 0:
        raise ValueError("orbit length must be >= 0")
    out = [float(x0)]
    x = float(x0)
    for _ in range(n):
        if abs(x) > OVERFLOW_GUARD:
            x = math.inf
        else:
            x = x * x + c
        out.append(x)
    return out


def escape_radius(c: float) -> float:
    """Larger fixed point (1 + sqrt(1 - 4c))/2 of f_c.

    Real orbits that ever exceed it in absolute value increase strictly and
    diverge, so it doubles as an exact escape radius; it is also the scale
    of the logistic conjugacy.
    """
    if c > EMPTY_EDGE:
        raise ValueError(f"no real fixed points for c={c} > 1/4")
    return (1.0 + math.sqrt(1.0 - 4.0 * c)) / 2.0


def fixed_points(c: float) -> tuple[float, float]:
    """Both fixed points of f_c, larger first."""
    if c > EMPTY_EDGE:
        raise ValueError(f"no real fixed points for c={c} > 1/4")
    s = math.sqrt(1.0 - 4.0 * c)
    return (1.0 + s) / 2.0, (1.0 - s) / 2.0


def logistic_params(c: float) -> LogisticParams:
    scale = escape_radius(c)
    return LogisticParams(r=2.0 * scale, scale=scale)


def to_logistic(x: float, c: float) -> float:
    """Conjugacy coordinate xi = (1 - x/scale)/2."""
    return 0.5 * (1.0 - x / escape_radius(c))


def logistic_step(xi: float, r: float) -> float:
    return r * (1.0 - xi) * xi


def cantor_inner_radius(c: float) -> float:
    """Inner radius of the two bands bracketing the bounded Cantor set.

    For c <= -2 the bounded set lies in [-radius, -inner] u [inner, radius];
    equivalently inner**2 = -c - escape_radius(c), the one-step preimage
    condition |x**2 + c| <= radius.
    """
    rhs = (-4.0 * c - 2.0 - 2.0 * math.sqrt(max(1.0 - 4.0 * c, 0.0))) / 4.0
    if rhs < 0.0:
        raise ValueError(f"inner radius undefined for c={c} > -2")
    return math.sqrt(rhs)


def logistic_band_edges(r: float) -> tuple[float, float]:
    """Endpoints (lower, upper) of the logistic survivor bands for r >= 4.

    Orbits of xi -> r*(1-xi)*xi that stay in [0, 1] live inside
    [0, lower] u [upper, 1].
    """
    if r < 4.0:
        raise ValueError(f"band edges require r >= 4, got {r}")
    s = math.sqrt(r * r - 4.0 * r)
    return (r - s) / (2.0 * r), (r + s) / (2.0 * r)


def classify_real(c: float) -> RealBoundednessClass:
    """Boundedness trichotomy of the real family at parameter c.

    The walls c = -2 and c = 1/4 are assigned to the Interval regime: the
    bounded set there is still the full interval ([-2, 2] and [-1/2, 1/2]).
    """
    if c > EMPTY_EDGE:
        return EmptySet()
    if c >= CANTOR_EDGE:
        return Interval(radius=escape_radius(c))
    return Cantor(radius=escape_radius(c), inner_radius=cantor_inner_radius(c))


def bounded_real(x0: float, c: float, max_iter: int = 200) -> bool:
    """Whether the orbit of x0 under f_c stays bounded.

    Interval regime: exact (|x0| <= radius, no iteration). Empty regime:
    always False. Cantor regime: iterate up to max_iter steps, reporting
    False as soon as the orbit leaves [-radius, radius] (escape is then
    certain by monotonicity), True if it survives every step.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if c > EMPTY_EDGE:
        return False
    rho = escape_radius(c)
    if c >= CANTOR_EDGE:
        return abs(x0) <= rho
    x = x0
    for _ in range(max_iter):
        if abs(x) > rho:
            return False
        x = x * x + c
    return abs(x) <= rho
