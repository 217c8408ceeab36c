"""Brute-force escape-time iteration of z -> z**2 + c over the hyperbolic plane.

The divergence criterion is |z*conj(z)| > bound after each step. Because the
quadratic form vanishes on the null cone, no finite bound can certify
divergence near the diagonals; this engine is the empirical oracle the
analytic classification is checked against, never the other way round.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .hypnum import ZERO, HyperbolicNumber
from .realdyn import OVERFLOW_GUARD

# Orbit entries after the overflow guard trips are this sentinel.
DIVERGED = HyperbolicNumber._raw(math.inf, math.inf)


@dataclass(frozen=True)
class EscapeConfig:
    """Iteration budget and divergence bound (figure conventions: 200, 4)."""

    max_iter: int = 200
    bound: float = 4.0

    def __post_init__(self) -> None:
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.bound > 0:
            raise ValueError("bound must be positive")


@dataclass(frozen=True)
class EscapeResult:
    """Outcome of one escape-time iteration.

    escaped_at is the first step n >= 1 with |z_n * conj(z_n)| > bound, or
    None if the orbit survived; in that case steps_run == max_iter.
    """

    escaped_at: int | None
    steps_run: int
    final_norm_abs: float

    @property
    def survived(self) -> bool:
        return self.escaped_at is None


def hyper_step(z: HyperbolicNumber, c: HyperbolicNumber) -> HyperbolicNumber:
    """One step z**2 + c, computed in cartesian coordinates."""
    x, y = z.x, z.y
    return HyperbolicNumber._raw(x * x + y * y + c.x, 2.0 * x * y + c.y)


def escape_time(z0: HyperbolicNumber, c: HyperbolicNumber,
                cfg: EscapeConfig = EscapeConfig()) -> EscapeResult:
    """Iterate z -> z**2 + c from z0, recording the first bound violation.

    Scalar twin of the grid kernels: identical arithmetic, step order and
    overflow handling. Once a coordinate exceeds the overflow guard the norm
    can no longer be resolved in doubles (only numerically-diagonal orbits
    get that far, and those genuinely survive), so the orbit is frozen and
    reported as survived with the last resolvable norm.
    """
    x, y = z0.x, z0.y
    c1, c2 = c.x, c.y
    q = x * x - y * y
    for n in range(1, cfg.max_iter + 1):
        nx = x * x + y * y + c1
        ny = 2.0 * x * y + c2
        x, y = nx, ny
        if abs(x) > OVERFLOW_GUARD or abs(y) > OVERFLOW_GUARD:
            break
        q = x * x - y * y
        if abs(q) > cfg.bound:
            return EscapeResult(escaped_at=n, steps_run=n, final_norm_abs=abs(q))
    return EscapeResult(escaped_at=None, steps_run=cfg.max_iter,
                        final_norm_abs=abs(q))


def mandelbrot_escape(c: HyperbolicNumber,
                      cfg: EscapeConfig = EscapeConfig()) -> EscapeResult:
    """Escape time of the critical orbit (z0 = 0) at parameter c."""
    return escape_time(ZERO, c, cfg)


def hyper_orbit(z0: HyperbolicNumber, c: HyperbolicNumber,
                n: int) -> list[HyperbolicNumber]:
    """Orbit prefix [z0, f(z0), ..., f^n(z0)] with overflow sentinel padding."""
    if n < 0:
        raise ValueError("orbit length must be >= 0")
    out = [z0]
    z = z0
    for _ in range(n):
        if abs(z.x) > OVERFLOW_GUARD or abs(z.y) > OVERFLOW_GUARD:
            z = DIVERGED
        else:
            z = hyper_step(z, c)
        out.append(z)
    return out
