"""Split-complex (hyperbolic) number arithmetic.

A hyperbolic number is ``z = x + tau*y`` with ``tau**2 = 1`` (``tau != +-1``).
Multiplication becomes componentwise in the characteristic frame
``X = x - y``, ``Y = x + y``, which is what makes quadratic dynamics over
this ring decouple into two real quadratic maps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

# Absolute tolerance for deciding that a floating value lies on one of the
# null-cone diagonals. Values built with from_char(0, Y) hit the diagonals
# exactly; anything else is an accidental grazing hit.
DIAGONAL_EPS = 1e-12


class CharCoords(NamedTuple):
    """Characteristic-frame coordinates (X, Y) = (x - y, x + y)."""

    X: float
    Y: float


@dataclass(frozen=True)
class HyperbolicNumber:
    """A point x + tau*y of the hyperbolic plane.

    Construction rejects non-finite coordinates; arithmetic results are not
    re-validated, so overflow follows ordinary double-precision semantics
    (downstream code treats infinities as a divergence sentinel).
    """

    x: float
    y: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")

    @classmethod
    def _raw(cls, x: float, y: float) -> "HyperbolicNumber":
        """Unvalidated constructor for arithmetic results and sentinels."""
        self = object.__new__(cls)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        return self

    @classmethod
    def from_char(cls, X: float, Y: float) -> "HyperbolicNumber":
        """Inverse of to_char: x = (X + Y)/2, y = (Y - X)/2."""
        return cls(0.5 * (X + Y), 0.5 * (Y - X))

    def to_char(self) -> CharCoords:
        return CharCoords(self.x - self.y, self.x + self.y)

    def conj(self) -> "HyperbolicNumber":
        """Hyperbolic conjugate x - tau*y (swaps the characteristic axes)."""
        return HyperbolicNumber._raw(self.x, -self.y)

    def quad_form(self) -> float:
        """The indefinite norm z*conj(z) = x**2 - y**2 = X*Y."""
        return self.x * self.x - self.y * self.y

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)

    def on_plus_diagonal(self, eps: float = DIAGONAL_EPS) -> bool:
        """True when X = x - y vanishes (within eps)."""
        return abs(self.x - self.y) <= eps

    def on_minus_diagonal(self, eps: float = DIAGONAL_EPS) -> bool:
        """True when Y = x + y vanishes (within eps)."""
        return abs(self.x + self.y) <= eps

    def on_null_cone(self, eps: float = DIAGONAL_EPS) -> bool:
        return self.on_plus_diagonal(eps) or self.on_minus_diagonal(eps)

    def _coerce(self, other) -> "HyperbolicNumber | None":
        if isinstance(other, HyperbolicNumber):
            return other
        if isinstance(other, (int, float)):
            return HyperbolicNumber._raw(float(other), 0.0)
        return None

    def __add__(self, other) -> "HyperbolicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HyperbolicNumber._raw(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other) -> "HyperbolicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HyperbolicNumber._raw(self.x - o.x, self.y - o.y)

    def __rsub__(self, other) -> "HyperbolicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HyperbolicNumber._raw(o.x - self.x, o.y - self.y)

    def __mul__(self, other) -> "HyperbolicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HyperbolicNumber._raw(
            self.x * o.x + self.y * o.y,
            self.x * o.y + o.x * self.y,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "HyperbolicNumber":
        return HyperbolicNumber._raw(-self.x, -self.y)


ZERO = HyperbolicNumber(0.0, 0.0)
