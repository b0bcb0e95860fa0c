"""Closed real intervals with center/width form and a distance-based preference order.

An interval ``[lo, hi]`` models an uncertain cost; its center is the expected
value and its half-width the uncertainty.  Two interval costs are compared by
the Euclidean distance of their (center, width) points from a given ideal
point: the closer one is preferred.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# Absolute tolerance for distance ties in `prefer`.
TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] on the real line.

    Construction fails fast on lo > hi: a reversed interval in a cost table is
    a data-entry error, not something to silently repair.  A degenerate
    interval (lo == hi) is a valid crisp value.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"interval lo > hi: [{self.lo}, {self.hi}]")

    @property
    def center(self) -> float:
        return (self.hi + self.lo) / 2.0

    @property
    def width(self) -> float:
        """Half-width; nonnegative by construction."""
        return (self.hi - self.lo) / 2.0

    def __add__(self, other: Interval) -> Interval:
        if not isinstance(other, Interval):
            return NotImplemented
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, factor: float) -> Interval:
        """Multiply by a real; a negative factor swaps the endpoints."""
        if factor >= 0:
            return Interval(factor * self.lo, factor * self.hi)
        return Interval(factor * self.hi, factor * self.lo)

    def __mul__(self, factor: float) -> Interval:
        return self.scale(factor)

    __rmul__ = __mul__

    def as_center_width(self) -> CenterWidth:
        return CenterWidth(self.center, self.width)

    def is_crisp(self, tol: float = 0.0) -> bool:
        return (self.hi - self.lo) <= tol


@dataclass(frozen=True)
class CenterWidth:
    """Interval in center/width form: all points within `width` of `center`."""

    center: float
    width: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.center) and math.isfinite(self.width)):
            raise ValueError(f"center/width must be finite, got <{self.center}, {self.width}>")
        if self.width < 0:
            raise ValueError(f"negative width {self.width} is not a valid uncertainty")

    def as_interval(self) -> Interval:
        return Interval(self.center - self.width, self.center + self.width)

    def __add__(self, other: CenterWidth) -> CenterWidth:
        if not isinstance(other, CenterWidth):
            return NotImplemented
        return CenterWidth(self.center + other.center, self.width + other.width)

    def scale(self, factor: float) -> CenterWidth:
        return CenterWidth(factor * self.center, abs(factor) * self.width)

    def __mul__(self, factor: float) -> CenterWidth:
        return self.scale(factor)

    __rmul__ = __mul__


class Preference(enum.Enum):
    """Outcome of comparing two uncertain costs against an ideal point."""

    FIRST = "first"
    SECOND = "second"
    TIE = "tie"


def distance_to_ideal(point: CenterWidth, ideal: CenterWidth) -> float:
    """Euclidean distance between two (center, width) points."""
    return math.hypot(point.center - ideal.center, point.width - ideal.width)


def prefer(p: CenterWidth, q: CenterWidth, ideal: CenterWidth,
           tol: float = TIE_TOLERANCE) -> Preference:
    """Prefer whichever cost lies closer to the ideal point.

    Distances within `tol` (absolute) of each other count as a tie.
    """
    dp = distance_to_ideal(p, ideal)
    dq = distance_to_ideal(q, ideal)
    if abs(dp - dq) <= tol:
        return Preference.TIE
    return Preference.FIRST if dp < dq else Preference.SECOND
