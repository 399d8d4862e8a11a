"""
Exact planar geometry over the rationals.

Points carry :class:`fractions.Fraction` coordinates and lines are stored in
canonical homogeneous integer form ``a*x + b*y + c = 0``, so equality of
geometric objects is plain equality of their fields. Nothing in this module
touches floating point.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Any, Optional, Sequence

from errors import IdenticalLinesError, IdenticalPointsError, InvalidCoordinateError

logger = logging.getLogger(__name__)


def as_rational(value: Any, *, name: str = "coordinate") -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidCoordinateError(f"{name} must be a rational like '3/2', got {value!r}") from exc
    if isinstance(value, float):
        raise InvalidCoordinateError(f"{name} must be exact (int, Fraction or 'p/q'); float is forbidden: {value!r}")
    raise InvalidCoordinateError(f"{name} must be int, Fraction or str, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p/q`` or a bare integer."""
    return str(value)


@dataclass(frozen=True, order=True)
class Point:
    """Immutable planar point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x, name="x"))
        object.__setattr__(self, "y", as_rational(self.y, name="y"))

    @property
    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


class Orientation(IntEnum):
    """Sign of the orientation determinant of an ordered triple."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def _sign(value: Fraction | int) -> int:
    return (value > 0) - (value < 0)


def orientation_determinant(p: Point, q: Point, r: Point) -> Fraction:
    """det of the matrix with rows (1, px, py), (1, qx, qy), (1, rx, ry)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Orientation of ``<p, q, r>``: +1 counter-clockwise, -1 clockwise, 0 collinear.

    Repeated points are collinear with anything and yield 0.
    """
    return Orientation(_sign(orientation_determinant(p, q, r)))


@dataclass(frozen=True, order=True)
class Line:
    """
    Line ``a*x + b*y + c = 0`` in canonical integer form.

    Canonical means ``(a, b) != (0, 0)``, ``gcd(|a|, |b|, |c|) == 1`` and the
    first nonzero of ``(a, b)`` is positive. Build lines with
    :meth:`from_coefficients`, :func:`line_through` or
    :meth:`from_slope_intercept` rather than the raw constructor.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise InvalidCoordinateError("a line needs (a, b) != (0, 0)")
        if (self.a, self.b, self.c) != _canonical_triple(self.a, self.b, self.c):
            raise InvalidCoordinateError(f"line coefficients ({self.a}, {self.b}, {self.c}) are not canonical")

    @classmethod
    def from_coefficients(cls, a: Any, b: Any, c: Any) -> "Line":
        """Canonical line from arbitrary rational coefficients."""
        fa, fb, fc = (as_rational(v, name="coefficient") for v in (a, b, c))
        scale = math.lcm(fa.denominator, fb.denominator, fc.denominator)
        ia, ib, ic = (int(v * scale) for v in (fa, fb, fc))
        if ia == 0 and ib == 0:
            raise InvalidCoordinateError("a line needs (a, b) != (0, 0)")
        return cls(*_canonical_triple(ia, ib, ic))

    @classmethod
    def from_slope_intercept(cls, m: Any, c: Any) -> "Line":
        """The line ``y = m*x + c``."""
        return cls.from_coefficients(as_rational(m, name="slope"), -1, as_rational(c, name="intercept"))

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def slope_intercept(self) -> Optional[tuple[Fraction, Fraction]]:
        """``(m, c)`` with ``y = m*x + c``, or None for vertical lines."""
        if self.is_vertical:
            return None
        return Fraction(-self.a, self.b), Fraction(-self.c, self.b)

    def direction(self) -> tuple[int, int]:
        """A direction vector of the line."""
        return self.b, -self.a

    def __str__(self) -> str:
        form = self.slope_intercept()
        if form is None:
            return f"x = {format_rational(Fraction(-self.c, self.a))}"
        m, c = form
        if m == 0:
            return f"y = {format_rational(c)}"
        sign = "-" if c < 0 else "+"
        return f"y = {format_rational(m)}*x {sign} {format_rational(abs(c))}"


def _canonical_triple(a: int, b: int, c: int) -> tuple[int, int, int]:
    g = math.gcd(a, b, c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return a, b, c


def line_through(p: Point, q: Point) -> Line:
    """The unique line through two distinct points."""
    if p == q:
        raise IdenticalPointsError(f"a line needs two distinct points, got {p} twice")
    a = q.y - p.y
    b = p.x - q.x
    c = -(a * p.x + b * p.y)
    return Line.from_coefficients(a, b, c)


def on_line(p: Point, line: Line) -> bool:
    """True iff ``p`` satisfies the line equation exactly."""
    return line.a * p.x + line.b * p.y + line.c == 0


def intersect(l1: Line, l2: Line) -> Optional[Point]:
    """Common point of two distinct lines, or None when they are parallel."""
    if l1 == l2:
        raise IdenticalLinesError(f"cannot intersect a line with itself: {l1}")
    if are_parallel(l1, l2):
        return None
    det = l1.a * l2.b - l2.a * l1.b
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l1.c * l2.a - l2.c * l1.a, det)
    return Point(x, y)


def are_parallel(l1: Line, l2: Line) -> bool:
    return l1.a * l2.b - l2.a * l1.b == 0


def collinear(points: Sequence[Point]) -> bool:
    """True iff every triple of ``points`` has orientation 0 (vacuous below 3)."""
    if len(points) <= 2:
        return True
    anchor = points[0]
    other = next((p for p in points[1:] if p != anchor), None)
    if other is None:
        return True
    return all(orientation(anchor, other, r) == Orientation.COLLINEAR for r in points)


def has_distinct_points(points: Sequence[Point]) -> bool:
    return len(set(points)) == len(points)
