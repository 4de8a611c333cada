"""Triangle similarity classes: validation, canonical form, classification.

A similarity class is represented by its canonical sides ``a <= b <= c = 1``
or by its angle triple summing to pi. All values here are immutable and the
functions are pure.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

EPS_CLASS = 1e-9
EPS_GEOM = 1e-12
ANGLE_SUM_TOL = 1e-12

HALF_PI = math.pi / 2


class TriangleError(ValueError):
    """Base class for invalid triangle input."""

    code = "TriangleError"


class NonPositiveSide(TriangleError):
    code = "NonPositiveSide"


class DegenerateTriangle(TriangleError):
    code = "DegenerateTriangle"


class InvalidAngles(TriangleError):
    code = "InvalidAngles"


class AngleKind(str, enum.Enum):
    ACUTE = "Acute"
    RIGHT = "Right"
    OBTUSE = "Obtuse"


class SideKind(str, enum.Enum):
    EQUILATERAL = "Equilateral"
    ISOSCELES = "Isosceles"
    SCALENE = "Scalene"


class LegRelation(str, enum.Enum):
    # the two equal sides are longer / shorter than the remaining side
    LEGS_LONGER = "LegsLonger"
    LEGS_SHORTER = "LegsShorter"


@dataclass(frozen=True)
class Tolerance:
    eps_class: float = EPS_CLASS
    eps_geom: float = EPS_GEOM

    def __post_init__(self):
        if not (self.eps_class > 0 and self.eps_geom > 0):
            raise ValueError("tolerances must be positive")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class ShapeClass:
    angle_kind: AngleKind
    side_kind: SideKind
    leg_relation: LegRelation | None = None

    def __post_init__(self):
        if self.side_kind is SideKind.EQUILATERAL and self.angle_kind is not AngleKind.ACUTE:
            raise ValueError("an equilateral triangle is acute")
        if (self.side_kind is SideKind.ISOSCELES) != (self.leg_relation is not None):
            raise ValueError("leg_relation is reported for isosceles triangles only")
        if (self.angle_kind is AngleKind.RIGHT and self.side_kind is SideKind.ISOSCELES
                and self.leg_relation is not LegRelation.LEGS_SHORTER):
            raise ValueError("the legs of a right isosceles triangle are shorter than the hypotenuse")

    def to_dict(self):
        return {
            "angle_kind": self.angle_kind.value,
            "side_kind": self.side_kind.value,
            "leg_relation": None if self.leg_relation is None else self.leg_relation.value,
        }


@dataclass(frozen=True)
class Sides:
    a: float
    b: float
    c: float

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def scaled(self, k: float) -> "Sides":
        return Sides(k * self.a, k * self.b, k * self.c)


@dataclass(frozen=True)
class CanonicalSides(Sides):
    """Sides sorted ascending with the longest scaled to exactly 1."""

    c: float = field(default=1.0)


@dataclass(frozen=True)
class Angles:
    x: float
    y: float
    z: float

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def sorted(self) -> "Angles":
        return Angles(*sorted(self))


def validate_triangle(a, b, c, tol: Tolerance = DEFAULT_TOL) -> Sides:
    """Return ``Sides(a, b, c)`` unchanged if they form a proper triangle.

    The degeneracy band is relative to the longest side, so the check does not
    depend on the unit of length.
    """
    vals = [float(v) for v in (a, b, c)]
    if not all(math.isfinite(v) and v > 0 for v in vals):
        raise NonPositiveSide(f"side lengths must be positive and finite, got {vals}")
    lo, mid, hi = sorted(vals)
    if lo + mid - hi <= tol.eps_geom * hi:
        raise DegenerateTriangle(
            f"sides {vals} violate the strict triangle inequality")
    return Sides(*vals)


def canonicalize(s: Sides) -> CanonicalSides:
    a, b, c = sorted(s)
    return CanonicalSides(a / c, b / c, 1.0)


def _normalized_angles(raw) -> Angles:
    total = sum(raw)
    scale = math.pi / total
    x, y, z = (w * scale for w in raw)
    # put the rounding residue on the largest angle
    z = math.pi - x - y
    return Angles(x, y, z)


def make_angles(x, y, z, tol: Tolerance = DEFAULT_TOL) -> Angles:
    """Validate an angle triple (radians) and renormalize its sum to pi.

    The sum may miss pi by a relative ``eps_class``; the result is sorted
    ascending.
    """
    vals = [float(v) for v in (x, y, z)]
    if not all(math.isfinite(v) and v > tol.eps_geom for v in vals):
        raise InvalidAngles(f"angles must be positive, got {vals}")
    if abs(sum(vals) - math.pi) > max(ANGLE_SUM_TOL, tol.eps_class * math.pi):
        raise InvalidAngles(f"angles {vals} do not sum to pi")
    return _normalized_angles(sorted(vals))


def _area4(a, b, c):
    # four times the area, via Heron in Kahan's cancellation-free ordering
    c, b, a = sorted((a, b, c))
    prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return math.sqrt(max(prod, 0.0))


def angles_of_sides(s: Sides) -> Angles:
    """Law of cosines, returned sorted so the angle opposite the longest side is last.

    Each angle is ``atan2(4K, v**2 + w**2 - u**2)``, the same quantity as the
    arccos form but well conditioned near 0 and pi.
    """
    a, b, c = sorted(s)
    k4 = _area4(a, b, c)
    raw = [
        math.atan2(k4, v * v + w * w - u * u)
        for u, v, w in ((a, b, c), (b, a, c), (c, a, b))
    ]
    return _normalized_angles(sorted(raw))


def sides_of_angles(t: Angles) -> CanonicalSides:
    x, y, z = sorted(t)
    # sin(z) = sin(x + y); the right side stays accurate when z is near pi
    sz = math.sin(x + y)
    return CanonicalSides(math.sin(x) / sz, math.sin(y) / sz, 1.0)


def _close(u, v, eps):
    return abs(u - v) <= eps * max(abs(u), abs(v))


def _side_pattern(u, v, w, eps):
    """Side kind and leg relation from three values sorted ascending.

    Works for sides and for angles alike: the larger angle faces the larger
    side, so a repeated top pair always means the legs are longer.
    """
    lo_eq = _close(u, v, eps)
    hi_eq = _close(v, w, eps)
    if lo_eq and hi_eq:
        return SideKind.EQUILATERAL, None
    if hi_eq:
        return SideKind.ISOSCELES, LegRelation.LEGS_LONGER
    if lo_eq:
        return SideKind.ISOSCELES, LegRelation.LEGS_SHORTER
    return SideKind.SCALENE, None


def _settle(angle_kind, side_kind, leg):
    # longer legs force two base angles below pi/2, so such a triangle is
    # acute even when a thin apex puts it inside the right-angle band
    if side_kind is SideKind.EQUILATERAL or leg is LegRelation.LEGS_LONGER:
        angle_kind = AngleKind.ACUTE
    return ShapeClass(angle_kind, side_kind, leg)


def classify_sides(s: Sides, tol: Tolerance = DEFAULT_TOL) -> ShapeClass:
    a, b, c = sorted(s)
    gap = a * a + b * b - c * c
    if abs(gap) <= tol.eps_class * c * c:
        angle_kind = AngleKind.RIGHT
    elif gap > 0:
        angle_kind = AngleKind.ACUTE
    else:
        angle_kind = AngleKind.OBTUSE
    return _settle(angle_kind, *_side_pattern(a, b, c, tol.eps_class))


def angle_kind_of_max(largest: float, tol: Tolerance = DEFAULT_TOL) -> AngleKind:
    # the eps_class band around pi/2 belongs to Right
    if abs(largest - HALF_PI) <= tol.eps_class * HALF_PI:
        return AngleKind.RIGHT
    return AngleKind.ACUTE if largest < HALF_PI else AngleKind.OBTUSE


def classify_angles(t, tol: Tolerance = DEFAULT_TOL) -> ShapeClass:
    """Classify from an angle triple; equal angles face equal sides."""
    x, y, z = sorted(t)
    angle_kind = angle_kind_of_max(z, tol)
    return _settle(angle_kind, *_side_pattern(x, y, z, tol.eps_class))


def permutations(values, eps: float = 0.0):
    """Distinct coordinate permutations in lexicographic index order.

    Permutations equal coordinatewise within relative ``eps`` count once.
    """
    out = []
    for perm in itertools.permutations(tuple(values)):
        if not any(all(_close(u, v, eps) for u, v in zip(perm, seen)) for seen in out):
            out.append(perm)
    return out


def boundary_distance_sides(s: Sides) -> float:
    """Relative distance of a triangle to the nearest right/isosceles boundary."""
    a, b, c = sorted(s)
    return min(
        abs(a * a + b * b - c * c) / (c * c),
        (b - a) / b,
        (c - b) / c,
    )
