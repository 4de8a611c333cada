"""The side-ratio chart: a class with sides a <= b <= c goes to (a/c, b/c).

The image is the triangle with vertices B(0, 1), C(1, 1), E(1/2, 1/2) minus
the open edge BE. The unit-circle arc from B to D splits it into the acute
part (above the arc) and the obtuse part (below).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    AngleKind,
    CanonicalSides,
    ShapeClass,
    SideKind,
    Tolerance,
    classify_sides,
)


class OutOfRegion(ValueError):
    code = "OutOfRegion"


@dataclass(frozen=True)
class ChartPoint2:
    x: float
    y: float

    def __iter__(self):
        return iter((self.x, self.y))


class Locus2(str, enum.Enum):
    INTERIOR_ACUTE = "InteriorAcute"
    INTERIOR_OBTUSE = "InteriorObtuse"
    ARC_BD = "ArcBD"
    SEGMENT_BC = "SegmentBC"
    SEGMENT_CD = "SegmentCD"
    SEGMENT_DE = "SegmentDE"
    POINT_C = "PointC"
    POINT_D = "PointD"


class Region2(str, enum.Enum):
    TOTAL = "Total"
    ACUTE = "Acute"
    OBTUSE = "Obtuse"
    RIGHT = "Right"


_R = 1 / math.sqrt(2)

LANDMARKS2 = {
    "A": (1.0, 0.0),
    "B": (0.0, 1.0),
    "C": (1.0, 1.0),
    "D": (_R, _R),
    "E": (0.5, 0.5),
    "O": (0.0, 0.0),
}

# exact closed forms; Total is the shoelace area of B, C, E
AREA_TOTAL = 0.25
AREA_ACUTE = (4 - math.pi) / 8
AREA_OBTUSE = (math.pi - 2) / 8

AREA_LABELS = {
    Region2.TOTAL: "1/4",
    Region2.ACUTE: "(4-pi)/8",
    Region2.OBTUSE: "(pi-2)/8",
    Region2.RIGHT: "0",
}


def to_chart2(s: CanonicalSides) -> ChartPoint2:
    return ChartPoint2(s.a / s.c, s.b / s.c)


def in_region2(p, tol: Tolerance = DEFAULT_TOL) -> bool:
    x, y = p
    return bool(0 < x <= 1 and x <= y <= 1 and x + y > 1 + tol.eps_geom)


def in_region2_array(x, y, tol: Tolerance = DEFAULT_TOL):
    """Vectorized ``in_region2`` over coordinate arrays."""
    x = np.asarray(x)
    y = np.asarray(y)
    return (x > 0) & (x <= 1) & (x <= y) & (y <= 1) & (x + y > 1 + tol.eps_geom)


def canonical_triangle_of_chart2(p, tol: Tolerance = DEFAULT_TOL) -> CanonicalSides:
    if not in_region2(p, tol):
        raise OutOfRegion(f"{tuple(p)} is not the image of a triangle")
    x, y = p
    return CanonicalSides(float(x), float(y), 1.0)


def classify_chart2(p, tol: Tolerance = DEFAULT_TOL) -> tuple[ShapeClass, Locus2]:
    """Shape class of the triangle (x, y, 1) and the named piece of the chart it sits on."""
    s = canonical_triangle_of_chart2(p, tol)
    shape = classify_sides(s, tol)
    if shape.side_kind is SideKind.EQUILATERAL:
        return shape, Locus2.POINT_C
    if shape.angle_kind is AngleKind.RIGHT:
        if shape.side_kind is SideKind.ISOSCELES:
            return shape, Locus2.POINT_D
        return shape, Locus2.ARC_BD
    if shape.side_kind is SideKind.ISOSCELES:
        # y = 1 is BC; x = y is CD above the arc, DE below it
        if math.isclose(s.b, 1.0, rel_tol=tol.eps_class):
            return shape, Locus2.SEGMENT_BC
        if shape.angle_kind is AngleKind.ACUTE:
            return shape, Locus2.SEGMENT_CD
        return shape, Locus2.SEGMENT_DE
    if shape.angle_kind is AngleKind.ACUTE:
        return shape, Locus2.INTERIOR_ACUTE
    return shape, Locus2.INTERIOR_OBTUSE


def angle_kind_codes2(x, y, tol: Tolerance = DEFAULT_TOL):
    """Vectorized angle kind for chart points: 0 acute, 1 right, 2 obtuse.

    Same thresholds as ``classify_sides`` applied to (x, y, 1).
    """
    gap = np.asarray(x) ** 2 + np.asarray(y) ** 2 - 1.0
    codes = np.where(gap > 0, 0, 2)
    return np.where(np.abs(gap) <= tol.eps_class, 1, codes)


def region_area2(kind) -> float:
    kind = Region2(kind)
    return {
        Region2.TOTAL: AREA_TOTAL,
        Region2.ACUTE: AREA_ACUTE,
        Region2.OBTUSE: AREA_OBTUSE,
        Region2.RIGHT: 0.0,
    }[kind]


def region_fraction2(kind) -> float:
    """Share of the chart region occupied by ``kind``."""
    return region_area2(kind) / AREA_TOTAL


def arc_bd(num: int = 129):
    """Points along the unit circle from B(0, 1) down to D."""
    theta = np.linspace(math.pi / 2, math.pi / 4, num)
    return np.cos(theta), np.sin(theta)
