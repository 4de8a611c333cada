"""The angle chart: a class goes to its angle triple on the plane x + y + z = pi.

Valid triangles fill the open triangle ABC cut from the first octant. The
medial triangle PQR is where the plane meets the cube [0, pi/2]^3: its edges
carry the right triangles, its interior the acute ones, and the three corner
triangles APQ, CPR, BQR the obtuse ones.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ANGLE_SUM_TOL,
    DEFAULT_TOL,
    HALF_PI,
    AngleKind,
    Angles,
    LegRelation,
    ShapeClass,
    SideKind,
    Tolerance,
    classify_angles,
    permutations,
)

PI = math.pi


class OutOfSigma(ValueError):
    code = "OutOfSigma"


class OutOfRange(ValueError):
    code = "OutOfRange"


class EquilateralMedian(ValueError):
    """Raised by ``leg_relation_of_median`` at the centroid, where no leg relation exists."""

    code = "Equilateral"


@dataclass(frozen=True)
class ChartPoint3:
    x: float
    y: float
    z: float

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def canonical(self) -> "ChartPoint3":
        return ChartPoint3(*sorted(self))

    def orbit(self, tol: Tolerance = DEFAULT_TOL) -> list["ChartPoint3"]:
        """All distinct coordinate permutations (1, 3 or 6 points)."""
        return [ChartPoint3(*p) for p in permutations(self, tol.eps_class)]


class Locus3(str, enum.Enum):
    CENTROID = "Centroid"
    POINT_PRIME = "PointPrime"
    INTERIOR_PQR = "InteriorPQR"
    EDGE_PQ = "EdgePQ"
    EDGE_PR = "EdgePR"
    EDGE_QR = "EdgeQR"
    CORNER_APQ = "CornerAPQ"
    CORNER_CPR = "CornerCPR"
    CORNER_BQR = "CornerBQR"


class Region3(str, enum.Enum):
    TOTAL = "Total"
    ACUTE = "Acute"
    OBTUSE = "Obtuse"
    RIGHT = "Right"


LANDMARKS3 = {
    "A": (0.0, 0.0, PI),
    "B": (PI, 0.0, 0.0),
    "C": (0.0, PI, 0.0),
    "P": (0.0, HALF_PI, HALF_PI),
    "Q": (HALF_PI, 0.0, HALF_PI),
    "R": (HALF_PI, HALF_PI, 0.0),
    # right isosceles points, each opposite the vertex with the same letter
    "P'": (HALF_PI, PI / 4, PI / 4),
    "Q'": (PI / 4, HALF_PI, PI / 4),
    "R'": (PI / 4, PI / 4, HALF_PI),
    "Centroid": (PI / 3, PI / 3, PI / 3),
    # cube vertex and axis points: drawing aids with no triangle meaning
    "S": (HALF_PI, HALF_PI, HALF_PI),
    "D": (0.0, HALF_PI, 0.0),
    "E": (0.0, 0.0, HALF_PI),
    "F": (HALF_PI, 0.0, 0.0),
    "O": (0.0, 0.0, 0.0),
}

# area of the equilateral triangle ABC, side pi*sqrt(2)
AREA_ABC = math.sqrt(3) / 2 * PI ** 2

PROPORTIONS3 = {
    Region3.ACUTE: 0.25,
    Region3.OBTUSE: 0.75,
    Region3.RIGHT: 0.0,
}

PROPORTION_LABELS = {
    Region3.TOTAL: "1",
    Region3.ACUTE: "1/4",
    Region3.OBTUSE: "3/4",
    Region3.RIGHT: "0",
}

# largest coordinate index -> corner triangle (z big is the A corner)
_CORNERS = {0: Locus3.CORNER_BQR, 1: Locus3.CORNER_CPR, 2: Locus3.CORNER_APQ}
_EDGES = {0: Locus3.EDGE_QR, 1: Locus3.EDGE_PR, 2: Locus3.EDGE_PQ}


def psi(t: Angles) -> ChartPoint3:
    """Embed an angle triple in R^3, keeping its coordinate order."""
    return ChartPoint3(t.x, t.y, t.z)


def on_sigma(p, tol: Tolerance = DEFAULT_TOL) -> bool:
    x, y, z = p
    return bool(
        x > tol.eps_geom and y > tol.eps_geom and z > tol.eps_geom
        and abs(x + y + z - PI) <= ANGLE_SUM_TOL
    )


def classify_chart3(p, tol: Tolerance = DEFAULT_TOL) -> tuple[ShapeClass, Locus3]:
    """Shape class (via ``classify_angles``) and the named piece of the plane."""
    if not on_sigma(p, tol):
        raise OutOfSigma(f"{tuple(p)} is not an angle triple of a triangle")
    shape = classify_angles(p, tol)
    coords = tuple(p)
    top = max(range(3), key=coords.__getitem__)
    if shape.side_kind is SideKind.EQUILATERAL:
        return shape, Locus3.CENTROID
    if shape.angle_kind is AngleKind.RIGHT:
        if shape.side_kind is SideKind.ISOSCELES:
            return shape, Locus3.POINT_PRIME
        return shape, _EDGES[top]
    if shape.angle_kind is AngleKind.OBTUSE:
        return shape, _CORNERS[top]
    return shape, Locus3.INTERIOR_PQR


def inside_pqr(p) -> bool:
    """Strict interior of triangle PQR by barycentric signs.

    Independent of the max-angle test in ``classify_chart3``: the point is
    written in the frame P, Q, R and all three weights must be positive.
    """
    x, y, z = p
    # on the plane, p = wP*P + wQ*Q + wR*R with weights wP = 1 - 2x/pi, ...
    weights = (1 - 2 * x / PI, 1 - 2 * y / PI, 1 - 2 * z / PI)
    return all(w > 0 for w in weights)


def corner_of(p) -> str | None:
    """Name of the open corner triangle (APQ, CPR, BQR) containing p, if any.

    Uses barycentric coordinates of the corner triangles themselves.
    """
    x, y, z = p
    corners = {
        "APQ": (LANDMARKS3["A"], LANDMARKS3["P"], LANDMARKS3["Q"]),
        "CPR": (LANDMARKS3["C"], LANDMARKS3["P"], LANDMARKS3["R"]),
        "BQR": (LANDMARKS3["B"], LANDMARKS3["Q"], LANDMARKS3["R"]),
    }
    hits = [name for name, tri in corners.items() if _in_triangle_on_plane((x, y, z), tri)]
    if len(hits) > 1:
        raise AssertionError(f"corner triangles overlap at {p}")
    return hits[0] if hits else None


def _in_triangle_on_plane(p, tri) -> bool:
    a, b, c = (np.asarray(v, dtype=float) for v in tri)
    p = np.asarray(p, dtype=float)
    m = np.column_stack([b - a, c - a])
    (u, v), *_ = np.linalg.lstsq(m, p - a, rcond=None)
    return bool(u > 0 and v > 0 and u + v < 1)


def median_point(t: float) -> ChartPoint3:
    """Point t*A + (1 - t)*R on the median from A to R."""
    if not 0 < t < 1:
        raise OutOfRange(f"median parameter must lie in (0, 1), got {t}")
    leg = (1 - t) * HALF_PI
    return ChartPoint3(leg, leg, t * PI)


def leg_relation_of_median(t: float, tol: Tolerance = DEFAULT_TOL) -> LegRelation:
    if not 0 < t < 1:
        raise OutOfRange(f"median parameter must lie in (0, 1), got {t}")
    if abs(t - 1 / 3) <= tol.eps_class:
        raise EquilateralMedian("t = 1/3 is the equilateral class")
    # repeated angle (1 - t)*pi/2 is smaller than t*pi exactly when t > 1/3
    return LegRelation.LEGS_SHORTER if t > 1 / 3 else LegRelation.LEGS_LONGER


def region_proportion3(kind) -> float:
    kind = Region3(kind)
    if kind is Region3.TOTAL:
        return 1.0
    return PROPORTIONS3[kind]


def region_area3(kind) -> float:
    """Absolute area on the plane of the region of ``kind``."""
    return region_proportion3(kind) * AREA_ABC


def _line_intersection(p0, p1, q0, q1):
    # p0 + s(p1 - p0) = q0 + u(q1 - q0), least squares in R^3
    p0, p1, q0, q1 = (np.asarray(v, dtype=float) for v in (p0, p1, q0, q1))
    m = np.column_stack([p1 - p0, q0 - q1])
    (s, _), *_ = np.linalg.lstsq(m, q0 - p0, rcond=None)
    return tuple(float(v) for v in p0 + s * (p1 - p0))


def median_intersections():
    """Pairwise intersections of the medians AR, BP, CQ."""
    L = LANDMARKS3
    segs = {"AR": (L["A"], L["R"]), "BP": (L["B"], L["P"]), "CQ": (L["C"], L["Q"])}
    return {
        (m, n): _line_intersection(*segs[m], *segs[n])
        for m, n in (("AR", "BP"), ("BP", "CQ"), ("AR", "CQ"))
    }


def medians_concurrency_check(tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Common point of the three medians; raises if they are not concurrent."""
    pts = list(median_intersections().values())
    first = pts[0]
    for other in pts[1:]:
        if max(abs(u - v) for u, v in zip(first, other)) > tol.eps_geom:
            raise AssertionError(f"medians are not concurrent: {pts}")
    return first


# intrinsic frame: a point of the plane is A + u*(B - A) + v*(C - A)
def sigma_from_uv(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return u * PI, v * PI, (1 - u - v) * PI


def angle_kind_codes3(x, y, z, tol: Tolerance = DEFAULT_TOL):
    """Vectorized ``angle_kind_of_max``: 0 acute, 1 right, 2 obtuse."""
    largest = np.maximum(np.maximum(x, y), z)
    codes = np.where(largest < HALF_PI, 0, 2)
    return np.where(np.abs(largest - HALF_PI) <= tol.eps_class * HALF_PI, 1, codes)


def on_sigma_array(x, y, z, tol: Tolerance = DEFAULT_TOL):
    x, y, z = (np.asarray(v) for v in (x, y, z))
    return (x > tol.eps_geom) & (y > tol.eps_geom) & (z > tol.eps_geom)
