"""Similarity classes of triangles on the side-ratio chart and the angle chart."""

from .core import (
    DEFAULT_TOL,
    AngleKind,
    Angles,
    CanonicalSides,
    DegenerateTriangle,
    LegRelation,
    NonPositiveSide,
    ShapeClass,
    SideKind,
    Sides,
    Tolerance,
    angles_of_sides,
    canonicalize,
    classify_angles,
    classify_sides,
    make_angles,
    sides_of_angles,
    validate_triangle,
)
from .montecarlo import Chart, ProportionReport, SamplePlan, area_mc, estimate
from .sideratio import ChartPoint2, Locus2, classify_chart2, in_region2, region_area2, to_chart2
from .sigma import (
    ChartPoint3,
    Locus3,
    classify_chart3,
    median_point,
    medians_concurrency_check,
    on_sigma,
    psi,
    region_proportion3,
)

__version__ = "0.1.0"
