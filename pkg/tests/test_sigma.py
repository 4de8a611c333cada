import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimoduli.core import (
    AngleKind,
    Angles,
    LegRelation,
    ShapeClass,
    SideKind,
    Sides,
    angles_of_sides,
    canonicalize,
    classify_angles,
)
from trimoduli.sigma import (
    AREA_ABC,
    LANDMARKS3,
    ChartPoint3,
    EquilateralMedian,
    Locus3,
    OutOfRange,
    OutOfSigma,
    angle_kind_codes3,
    classify_chart3,
    corner_of,
    inside_pqr,
    leg_relation_of_median,
    median_intersections,
    median_point,
    medians_concurrency_check,
    on_sigma,
    psi,
    region_area3,
    region_proportion3,
    sigma_from_uv,
)

PI = math.pi
RIGHT_ISO = ShapeClass(AngleKind.RIGHT, SideKind.ISOSCELES, LegRelation.LEGS_SHORTER)
OBTUSE_ISO = ShapeClass(AngleKind.OBTUSE, SideKind.ISOSCELES, LegRelation.LEGS_SHORTER)


def tri_area(a, b, c):
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    return np.linalg.norm(np.cross(b - a, c - a)) / 2


def test_psi_examples():
    assert tuple(psi(Angles(PI / 3, PI / 3, PI / 3))) == (PI / 3,) * 3
    p = psi(Angles(PI / 4, PI / 4, PI / 2))
    assert tuple(p) == (PI / 4, PI / 4, PI / 2)
    assert len(p.orbit()) == 3
    assert {tuple(q) for q in p.orbit()} == {LANDMARKS3[k] for k in ("P'", "Q'", "R'")}
    t = Angles(0.5, 1.0, PI - 1.5)
    assert tuple(psi(t)) == (0.5, 1.0, PI - 1.5)
    assert len(psi(t).orbit()) == 6
    assert len(psi(Angles(PI / 3, PI / 3, PI / 3)).orbit()) == 1


def test_canonical_is_sorted():
    assert tuple(ChartPoint3(2.0, 0.5, PI - 2.5).canonical()) == (0.5, PI - 2.5, 2.0)


@pytest.mark.parametrize("p, expected", [
    ((PI / 3, PI / 3, PI / 3), True),
    ((0, PI / 2, PI / 2), False),
    ((1, 1, 1), False),
    ((PI, 0, 0), False),
    ((PI / 2, PI / 2, 0), False),
    ((PI / 4, PI / 4, PI / 2), True),
])
def test_on_sigma(p, expected):
    assert on_sigma(p) is expected


def test_named_exclusions():
    for name in ("A", "B", "C", "P", "Q", "R", "S", "D", "E", "F", "O"):
        assert not on_sigma(LANDMARKS3[name]), name
    for name in ("P'", "Q'", "R'", "Centroid"):
        assert on_sigma(LANDMARKS3[name]), name


def test_classify_chart3_examples():
    assert classify_chart3((PI / 4, PI / 4, PI / 2)) == (RIGHT_ISO, Locus3.POINT_PRIME)
    assert classify_chart3((PI / 3, PI / 3, PI / 3)) == (
        ShapeClass(AngleKind.ACUTE, SideKind.EQUILATERAL), Locus3.CENTROID)
    p = (PI / 8, PI / 8, 3 * PI / 4)
    assert classify_chart3(p) == (OBTUSE_ISO, Locus3.CORNER_APQ)
    assert corner_of(p) == "APQ"


def test_classify_chart3_rejects_off_plane():
    with pytest.raises(OutOfSigma):
        classify_chart3((1, 1, 1))
    with pytest.raises(OutOfSigma):
        classify_chart3(LANDMARKS3["P"])


@pytest.mark.parametrize("p, locus", [
    ((PI / 2, 0.5, PI / 2 - 0.5), Locus3.EDGE_QR),
    ((0.5, PI / 2, PI / 2 - 0.5), Locus3.EDGE_PR),
    ((0.5, PI / 2 - 0.5, PI / 2), Locus3.EDGE_PQ),
    ((2.0, 0.5, PI - 2.5), Locus3.CORNER_BQR),
    ((0.5, 2.0, PI - 2.5), Locus3.CORNER_CPR),
    ((0.9, 1.0, PI - 1.9), Locus3.INTERIOR_PQR),
])
def test_classify_chart3_loci(p, locus):
    assert classify_chart3(p)[1] is locus


def test_edges_lie_on_pqr():
    # an edge point is a convex combination of the two named vertices
    L = LANDMARKS3
    for tag, (u, v) in {Locus3.EDGE_PQ: ("P", "Q"), Locus3.EDGE_PR: ("P", "R"), Locus3.EDGE_QR: ("Q", "R")}.items():
        mid = tuple(0.3 * a + 0.7 * b for a, b in zip(L[u], L[v]))
        assert classify_chart3(mid)[1] is tag


def test_prime_points_are_right_isosceles():
    for name in ("P'", "Q'", "R'"):
        assert classify_chart3(LANDMARKS3[name]) == (RIGHT_ISO, Locus3.POINT_PRIME)


def test_median_point_examples():
    assert tuple(median_point(1 / 3)) == pytest.approx((PI / 3,) * 3, abs=1e-15)
    assert tuple(median_point(0.5)) == (PI / 4, PI / 4, PI / 2)
    p = median_point(0.75)
    assert tuple(p) == pytest.approx((PI / 8, PI / 8, 3 * PI / 4), abs=1e-15)
    assert classify_chart3(p)[0].angle_kind is AngleKind.OBTUSE
    for bad in (0, 1, -0.1, 1.5):
        with pytest.raises(OutOfRange):
            median_point(bad)


def test_median_point_is_on_segment_ar():
    A, R = np.array(LANDMARKS3["A"]), np.array(LANDMARKS3["R"])
    for t in (0.1, 0.4, 0.9):
        assert np.allclose(tuple(median_point(t)), t * A + (1 - t) * R, atol=1e-15)


def test_leg_relation_of_median():
    assert leg_relation_of_median(0.6) is LegRelation.LEGS_SHORTER
    assert leg_relation_of_median(0.1) is LegRelation.LEGS_LONGER
    with pytest.raises(EquilateralMedian):
        leg_relation_of_median(1 / 3)
    with pytest.raises(OutOfRange):
        leg_relation_of_median(1.0)
    # agrees with classifying the point itself
    for t in (0.05, 0.2, 0.34, 0.5, 0.7, 0.95):
        assert classify_chart3(median_point(t))[0].leg_relation is leg_relation_of_median(t)


def test_proportions_and_areas():
    assert region_proportion3("Obtuse") == 0.75
    assert region_proportion3("Acute") == 0.25
    assert region_proportion3("Right") == 0
    assert sum(region_proportion3(k) for k in ("Acute", "Obtuse", "Right")) == 1
    L = LANDMARKS3
    assert tri_area(L["A"], L["B"], L["C"]) == pytest.approx(AREA_ABC, rel=1e-14)
    assert tri_area(L["P"], L["Q"], L["R"]) == pytest.approx(region_area3("Acute"), rel=1e-14)
    corners = sum(tri_area(L[a], L[b], L[c]) for a, b, c in (("A", "P", "Q"), ("C", "P", "R"), ("B", "Q", "R")))
    assert corners == pytest.approx(region_area3("Obtuse"), rel=1e-14)


def test_medians_concurrent():
    centroid = medians_concurrency_check()
    assert max(abs(u - PI / 3) for u in centroid) <= 1e-12
    for pair, point in median_intersections().items():
        assert max(abs(u - PI / 3) for u in point) <= 1e-12, pair


def test_intrinsic_frame_preserves_area():
    # |d(x,y,z)/d(u,v)| spans a parallelogram of twice ABC's area
    x0 = np.array(sigma_from_uv(0, 0), dtype=float)
    xu = np.array(sigma_from_uv(1, 0), dtype=float) - x0
    xv = np.array(sigma_from_uv(0, 1), dtype=float) - x0
    assert np.linalg.norm(np.cross(xu, xv)) == pytest.approx(2 * AREA_ABC, rel=1e-14)


def random_sigma(rng, n):
    u = np.sort(rng.random((n, 2)), axis=1)
    return np.column_stack([u[:, 0], u[:, 1] - u[:, 0], 1 - u[:, 1]]) * PI


def test_cube_equivalence_and_corner_partition():
    rng = np.random.default_rng(7)
    pts = random_sigma(rng, 100_000)
    codes = angle_kind_codes3(pts[:, 0], pts[:, 1], pts[:, 2])
    cube = np.all(pts < PI / 2, axis=1)
    assert np.array_equal(codes == 0, cube)
    assert all(inside_pqr(p) == (code == 0) for p, code in zip(pts, codes))
    # corner lookup solves a small least-squares problem per point; subsample
    for p, code in zip(pts[:3000], codes[:3000]):
        if code == 2:
            corner = corner_of(p)
            assert corner is not None
            assert classify_chart3(tuple(p))[1].value == "Corner" + corner
        else:
            assert corner_of(p) is None


def test_vector_codes_match_scalar():
    rng = np.random.default_rng(8)
    names = {0: AngleKind.ACUTE, 1: AngleKind.RIGHT, 2: AngleKind.OBTUSE}
    pts = random_sigma(rng, 3000)
    codes = angle_kind_codes3(pts[:, 0], pts[:, 1], pts[:, 2])
    for p, code in zip(pts, codes):
        assert classify_angles(p).angle_kind is names[int(code)]


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-6, max_value=1 - 1e-6))
def test_median_locus_never_scalene(t):
    shape, _ = classify_chart3(median_point(t))
    assert shape.side_kind is not SideKind.SCALENE


@settings(max_examples=200, deadline=None)
@given(st.tuples(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0.01, 1)),
       st.sampled_from([1e-3, 2.0, 1e4]))
def test_psi_constant_on_classes(ab_frac, k):
    a, b, frac = ab_frac
    lo, hi = abs(a - b), a + b
    c = lo + (hi - lo) * min(max(frac, 1e-3), 1 - 1e-3)
    s = Sides(a, b, c)
    p = psi(angles_of_sides(canonicalize(s)))
    q = psi(angles_of_sides(canonicalize(s.scaled(k))))
    assert tuple(p) == pytest.approx(tuple(q), abs=1e-12)
