"""SVG renderings of both charts with matplotlib.

Every drawn element carries a stable ``gid`` (``region-acute``,
``region-obtuse``, ``unit-square``, ``triangle-ABC``, ``overlay``, ...) so the
output can be inspected programmatically. Dashed strokes mark boundary pieces
that are not images of triangles.
"""

from __future__ import annotations

import enum
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Polygon, Rectangle  # noqa: E402

from . import sideratio, sigma  # noqa: E402
from .montecarlo import Chart  # noqa: E402

MIN_SIZE = 64
# one SVG user unit per pixel
PT_PER_INCH = 72

RED = "#c0392b"
BLUE = "#1f4fbf"
ACUTE_FILL = "#9ecae1"
OBTUSE_FILL = "#fdae6b"

SVG_RC = {
    "svg.hashsalt": "trimoduli",
    "svg.fonttype": "none",
    "path.simplify": False,
    "font.size": 11,
}
SVG_METADATA = {"Date": None, "Creator": "trimoduli"}


class InvalidSpec(ValueError):
    code = "InvalidSpec"


class Projection(str, enum.Enum):
    BARYCENTRIC_2D = "barycentric"
    OBLIQUE_3D = "oblique"


@dataclass(frozen=True)
class RenderSpec:
    chart: Chart = Chart.SIDE_RATIO
    width: int = 800
    height: int = 800
    shade_regions: bool = True
    show_landmarks: bool = True
    overlay_points: tuple = field(default_factory=tuple)
    projection: Projection = Projection.BARYCENTRIC_2D

    def __post_init__(self):
        object.__setattr__(self, "chart", Chart(self.chart))
        object.__setattr__(self, "projection", Projection(self.projection))
        object.__setattr__(self, "overlay_points", tuple(tuple(map(float, p)) for p in self.overlay_points))
        if self.width < MIN_SIZE or self.height < MIN_SIZE:
            raise InvalidSpec(f"figure must be at least {MIN_SIZE}x{MIN_SIZE} pixels")
        want = 2 if self.chart is Chart.SIDE_RATIO else 3
        for p in self.overlay_points:
            if len(p) != want:
                raise InvalidSpec(f"overlay points on this chart need {want} coordinates, got {p}")


def _new_figure(spec):
    fig = Figure(figsize=(spec.width / PT_PER_INCH, spec.height / PT_PER_INCH), dpi=PT_PER_INCH)
    ax = fig.add_axes([0.04, 0.04, 0.92, 0.92])
    ax.set_aspect("equal")
    ax.set_axis_off()
    return fig, ax


def _arrow(ax, start, end, gid):
    ann = ax.annotate("", end, start, arrowprops={"arrowstyle": "->"})
    ann.arrow_patch.set_gid(gid)


def _label(ax, name, xy, offset=(6, 6), **kw):
    ax.annotate(name, xy, xytext=offset, textcoords="offset points", **kw)


def _draw_sideratio(ax, spec):
    L = sideratio.LANDMARKS2
    arc_x, arc_y = sideratio.arc_bd()
    if spec.shade_regions:
        obtuse = list(zip(arc_x, arc_y)) + [L["E"]]
        acute = [L["B"], L["C"]] + list(zip(arc_x[::-1], arc_y[::-1]))
        ax.add_patch(Polygon(obtuse, closed=True, facecolor=OBTUSE_FILL, edgecolor="none",
                             gid="region-obtuse", zorder=1))
        ax.add_patch(Polygon(acute, closed=True, facecolor=ACUTE_FILL, edgecolor="none",
                             gid="region-acute", zorder=1))
    # reference square for measuring areas off the drawing
    ax.add_patch(Rectangle((0, 0), 1, 1, fill=False, edgecolor="none", gid="unit-square"))

    _arrow(ax, (0, 0), (1.3, 0), "axis-x")
    _arrow(ax, (0, 0), (0, 1.3), "axis-y")
    ax.text(1.31, -0.03, "$x$")
    ax.text(-0.05, 1.31, "$y$")

    quarter = [math.pi * k / 256 for k in range(129)]
    ax.plot([math.cos(t) for t in quarter], [math.sin(t) for t in quarter],
            color="black", lw=1, gid="quarter-circle")
    ax.plot([1, 1], [0, 1], color="black", lw=1, gid="segment-AC")
    ax.plot([0, 0.5], [0, 0.5], color="black", lw=1, gid="segment-OE")
    ax.plot([0.5, 1], [0.5, 0], color="black", lw=1, ls="--", gid="segment-EA")
    ax.plot(arc_x, arc_y, color=RED, lw=1.5, gid="arc-BD")
    ax.plot([0, 1], [1, 1], color=RED, lw=2, gid="segment-BC")
    ax.plot([0.5, 1], [0.5, 1], color=RED, lw=2, gid="segment-EC")
    ax.plot([0, 0.5], [1, 0.5], color=RED, lw=2, ls="--", gid="segment-BE")

    if spec.show_landmarks:
        labels = {
            "A": "A(1,0)", "B": "B(0,1)", "C": "C(1,1)",
            "D": r"D($1/\sqrt{2}$,$1/\sqrt{2}$)", "E": "E(1/2,1/2)", "O": "O(0,0)",
        }
        offsets = {"A": (4, -14), "B": (-50, 2), "C": (6, 4), "D": (6, -12), "E": (-78, -2), "O": (-32, -14)}
        for name, xy in L.items():
            ax.plot(*xy, "o", color="black", ms=4, gid=f"landmark-{name}")
            _label(ax, labels[name], xy, offsets[name])

    ax.set_xlim(-0.25, 1.45)
    ax.set_ylim(-0.15, 1.45)


def _bary(p):
    """Area-preserving map of the plane x + y + z = pi onto R^2."""
    x, y, z = p
    side = math.pi * math.sqrt(2)
    # B bottom left, C bottom right, A on top
    bx, by = 0.0, 0.0
    cx, cy = side, 0.0
    axx, ayy = side / 2, side * math.sqrt(3) / 2
    return ((x * bx + y * cx + z * axx) / math.pi, (x * by + y * cy + z * ayy) / math.pi)


def _oblique(p):
    # x to the right, z up, y coming out toward the lower left
    x, y, z = p
    return (x - 0.5 * y, z - 0.35 * y)


def _draw_sigma(ax, spec):
    L = sigma.LANDMARKS3
    proj = _bary if spec.projection is Projection.BARYCENTRIC_2D else _oblique
    P = {k: proj(v) for k, v in L.items()}

    if spec.projection is Projection.OBLIQUE_3D:
        h = math.pi / 2
        corners = [(i * h, j * h, k * h) for i in (0, 1) for j in (0, 1) for k in (0, 1)]
        for u in corners:
            for v in corners:
                if u < v and sum(abs(a - b) for a, b in zip(u, v)) == h:
                    ax.plot(*zip(proj(u), proj(v)), color="black", lw=0.8, gid="cube-edge")
        for end, name in (((3.6, 0, 0), "x"), ((0, 3.6, 0), "y"), ((0, 0, 3.6), "z")):
            _arrow(ax, P["O"], proj(end), f"axis-{name}")
            ax.text(*proj(end), f"${name}$")

    if spec.shade_regions:
        ax.add_patch(Polygon([P["P"], P["Q"], P["R"]], closed=True, facecolor=ACUTE_FILL,
                             edgecolor="none", gid="region-acute", zorder=1))
        for corner in (("A", "P", "Q"), ("C", "P", "R"), ("B", "Q", "R")):
            ax.add_patch(Polygon([P[c] for c in corner], closed=True, facecolor=OBTUSE_FILL,
                                 edgecolor="none", gid=f"region-obtuse-{''.join(corner)}", zorder=1))

    ax.add_patch(Polygon([P["A"], P["B"], P["C"]], closed=True, fill=False, edgecolor=RED,
                         ls="--", lw=1.5, gid="triangle-ABC"))
    ax.add_patch(Polygon([P["P"], P["Q"], P["R"]], closed=True, fill=False, edgecolor=BLUE,
                         lw=1.5, gid="triangle-PQR"))
    if spec.projection is Projection.BARYCENTRIC_2D:
        for a, b in (("A", "R"), ("B", "P"), ("C", "Q")):
            ax.plot(*zip(P[a], P[b]), color="gray", lw=0.8, ls=":", gid=f"median-{a}{b}")

    if spec.show_landmarks:
        shown = ["A", "B", "C", "P", "Q", "R", "P'", "Q'", "R'", "Centroid"]
        if spec.projection is Projection.OBLIQUE_3D:
            shown += ["S", "D", "E", "F", "O"]
        for name in shown:
            ax.plot(*P[name], "o", color="black", ms=4, gid=f"landmark-{name}")
            _label(ax, name.replace("'", r"$^\prime$"), P[name], (5, 5))

    xs = [p[0] for p in P.values()]
    ys = [p[1] for p in P.values()]
    pad = 0.6
    ax.set_xlim(min(xs) - pad, max(xs) + pad)
    ax.set_ylim(min(ys) - pad, max(ys) + pad)
    return proj


def render(spec: RenderSpec) -> bytes:
    """Draw the chart described by ``spec`` and return the SVG document."""
    fig, ax = _new_figure(spec)
    if spec.chart is Chart.SIDE_RATIO:
        _draw_sideratio(ax, spec)
        proj = tuple
    else:
        proj = _draw_sigma(ax, spec)
    if spec.overlay_points:
        pts = [proj(p) for p in spec.overlay_points]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "x", color="black", ms=7, mew=1.5,
                ls="none", gid="overlay", zorder=5)
    caption = "Figure 1" if spec.chart is Chart.SIDE_RATIO else "Figure 2"
    fig.text(0.5, 0.01, caption, ha="center", va="bottom")
    buf = io.BytesIO()
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(buf, format="svg", metadata=SVG_METADATA)
    return buf.getvalue()


def write_svg(spec: RenderSpec, path) -> Path:
    data = render(spec)
    path = Path(path)
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}") from exc
    return path
