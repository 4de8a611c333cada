"""Command line: ``trimoduli {classify,measure,sample,plot}``.

Every command prints one JSON document on stdout. Exit codes: 0 success,
1 failed statistical check (``sample``), 2 invalid input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys

from . import core, sideratio, sigma
from .figures import InvalidSpec, RenderSpec, write_svg
from .montecarlo import Chart, SamplePlan, estimate, MAX_SEED

EXIT_OK = 0
EXIT_STAT_FAIL = 1
EXIT_INVALID = 2

SEED_ENV = "TRIMODULI_SEED"


class UsageError(Exception):
    code = "UsageError"


def dumps(doc) -> str:
    """Canonical serialization: sorted keys, shortest round-trip floats."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def error_doc(exc) -> dict:
    return {"error": {"code": getattr(exc, "code", type(exc).__name__), "message": str(exc)}}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _tolerance(args) -> core.Tolerance:
    return core.Tolerance(eps_class=args.eps_class, eps_geom=args.eps_geom)


def _triple(values):
    return [float(v) for v in values]


def classify_doc(values, mode: str, tol: core.Tolerance = core.DEFAULT_TOL) -> dict:
    """Everything known about one triangle; ``mode`` is sides, radians or degrees."""
    if mode == "sides":
        sides = core.canonicalize(core.validate_triangle(*values, tol=tol))
        angles = core.angles_of_sides(sides)
    else:
        rad = [math.radians(v) for v in values] if mode == "degrees" else list(values)
        angles = core.make_angles(*rad, tol=tol)
        sides = core.sides_of_angles(angles)
    # both charts must tell the same story
    shape2, locus2 = sideratio.classify_chart2(sideratio.to_chart2(sides), tol)
    point3 = sigma.psi(angles)
    shape3, locus3 = sigma.classify_chart3(point3, tol)
    shape = core.classify_sides(sides, tol)
    if not (shape == shape2 and shape.angle_kind == shape3.angle_kind
            and shape.side_kind == shape3.side_kind):
        raise AssertionError(f"charts disagree on {values}: {shape}, {shape3}")
    p2 = sideratio.to_chart2(sides)
    return {
        "input": {"mode": mode, "values": _triple(values)},
        "canonical_sides": {"a": sides.a, "b": sides.b, "c": sides.c},
        "angles": {"x": angles.x, "y": angles.y, "z": angles.z},
        "chart2": {"x": p2.x, "y": p2.y, "locus": locus2.value},
        "chart3": {
            "point": list(point3),
            "orbit": [list(q) for q in point3.orbit()],
            "locus": locus3.value,
        },
        "class": shape.to_dict(),
    }


def measure_doc(chart) -> dict:
    chart = Chart(chart)
    if chart is Chart.SIDE_RATIO:
        kinds = list(sideratio.Region2)
        frac_labels = {"Total": "1", "Acute": "(4-pi)/2", "Obtuse": "(pi-2)/2", "Right": "0"}
        return {
            "chart": chart.value,
            "areas": {
                k.value.lower(): {"value": sideratio.region_area2(k), "label": sideratio.AREA_LABELS[k]}
                for k in kinds
            },
            "fractions": {
                k.value.lower(): {"value": sideratio.region_fraction2(k), "label": frac_labels[k.value]}
                for k in kinds
            },
        }
    kinds = list(sigma.Region3)
    area_labels = {"Total": "sqrt(3)/2*pi^2", "Acute": "sqrt(3)/8*pi^2",
                   "Obtuse": "3*sqrt(3)/8*pi^2", "Right": "0"}
    return {
        "chart": chart.value,
        "proportions": {
            k.value.lower(): {"value": sigma.region_proportion3(k), "label": sigma.PROPORTION_LABELS[k]}
            for k in kinds
        },
        "areas": {
            k.value.lower(): {"value": sigma.region_area3(k), "label": area_labels[k.value]}
            for k in kinds
        },
    }


def _resolve_seed(seed):
    if seed is None:
        seed = os.environ.get(SEED_ENV, "0")
    try:
        seed = int(seed)
    except ValueError:
        raise UsageError(f"seed must be an integer, got {seed!r}") from None
    if not 0 <= seed <= MAX_SEED:
        raise UsageError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trimoduli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--eps-class", type=float, default=core.EPS_CLASS)
        p.add_argument("--eps-geom", type=float, default=core.EPS_GEOM)
        p.add_argument("--json", action="store_true", default=True,
                       help="emit JSON (the only output format)")

    p = sub.add_parser("classify", help="classify one triangle and place it on both charts")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--sides", nargs=3, type=float, metavar=("A", "B", "C"))
    what.add_argument("--angles", nargs=3, type=float, metavar=("X", "Y", "Z"))
    p.add_argument("--degrees", action="store_true", help="read --angles in degrees")
    common(p)

    p = sub.add_parser("measure", help="exact class areas and proportions")
    p.add_argument("--chart", choices=[c.value for c in Chart], required=True)
    common(p)

    p = sub.add_parser("sample", help="Monte Carlo check of the class proportions")
    p.add_argument("--chart", choices=[c.value for c in Chart], required=True)
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--seed", default=None, help=f"defaults to ${SEED_ENV}, then 0")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="also draw the chart with the first samples overlaid")
    p.add_argument("--overlay", type=int, default=500, help="number of samples drawn with --out")
    common(p)

    p = sub.add_parser("plot", help="render a chart to SVG")
    p.add_argument("--chart", choices=[c.value for c in Chart], required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=800)
    p.add_argument("--projection", choices=["barycentric", "oblique"], default="barycentric")
    p.add_argument("--shade", action="store_true")
    p.add_argument("--no-landmarks", action="store_true")
    p.add_argument("--point", nargs="+", type=float, action="append", default=[],
                   help="overlay a chart point (repeatable)")
    common(p)
    return parser


def _cmd_classify(args):
    if args.sides is not None:
        doc = classify_doc(args.sides, "sides", _tolerance(args))
    else:
        doc = classify_doc(args.angles, "degrees" if args.degrees else "radians", _tolerance(args))
    return doc, EXIT_OK


def _cmd_measure(args):
    return measure_doc(args.chart), EXIT_OK


def _cmd_sample(args):
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    plan = SamplePlan(Chart(args.chart), args.n, _resolve_seed(args.seed), _tolerance(args))
    report = estimate(plan, workers=args.workers)
    doc = report.to_dict()
    if args.out:
        from .montecarlo import sample_dhar_sinha_array, sample_sigma_array

        k = max(1, min(args.overlay, plan.n))
        draw = sample_sigma_array if plan.chart is Chart.ANGLE_SIGMA else sample_dhar_sinha_array
        pts = draw(plan.seed, k, plan.tol)
        spec = RenderSpec(chart=plan.chart, shade_regions=True, overlay_points=[tuple(p) for p in pts])
        doc["figure"] = _figure_doc(write_svg(spec, args.out))
    return doc, EXIT_OK if report.all_passed else EXIT_STAT_FAIL


def _figure_doc(path):
    data = path.read_bytes()
    return {"path": str(path), "bytes": len(data), "sha256": hashlib.sha256(data).hexdigest()}


def _cmd_plot(args):
    spec = RenderSpec(
        chart=Chart(args.chart),
        width=args.width,
        height=args.height,
        shade_regions=args.shade,
        show_landmarks=not args.no_landmarks,
        overlay_points=[tuple(p) for p in args.point],
        projection=args.projection,
    )
    doc = {"chart": spec.chart.value, "projection": spec.projection.value}
    doc.update(_figure_doc(write_svg(spec, args.out)))
    return doc, EXIT_OK


COMMANDS = {
    "classify": _cmd_classify,
    "measure": _cmd_measure,
    "sample": _cmd_sample,
    "plot": _cmd_plot,
}

INPUT_ERRORS = (
    UsageError,
    core.TriangleError,
    sideratio.OutOfRegion,
    sigma.OutOfSigma,
    InvalidSpec,
    ValueError,
    OSError,
)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        doc, code = COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        doc, code = error_doc(exc), EXIT_INVALID
    stdout.write(dumps(doc))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
