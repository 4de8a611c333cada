"""Seeded Monte Carlo estimates of class proportions on both charts.

Random numbers come from numpy's PCG64. The sample index range is cut into
chunks of ``CHUNK`` samples; chunk ``i`` of a run seeded with ``seed`` draws
from ``PCG64(SeedSequence([seed, i]))``. Results therefore depend only on
``(seed, n)``, never on how many workers process the chunks.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import sideratio, sigma
from .core import DEFAULT_TOL, Angles, Tolerance

CHUNK = 1 << 16
MAX_SEED = (1 << 64) - 1
SIGMA_LEVEL = 3.0
# the right class has measure zero; its count is held to this share of n
RIGHT_CEILING = 1e-4

KINDS = ("acute", "right", "obtuse")


class Chart(str, enum.Enum):
    SIDE_RATIO = "sideratio"
    ANGLE_SIGMA = "sigma"


@dataclass(frozen=True)
class SamplePlan:
    chart: Chart
    n: int
    seed: int
    tol: Tolerance = field(default=DEFAULT_TOL)

    def __post_init__(self):
        object.__setattr__(self, "chart", Chart(self.chart))
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"sample count must be a positive integer, got {self.n}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class ProportionReport:
    chart: Chart
    n: int
    seed: int
    counts: dict
    fractions: dict
    exact: dict
    half_widths: dict
    passed: dict

    @property
    def all_passed(self) -> bool:
        return all(self.passed.values())

    def to_dict(self):
        return {
            "chart": self.chart.value,
            "n": self.n,
            "seed": self.seed,
            "counts": dict(self.counts),
            "fractions": dict(self.fractions),
            "exact": dict(self.exact),
            "half_widths": dict(self.half_widths),
            "passed": dict(self.passed),
            "all_passed": self.all_passed,
        }


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def _chunks(n):
    start = 0
    index = 0
    while start < n:
        size = min(CHUNK, n - start)
        yield index, size
        start += size
        index += 1


def _map_chunks(func, n, workers):
    jobs = list(_chunks(n))
    if workers is None or workers <= 1:
        return [func(i, size) for i, size in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map keeps index order for the reduction
        return list(pool.map(lambda job: func(*job), jobs))


def _sigma_chunk(seed, index, size, tol):
    rng = chunk_rng(seed, index)
    out = np.empty((0, 3))
    while len(out) < size:
        u = np.sort(rng.random((size - len(out), 2)), axis=1)
        pts = np.column_stack([u[:, 0], u[:, 1] - u[:, 0], 1.0 - u[:, 1]]) * math.pi
        keep = np.all(pts > tol.eps_geom, axis=1)
        out = np.concatenate([out, pts[keep]])
    return out


def _dhar_sinha_chunk(seed, index, size, tol):
    rng = chunk_rng(seed, index)
    out = np.empty((0, 2))
    while len(out) < size:
        need = size - len(out)
        # acceptance is 1/4; overdraw so one round usually suffices
        cand = rng.random((4 * need + 64, 2))
        keep = sideratio.in_region2_array(cand[:, 0], cand[:, 1], tol)
        out = np.concatenate([out, cand[keep][:need]])
    return out


def sample_sigma_array(seed: int, n: int, tol: Tolerance = DEFAULT_TOL, workers=None):
    """``(n, 3)`` array of uniform points on the open triangle ABC."""
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = _map_chunks(lambda i, size: _sigma_chunk(seed, i, size, tol), n, workers)
    return np.concatenate(parts)


def sample_dhar_sinha_array(seed: int, n: int, tol: Tolerance = DEFAULT_TOL, workers=None):
    """``(n, 2)`` array of uniform points on the side-ratio region."""
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = _map_chunks(lambda i, size: _dhar_sinha_chunk(seed, i, size, tol), n, workers)
    return np.concatenate(parts)


def sample_sigma(seed: int, n: int, tol: Tolerance = DEFAULT_TOL) -> list[Angles]:
    return [Angles(*map(float, row)) for row in sample_sigma_array(seed, n, tol)]


def sample_dhar_sinha(seed: int, n: int, tol: Tolerance = DEFAULT_TOL) -> list[sideratio.ChartPoint2]:
    return [sideratio.ChartPoint2(*map(float, row)) for row in sample_dhar_sinha_array(seed, n, tol)]


def exact_fractions(chart) -> dict:
    chart = Chart(chart)
    if chart is Chart.ANGLE_SIGMA:
        f = sigma.region_proportion3
    else:
        f = sideratio.region_fraction2
    return {kind: f(kind.capitalize()) for kind in KINDS}


def _tally(codes):
    return np.bincount(codes, minlength=3)[:3]


def estimate(plan: SamplePlan, workers=None) -> ProportionReport:
    """Classify ``plan.n`` uniform chart samples and compare with the exact shares."""
    seed, tol = plan.seed, plan.tol
    if plan.chart is Chart.ANGLE_SIGMA:
        def work(i, size):
            pts = _sigma_chunk(seed, i, size, tol)
            return _tally(sigma.angle_kind_codes3(pts[:, 0], pts[:, 1], pts[:, 2], tol))
    else:
        def work(i, size):
            pts = _dhar_sinha_chunk(seed, i, size, tol)
            return _tally(sideratio.angle_kind_codes2(pts[:, 0], pts[:, 1], tol))

    total = np.zeros(3, dtype=np.int64)
    for part in _map_chunks(work, plan.n, workers):
        total += part
    counts = {k: int(c) for k, c in zip(KINDS, total)}
    return _report(plan, counts)


def binomial_half_width(p: float, n: int, level: float = SIGMA_LEVEL) -> float:
    return level * math.sqrt(p * (1 - p) / n)


def _report(plan, counts):
    n = plan.n
    exact = exact_fractions(plan.chart)
    fractions = {k: counts[k] / n for k in KINDS}
    half = {k: binomial_half_width(exact[k], n) for k in KINDS}
    passed = {k: abs(fractions[k] - exact[k]) <= half[k] for k in ("acute", "obtuse")}
    passed["right"] = counts["right"] <= n * RIGHT_CEILING
    return ProportionReport(
        chart=plan.chart,
        n=n,
        seed=plan.seed,
        counts=counts,
        fractions=fractions,
        exact=exact,
        half_widths=half,
        passed={k: passed[k] for k in KINDS},
    )


def area_mc(chart, kind, seed: int, n: int, tol: Tolerance = DEFAULT_TOL, workers=None) -> float:
    """Hit-or-miss area of a class region inside the chart's bounding box.

    The box is the unit square for the side-ratio chart and, for the angle
    chart, the parallelogram spanned by AB and AC (twice the area of ABC).
    ``kind`` is one of Total, Acute, Right, Obtuse.
    """
    chart = Chart(chart)
    kind = str(kind).capitalize()
    code = {"Acute": 0, "Right": 1, "Obtuse": 2, "Total": None}[kind]

    if chart is Chart.SIDE_RATIO:
        box = 1.0

        def work(i, size):
            xy = chunk_rng(seed, i).random((size, 2))
            x, y = xy[:, 0], xy[:, 1]
            hit = sideratio.in_region2_array(x, y, tol)
            if code is not None:
                hit &= sideratio.angle_kind_codes2(x, y, tol) == code
            return int(np.count_nonzero(hit))
    else:
        box = 2 * sigma.AREA_ABC

        def work(i, size):
            uv = chunk_rng(seed, i).random((size, 2))
            x, y, z = sigma.sigma_from_uv(uv[:, 0], uv[:, 1])
            hit = sigma.on_sigma_array(x, y, z, tol)
            if code is not None:
                hit &= sigma.angle_kind_codes3(x, y, z, tol) == code
            return int(np.count_nonzero(hit))

    hits = sum(_map_chunks(work, n, workers))
    return box * hits / n
