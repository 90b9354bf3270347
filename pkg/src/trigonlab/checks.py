"""Numeric theorem checks with tolerance-based reports, plus a seeded
random-trial suite runner.

Every check returns a CheckReport whose residuals are dimensionless
(scene-scale-relative distances, angle differences in radians, or ratio
deviations), so one tolerance governs them all: passed is true exactly when
every residual is at or below the tolerance.  Raw measured quantities ride
along in the measured list for debugging and never affect the verdict.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import constructions, kernel
from .constructions import Orientation
from .errors import (
    ChordNotOnCircle,
    CollinearPoints,
    DegenerateTriangle,
    EquilateralDegenerate,
    UnknownCheckName,
)
from .kernel import Circle, Point, Segment, Triangle

# Suite sweep used for circumscription trials: 3, 6, ..., 72 degrees.
SWEEP_ANGLES = tuple(math.radians(3.0 * k) for k in range(1, 25))

# Canonical check ordering for suite reports.
CHECK_NAMES = (
    "median_concurrency",
    "euler_line",
    "euler_iteration",
    "circumscription",
    "spiral",
    "vertex_circles",
    "inscribed_angle",
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check: passed iff every residual <= tolerance."""

    name: str
    passed: bool
    residuals: tuple[tuple[str, float], ...]
    measured: tuple[tuple[str, float], ...]
    tolerance: float
    trial_seed: int | None = None

    def max_residual(self) -> float:
        return max((v for _, v in self.residuals), default=0.0)


@dataclass(frozen=True)
class TrialConfig:
    """Parameters for seeded random trials.

    Vertices are sampled uniformly in the square [-coordinate_range,
    coordinate_range]^2 and rejected until the triangle's degeneracy margin
    (|twice area| / longest side squared) reaches min_margin, so trials
    exercise irregular shapes without sliver-driven residual blow-ups.
    """

    trials: int
    seed: int
    coordinate_range: float = 10.0
    min_margin: float = 1e-3
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


def _report(
    name: str,
    residuals: list[tuple[str, float]],
    measured: list[tuple[str, float]],
    tolerance: float,
    trial_seed: int | None = None,
) -> CheckReport:
    passed = all(value <= tolerance for _, value in residuals)
    return CheckReport(
        name=name,
        passed=passed,
        residuals=tuple(residuals),
        measured=tuple(measured),
        tolerance=tolerance,
        trial_seed=trial_seed,
    )


def sample_triangle(rng: random.Random, config: TrialConfig) -> Triangle:
    """One random non-degenerate triangle drawn per the config's sampler.

    The generator is the stdlib Mersenne Twister (random.Random), seeded
    explicitly by the caller; no ambient entropy is consumed, so equal seeds
    give equal triangles on every platform.
    """
    span = config.coordinate_range
    while True:
        a = Point(rng.uniform(-span, span), rng.uniform(-span, span))
        b = Point(rng.uniform(-span, span), rng.uniform(-span, span))
        c = Point(rng.uniform(-span, span), rng.uniform(-span, span))
        two_area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
        longest = max(a.distance_to(b), b.distance_to(c), c.distance_to(a))
        if longest > 0 and abs(two_area) > config.min_margin * longest * longest:
            return Triangle(a, b, c)


def check_median_concurrency(t: Triangle, tol: float) -> CheckReport:
    """The three medians meet at one point that splits each of them 2:1."""
    scale = kernel.scene_scale(*t.vertices)
    segs = constructions.median_segments(t)
    lines = [kernel.line_through(s.p, s.q) for s in segs]
    meets = [
        kernel.intersect_lines(lines[i], lines[j]) for i, j in ((0, 1), (1, 2), (2, 0))
    ]
    residuals = [
        (f"concurrency_{i}{j}", meets[m].distance_to(meets[(m + 1) % 3]) / scale)
        for m, (i, j) in enumerate(((0, 1), (1, 2), (2, 0)))
    ]
    g = meets[0]
    measured = [("point_x", g.x), ("point_y", g.y)]
    for k, seg in enumerate(segs):
        ratio = seg.p.distance_to(g) / g.distance_to(seg.q)
        residuals.append((f"split_ratio_{k}", abs(ratio - 2.0)))
        measured.append((f"ratio_{k}", ratio))
    return _report("median_concurrency", residuals, measured, tol)


def _euler_line_entries(
    d: constructions.EulerData, scale: float, prefix: str = ""
) -> tuple[list[tuple[str, float]], list[tuple[str, float]]]:
    gh = d.centroid.distance_to(d.orthocenter)
    go = d.centroid.distance_to(d.circumcenter)
    ratio = gh / go
    # centroid strictly between circumcenter and orthocenter: the dot
    # product of the two centroid-to-end vectors must not be positive
    between = (
        (d.circumcenter.x - d.centroid.x) * (d.orthocenter.x - d.centroid.x)
        + (d.circumcenter.y - d.centroid.y) * (d.orthocenter.y - d.centroid.y)
    )
    residuals = [
        (prefix + "centroid_on_line", d.line.distance_to(d.centroid) / scale),
        (prefix + "split_ratio", abs(ratio - 2.0)),
        (prefix + "betweenness", max(0.0, between) / (scale * scale)),
    ]
    measured = [
        (prefix + "ratio", ratio),
        (prefix + "centroid_to_orthocenter", gh),
        (prefix + "centroid_to_circumcenter", go),
    ]
    return residuals, measured


def check_euler_line(t: Triangle, tol: float) -> CheckReport:
    """Centroid, circumcenter, and orthocenter are collinear with a 2:1 split."""
    scale = kernel.scene_scale(*t.vertices)
    d = constructions.euler_data(t)
    residuals, measured = _euler_line_entries(d, scale)
    return _report("euler_line", residuals, measured, tol)


def check_euler_iteration(t: Triangle, n: int, tol: float) -> CheckReport:
    """Medial iteration: each orthocenter lands on the parent circumcenter,
    all centers stay on one line, and center distances halve per step."""
    scale = kernel.scene_scale(*t.vertices)
    datas = constructions.euler_iteration_chain(t, n)
    residuals, measured = _euler_line_entries(datas[0], scale)
    line = datas[0].line
    for k, d in enumerate(datas):
        for label, p in (
            ("centroid", d.centroid),
            ("circumcenter", d.circumcenter),
            ("orthocenter", d.orthocenter),
        ):
            residuals.append((f"collinear_{label}_{k}", line.distance_to(p) / scale))
    for k in range(len(datas) - 1):
        residuals.append(
            (
                f"orthocenter_meets_circumcenter_{k}",
                datas[k + 1].orthocenter.distance_to(datas[k].circumcenter) / scale,
            )
        )
        dk = datas[k].circumcenter.distance_to(datas[k].orthocenter)
        dk1 = datas[k + 1].circumcenter.distance_to(datas[k + 1].orthocenter)
        ratio = dk / dk1
        residuals.append((f"halving_{k}", abs(ratio - 2.0)))
        measured.append((f"distance_ratio_{k}", ratio))
    return _report("euler_iteration", residuals, measured, tol)


def check_circumscription(t: Triangle, theta: float, tol: float) -> CheckReport:
    """The circumscribed triangle is similar to the original, rotated by
    exactly the requested angle, with every original vertex on one of its sides."""
    scale = kernel.scene_scale(*t.vertices)
    c = constructions.circumscribe_similar(t, theta, Orientation.CLOCKWISE)
    residuals: list[tuple[str, float]] = []
    measured: list[tuple[str, float]] = []
    for k, (a_in, a_out) in enumerate(zip(t.angles(), c.angles())):
        residuals.append((f"angle_match_{k}", abs(a_in - a_out)))
    ratios = [c.side(k).length() / t.side(k).length() for k in range(3)]
    residuals.append(("side_ratio_spread", (max(ratios) - min(ratios)) / min(ratios)))
    measured.append(("size_ratio", ratios[0]))
    if theta == 0.0:
        rotation = 0.0
    else:
        s = kernel.similarity_between(Segment(t.a, t.b), Segment(c.a, c.b))
        rotation = s.rotation
    residuals.append(("rotation", abs(rotation - theta)))
    measured.append(("measured_rotation", rotation))
    side_lines = [kernel.line_through(c.side(k).p, c.side(k).q) for k in range(3)]
    for k, v in enumerate(t.vertices):
        residuals.append(
            (f"vertex_on_side_{k}", min(l.distance_to(v) for l in side_lines) / scale)
        )
    return _report("circumscription", residuals, measured, tol)


def check_spiral(t: Triangle, theta: float, n: int, tol: float) -> CheckReport:
    """Iterated circumscription advances by one constant similarity, so its
    scale ratios and rotations are constant and the fixed point is the
    common point of the vertex circles; a second angle probes that the
    fixed point does not depend on theta."""
    if n < 2:
        raise ValueError(f"spiral check needs n >= 2, got {n}")
    scale = kernel.scene_scale(*t.vertices)
    chain = constructions.iterate_circumscribe(t, theta, Orientation.CLOCKWISE, n)
    sims = [constructions.chain_step_similarity(chain, k) for k in range(n)]
    scales = [s.scale for s in sims]
    rots = [s.rotation for s in sims]
    residuals = [
        ("scale_ratio_spread", (max(scales) - min(scales)) / min(scales)),
        ("rotation_spread", max(rots) - min(rots)),
    ]
    measured = [
        ("step_scale", scales[0]),
        ("step_rotation", rots[0]),
    ]
    fp = kernel.similarity_fixed_point(sims[0])
    x = constructions.brocard_point(t)
    residuals.append(("fixed_point_vs_common_point", fp.distance_to(x) / scale))
    measured += [("fixed_x", fp.x), ("fixed_y", fp.y)]
    second = theta / 2.0
    chain2 = constructions.iterate_circumscribe(t, second, Orientation.CLOCKWISE, 2)
    fp2 = kernel.similarity_fixed_point(constructions.chain_step_similarity(chain2))
    residuals.append(("fixed_point_second_angle", fp.distance_to(fp2) / scale))
    return _report("spiral", residuals, measured, tol)


def check_vertex_circles(t: Triangle, thetas: list[float], tol: float) -> CheckReport:
    """Per-side circles do not depend on the angle, the three circles share
    one common point, and that point sees all sides at equal angles."""
    if not thetas:
        raise ValueError("at least one angle is required")
    radius = kernel.circumradius(t)
    residuals: list[tuple[str, float]] = []
    measured: list[tuple[str, float]] = []
    base: list[Circle] = []
    for k in range(3):
        circles = [constructions.vertex_circle(t, k, th) for th in thetas]
        base.append(circles[0])
        center_spread = max(
            c1.center.distance_to(c2.center) for c1 in circles for c2 in circles
        )
        radii = [c.radius for c in circles]
        residuals.append((f"center_spread_{k}", center_spread / circles[0].radius))
        residuals.append(
            (f"radius_spread_{k}", (max(radii) - min(radii)) / circles[0].radius)
        )
    commons: list[Point] = []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        shared = t.vertex(3 - i - j)
        candidates = [
            p
            for p in kernel.intersect_circles(base[i], base[j])
            if p.distance_to(shared) > 1e-9 * radius
        ]
        if not candidates:
            raise DegenerateTriangle(
                f"circles {i} and {j} meet only at the shared vertex"
            )
        commons.append(
            min(
                candidates,
                key=lambda p: _angle_spread(constructions.equal_angle_triple(t, p)),
            )
        )
    for m, (i, j) in enumerate(((0, 1), (1, 2), (2, 0))):
        residuals.append(
            (
                f"concurrency_{i}{j}",
                commons[m].distance_to(commons[(m + 1) % 3]) / radius,
            )
        )
    common = commons[0]
    angles = constructions.equal_angle_triple(t, common)
    residuals.append(("equal_angle_spread", _angle_spread(angles)))
    residuals.append(
        ("common_vs_brocard", common.distance_to(constructions.brocard_point(t)) / radius)
    )
    measured += [
        ("common_x", common.x),
        ("common_y", common.y),
        ("equal_angle", sum(angles) / 3.0),
    ]
    return _report("vertex_circles", residuals, measured, tol)


def _angle_spread(angles: tuple[float, float, float]) -> float:
    return max(angles) - min(angles)


def check_inscribed_angle(
    c: Circle, chord: Segment, vertices: list[Point], tol: float
) -> CheckReport:
    """Vertices on the circle (per chord side) subtend the chord at one
    common angle; a vertex strictly inside subtends strictly more, strictly
    outside strictly less.

    Strictness is encoded so that passed keeps meaning residual <= tol: an
    inside vertex's residual is max(0, 2*tol - (angle - reference)), which is
    within tol exactly when the angle exceeds the reference by at least tol;
    outside vertices are symmetric.
    """
    for end in (chord.p, chord.q):
        if abs(end.distance_to(c.center) - c.radius) > tol * c.radius:
            raise ChordNotOnCircle(f"chord endpoint {end} is not on the circle")
    chord_len = chord.length()
    if chord_len <= kernel.DEGENERACY_EPS * c.radius:
        raise CollinearPoints("chord endpoints coincide")
    ux, uy = (chord.q.x - chord.p.x) / chord_len, (chord.q.y - chord.p.y) / chord_len
    # left unit normal of the chord; arc midpoints sit at center +- r*normal
    nx, ny = -uy, ux

    def side_of(p: Point) -> float:
        return (p.x - chord.p.x) * nx + (p.y - chord.p.y) * ny

    def reference_angle(side: float) -> float:
        s = 1.0 if side > 0 else -1.0
        m = Point(c.center.x + s * c.radius * nx, c.center.y + s * c.radius * ny)
        return kernel.angle_at(m, chord.p, chord.q)

    residuals: list[tuple[str, float]] = []
    measured: list[tuple[str, float]] = []
    for k, v in enumerate(vertices):
        side = side_of(v)
        if abs(side) <= kernel.DEGENERACY_EPS * c.radius:
            raise CollinearPoints(f"vertex {v} lies on the chord line")
        ref = reference_angle(side)
        angle = kernel.angle_at(v, chord.p, chord.q)
        measured.append((f"angle_{k}", angle))
        offset = v.distance_to(c.center) - c.radius
        if abs(offset) <= tol * c.radius:
            residuals.append((f"vertex_{k}_on_circle_equal", abs(angle - ref)))
        elif offset < 0:
            residuals.append(
                (f"vertex_{k}_inside_greater", max(0.0, 2.0 * tol - (angle - ref)))
            )
        else:
            residuals.append(
                (f"vertex_{k}_outside_smaller", max(0.0, 2.0 * tol - (ref - angle)))
            )
    measured.append(("reference_angle", reference_angle(1.0)))
    return _report("inscribed_angle", residuals, measured, tol)


def _inscribed_trial(rng: random.Random, config: TrialConfig, tol: float) -> CheckReport:
    """Build a circle, chord, and vertex set for one inscribed-angle trial."""
    t = sample_triangle(rng, config)
    c = kernel.circle_through(t.a, t.b, t.c)

    def at(phi: float) -> Point:
        return Point(
            c.center.x + c.radius * math.cos(phi),
            c.center.y + c.radius * math.sin(phi),
        )

    phi1 = rng.uniform(0.0, math.tau)
    phi2 = phi1 + rng.uniform(0.4, math.tau - 0.4)
    chord = Segment(at(phi1), at(phi2))
    # two on-circle vertices strictly inside the arc from phi1 to phi2,
    # one interior point and one exterior point on the same side
    arc = phi2 - phi1
    v1 = at(phi1 + arc * rng.uniform(0.15, 0.45))
    v2 = at(phi1 + arc * rng.uniform(0.55, 0.85))
    mid_arc = at(phi1 + arc / 2.0)
    chord_mid = kernel.midpoint(chord.p, chord.q)
    inside = kernel.midpoint(mid_arc, chord_mid)
    outside = Point(
        c.center.x + 1.5 * (mid_arc.x - c.center.x),
        c.center.y + 1.5 * (mid_arc.y - c.center.y),
    )
    return check_inscribed_angle(c, chord, [v1, v2, inside, outside], tol)


def _suite_trial(name: str, rng: random.Random, config: TrialConfig, k: int) -> CheckReport:
    tol = config.tolerance
    if name == "median_concurrency":
        return check_median_concurrency(sample_triangle(rng, config), tol)
    if name == "euler_line":
        return check_euler_line(sample_triangle(rng, config), tol)
    if name == "euler_iteration":
        return check_euler_iteration(sample_triangle(rng, config), 4, tol)
    if name == "circumscription":
        theta = SWEEP_ANGLES[k % len(SWEEP_ANGLES)]
        return check_circumscription(sample_triangle(rng, config), theta, tol)
    if name == "spiral":
        return check_spiral(sample_triangle(rng, config), math.radians(15.0), 10, tol)
    if name == "vertex_circles":
        thetas = [math.radians(d) for d in (10.0, 20.0, 35.0)]
        return check_vertex_circles(sample_triangle(rng, config), thetas, tol)
    if name == "inscribed_angle":
        return _inscribed_trial(rng, config, tol)
    raise UnknownCheckName(f"unknown check name: {name}")


def run_suite(config: TrialConfig, which: set[str] | None = None) -> list[CheckReport]:
    """Run seeded random trials for the selected checks.

    Returns one aggregated report per selected check, in canonical order:
    residuals are per-label maxima over all trials, measured values come
    from the worst trial, and trial counts are appended.  Equal configs
    produce identical reports; each check's trial stream is seeded
    independently, so selecting fewer checks never changes the others.
    """
    if which is None:
        which = set(CHECK_NAMES)
    unknown = which - set(CHECK_NAMES)
    if unknown:
        raise UnknownCheckName(f"unknown check name(s): {sorted(unknown)}")
    reports = []
    for name in CHECK_NAMES:
        if name not in which:
            continue
        rng = random.Random(f"{config.seed}:{name}")
        trials = [_suite_trial(name, rng, config, k) for k in range(config.trials)]
        reports.append(_aggregate(name, trials, config))
    return reports


def _aggregate(name: str, trials: list[CheckReport], config: TrialConfig) -> CheckReport:
    worst: dict[str, float] = {}
    order: list[str] = []
    for report in trials:
        for label, value in report.residuals:
            if label not in worst:
                order.append(label)
                worst[label] = value
            else:
                worst[label] = max(worst[label], value)
    worst_trial = max(trials, key=lambda r: r.max_residual())
    passed_count = sum(1 for r in trials if r.passed)
    residuals = [(label, worst[label]) for label in order]
    measured = list(worst_trial.measured)
    measured.append(("trials", float(len(trials))))
    measured.append(("trials_passed", float(passed_count)))
    return CheckReport(
        name=name,
        passed=all(r.passed for r in trials),
        residuals=tuple(residuals),
        measured=tuple(measured),
        tolerance=config.tolerance,
        trial_seed=config.seed,
    )
