"""Construction-layer tests with frozen oracles.

Frozen golden values and where they come from:

* Right isoceles (0,0),(1,0),(0,1): the equal-angle point solves, by hand,
  the pair of loci y = 2x (equal angles at the two legs) and y = (1-x)/2,
  giving exactly (0.2, 0.4); the common angle is arccot(2).
* Equilateral circumscription ratio at 20 degrees: law of sines in the
  corner triangle gives r(theta) = sin(w + theta)/sin(w) with w the
  equal-angle value; for the equilateral w = 30 degrees, so
  r(20 deg) = 2 sin(50 deg) = 1.532088886237956.
* Scalene (0,0),(4,0),(1,2) ratio at 20 degrees, 1.6664854253529544, frozen
  from an independent complex-arithmetic construction written before the
  library; it equals the closed form sin(w + theta)/sin(w) with
  w = arccot(17/8).
"""

import math
import random

import pytest

from conftest import random_scalene, random_triangle
from trigonlab import kernel
from trigonlab.constructions import (
    ITERATION_CAP,
    MEDIAN_COLORS,
    CircumscribeStep,
    MedialStep,
    Orientation,
    TriangleChain,
    brocard_angle,
    brocard_point,
    chain_step_similarity,
    circumscribe_similar,
    equal_angle_triple,
    euler_data,
    euler_iteration_chain,
    iterate_circumscribe,
    iterate_medial,
    medial_triangle,
    median_segments,
    vertex_circle,
)
from trigonlab.errors import (
    CollinearPoints,
    DegenerateCircumscription,
    DegenerateTriangle,
    EquilateralDegenerate,
    InvalidAngle,
    IterationCapExceeded,
)
from trigonlab.kernel import Point, Segment, Triangle

RIGHT_ISOCELES = Triangle(Point(0, 0), Point(1, 0), Point(0, 1))
BROCARD_OF_RIGHT_ISOCELES = Point(0.2, 0.4)
EQUILATERAL = Triangle(Point(0, 0), Point(1, 0), Point(0.5, math.sqrt(3) / 2))
SCALENE = Triangle(Point(0, 0), Point(4, 0), Point(1, 2))
RATIO_EQUILATERAL_20DEG = 2 * math.sin(math.radians(50))  # 1.532088886237956
RATIO_SCALENE_20DEG = 1.6664854253529544
TRIANGLE_345 = Triangle(Point(0, 0), Point(3, 0), Point(0, 4))


def cot_sum_angle(t: Triangle) -> float:
    """Independent closed-form oracle: arccot(cot A + cot B + cot C)."""
    s = sum(1.0 / math.tan(a) for a in t.angles())
    return math.atan2(1.0, s)


def ratio_oracle(t: Triangle, theta: float) -> float:
    """Closed-form circumscription size ratio sin(w + theta)/sin(w)."""
    w = cot_sum_angle(t)
    return abs(math.sin(w + theta)) / math.sin(w)


class TestMedialTriangle:
    def test_example(self):
        mt = medial_triangle(Triangle(Point(0, 0), Point(4, 0), Point(0, 4)))
        assert mt.a == Point(2, 2)
        assert mt.b == Point(0, 2)
        assert mt.c == Point(2, 0)

    def test_halving_bulk(self):
        rng = random.Random(11)
        for _ in range(1000):
            t = random_triangle(rng)
            mt = medial_triangle(t)
            for k in range(3):
                parent = t.side(k).length()
                assert abs(mt.side(k).length() - parent / 2) <= 1e-12 * parent

    def test_point_reflection_through_centroid(self):
        # medial vertex k = G - (vertex k - G)/2, so the similarity taking t
        # to its medial triangle is rotation pi, scale 1/2, fixed at G
        t = SCALENE
        mt = medial_triangle(t)
        s = kernel.similarity_between(Segment(t.a, t.b), Segment(mt.a, mt.b))
        assert abs(s.rotation - math.pi) < 1e-12
        assert abs(s.scale - 0.5) < 1e-12
        assert kernel.similarity_fixed_point(s).distance_to(kernel.centroid(t)) < 1e-12

    def test_equilateral_half_size_rotated(self):
        big = Triangle(Point(0, 0), Point(2, 0), Point(1, math.sqrt(3)))
        mt = medial_triangle(big)
        assert abs(mt.longest_side() - 1.0) < 1e-12
        s = kernel.similarity_between(Segment(big.a, big.b), Segment(mt.a, mt.b))
        assert abs(s.rotation - math.pi) < 1e-12


class TestMedianSegments:
    def test_opposite_midpoints(self):
        t = Triangle(Point(0, 0), Point(3, 0), Point(0, 3))
        segs = median_segments(t)
        assert segs[0].p == t.a and segs[0].q == Point(1.5, 1.5)
        assert segs[1].p == t.b and segs[1].q == Point(0, 1.5)
        assert segs[2].p == t.c and segs[2].q == Point(1.5, 0)

    def test_contain_centroid_with_two_to_one_split(self):
        t = Triangle(Point(0, 0), Point(3, 0), Point(0, 3))
        g = kernel.centroid(t)
        assert g == Point(1, 1)
        for seg in median_segments(t):
            line = kernel.line_through(seg.p, seg.q)
            assert line.distance_to(g) < 1e-12
            assert abs(seg.p.distance_to(g) / g.distance_to(seg.q) - 2.0) < 1e-12

    def test_color_tags(self):
        assert MEDIAN_COLORS == ("red", "green", "blue")


class TestIterateMedial:
    def test_zero_is_identity(self):
        chain = iterate_medial(SCALENE, 0)
        assert len(chain) == 1 and chain[0] is SCALENE
        assert isinstance(chain.step, MedialStep)

    def test_side_eight_thrice_halved(self):
        t = Triangle(Point(0, 0), Point(8, 0), Point(0, 8))
        chain = iterate_medial(t, 3)
        # longest side 8*sqrt(2) falls to sqrt(2)... the longest LEG is 8 -> 1
        assert abs(chain[3].longest_side() - math.sqrt(2)) < 1e-12
        assert abs(chain[3].side(0).length() * 8 - chain[0].side(0).length()) < 1e-12

    def test_centroid_preserved(self):
        rng = random.Random(22)
        for _ in range(50):
            t = random_triangle(rng)
            g = kernel.centroid(t)
            for tri in iterate_medial(t, 6).triangles:
                assert kernel.centroid(tri).distance_to(g) <= 1e-9

    def test_negative_count(self):
        with pytest.raises(ValueError):
            iterate_medial(SCALENE, -1)

    def test_cap(self):
        with pytest.raises(IterationCapExceeded):
            iterate_medial(SCALENE, ITERATION_CAP + 1)

    def test_chain_must_be_nonempty(self):
        with pytest.raises(ValueError):
            TriangleChain((), MedialStep())


class TestCircumscribeSimilar:
    def test_theta_zero_is_identity(self):
        assert circumscribe_similar(SCALENE, 0.0) is SCALENE

    def test_equilateral_golden_ratio(self):
        theta = math.radians(20)
        for orient in Orientation:
            c = circumscribe_similar(EQUILATERAL, theta, orient)
            r = c.side(0).length() / EQUILATERAL.side(0).length()
            assert abs(r - RATIO_EQUILATERAL_20DEG) < 1e-12

    def test_scalene_golden_ratio(self):
        c = circumscribe_similar(SCALENE, math.radians(20))
        r = c.side(0).length() / SCALENE.side(0).length()
        assert abs(r - RATIO_SCALENE_20DEG) < 1e-12

    def test_each_side_passes_through_a_vertex(self):
        c = circumscribe_similar(SCALENE, math.radians(20))
        scale = kernel.scene_scale(*SCALENE.vertices, *c.vertices)
        for k in range(3):
            side = c.side(k)
            line = kernel.line_through(side.p, side.q)
            hits = sum(1 for v in SCALENE.vertices if line.distance_to(v) <= 1e-9 * scale)
            assert hits == 1

    def test_similar_shape_and_rotation_sign(self):
        rng = random.Random(33)
        for _ in range(100):
            t = random_triangle(rng)
            theta = rng.uniform(0.05, 1.2)
            for orient, want in (
                (Orientation.CLOCKWISE, theta),
                (Orientation.COUNTERCLOCKWISE, -theta),
            ):
                c = circumscribe_similar(t, theta, orient)
                for a_in, a_out in zip(t.angles(), c.angles()):
                    assert abs(a_in - a_out) <= 1e-9
                s = kernel.similarity_between(Segment(t.a, t.b), Segment(c.a, c.b))
                assert abs(s.rotation - want) <= 1e-9
                # one similarity maps all three corresponding vertices
                assert s.apply(t.c).distance_to(c.c) <= 1e-9 * t.longest_side()

    def test_ratio_matches_closed_form(self):
        rng = random.Random(44)
        for _ in range(100):
            t = random_triangle(rng)
            theta = rng.uniform(-0.3, 1.2)
            w = cot_sum_angle(t)
            if abs(theta) < 1e-3 or abs(theta + w) < 1e-3:
                continue
            c = circumscribe_similar(t, theta)
            r = c.side(0).length() / t.side(0).length()
            assert abs(r - ratio_oracle(t, theta)) <= 1e-9 * ratio_oracle(t, theta)

    def test_invalid_angle(self):
        with pytest.raises(InvalidAngle):
            circumscribe_similar(SCALENE, 4.0)
        with pytest.raises(InvalidAngle):
            circumscribe_similar(SCALENE, float("nan"))

    def test_degenerate_at_collapse_angle(self):
        # boundary lines concur when theta is minus the equal-angle value
        w = cot_sum_angle(TRIANGLE_345)
        for orient in Orientation:
            with pytest.raises(DegenerateCircumscription):
                circumscribe_similar(TRIANGLE_345, -w, orient)

    def test_near_collapse_still_works(self):
        w = cot_sum_angle(TRIANGLE_345)
        c = circumscribe_similar(TRIANGLE_345, -w + 1e-6)
        assert c.side(0).length() > 0

    def test_negative_labeling_same_rotation_and_ratio(self):
        # listing the vertices the other way round must not change the
        # measured rotation sign or the size ratio
        cw = Triangle(Point(0, 0), Point(1, 2), Point(4, 0))
        theta = math.radians(20)
        c = circumscribe_similar(cw, theta, Orientation.CLOCKWISE)
        s = kernel.similarity_between(Segment(cw.a, cw.b), Segment(c.a, c.b))
        assert abs(s.rotation - theta) <= 1e-9
        assert abs(s.scale - RATIO_SCALENE_20DEG) <= 1e-9
        assert s.apply(cw.c).distance_to(c.c) <= 1e-9 * cw.longest_side()

    def test_commutes_with_similarity(self):
        # applying a similarity to t transforms the construction covariantly
        s = kernel.Similarity(rotation=0.7, scale=1.8, tx=3.0, ty=-1.0)
        theta = math.radians(25)
        direct = circumscribe_similar(s.apply_triangle(SCALENE), theta)
        mapped = s.apply_triangle(circumscribe_similar(SCALENE, theta))
        for k in range(3):
            assert direct.vertex(k).distance_to(mapped.vertex(k)) <= 1e-9


class TestIterateCircumscribe:
    def test_zero_is_identity(self):
        chain = iterate_circumscribe(SCALENE, 0.3, Orientation.CLOCKWISE, 0)
        assert len(chain) == 1 and chain[0] is SCALENE
        assert chain.step == CircumscribeStep(0.3, Orientation.CLOCKWISE)

    def test_constant_step_similarity(self):
        theta = math.radians(20)
        chain = iterate_circumscribe(SCALENE, theta, Orientation.CLOCKWISE, 10)
        sims = [chain_step_similarity(chain, k) for k in range(10)]
        scales = [s.scale for s in sims]
        rots = [s.rotation for s in sims]
        assert (max(scales) - min(scales)) / min(scales) < 1e-9
        assert max(rots) - min(rots) < 1e-9

    def test_fixed_point_theta_invariant(self):
        scale = kernel.scene_scale(*SCALENE.vertices)
        fps = []
        for deg in (10.0, 25.0):
            chain = iterate_circumscribe(SCALENE, math.radians(deg), n=3)
            fps.append(kernel.similarity_fixed_point(chain_step_similarity(chain)))
        assert fps[0].distance_to(fps[1]) <= 1e-6 * scale

    def test_cap(self):
        with pytest.raises(IterationCapExceeded):
            iterate_circumscribe(SCALENE, 0.3, n=ITERATION_CAP + 1)


class TestVertexCircle:
    def test_passes_through_side_endpoints(self):
        for k in range(3):
            c = vertex_circle(SCALENE, k, 0.3)
            side = SCALENE.side(k)
            assert kernel.point_on_circle(c, side.p, 1e-9)
            assert kernel.point_on_circle(c, side.q, 1e-9)

    def test_theta_invariance_pair(self):
        c1 = vertex_circle(SCALENE, 0, math.radians(15))
        c2 = vertex_circle(SCALENE, 0, math.radians(40))
        assert c1.center.distance_to(c2.center) <= 1e-9 * c1.radius
        assert abs(c1.radius - c2.radius) <= 1e-9 * c1.radius

    def test_theta_invariance_eight_angles(self):
        rng = random.Random(55)
        thetas = [math.radians(d) for d in (5, 10, 15, 20, 30, 40, 55, 70)]
        for _ in range(20):
            t = random_triangle(rng)
            for k in range(3):
                circles = [vertex_circle(t, k, th) for th in thetas]
                r0 = circles[0].radius
                for c in circles[1:]:
                    assert c.center.distance_to(circles[0].center) <= 1e-9 * r0
                    assert abs(c.radius - r0) <= 1e-9 * r0

    def test_theta_zero_collinear(self):
        with pytest.raises(CollinearPoints):
            vertex_circle(SCALENE, 0, 0.0)

    def test_bad_side_index(self):
        with pytest.raises(ValueError):
            vertex_circle(SCALENE, 3, 0.3)


class TestBrocardPoint:
    def test_equilateral_is_centroid(self):
        p = brocard_point(EQUILATERAL)
        assert p.distance_to(kernel.centroid(EQUILATERAL)) <= 1e-9

    def test_right_isoceles_golden(self):
        p = brocard_point(RIGHT_ISOCELES)
        assert p.distance_to(BROCARD_OF_RIGHT_ISOCELES) <= 1e-12

    def test_translation_equivariance(self):
        t = Triangle(Point(10, -7), Point(11, -7), Point(10, -6))
        p = brocard_point(t)
        assert p.distance_to(Point(10.2, -6.6)) <= 1e-12

    def test_on_all_three_circles(self):
        rng = random.Random(66)
        for _ in range(100):
            t = random_triangle(rng)
            x = brocard_point(t)
            tol = 1e-9 * kernel.circumradius(t)
            for k in range(3):
                c = vertex_circle(t, k, 0.3)
                assert abs(x.distance_to(c.center) - c.radius) <= tol

    def test_equal_angles(self):
        rng = random.Random(77)
        for _ in range(100):
            t = random_triangle(rng)
            angles = equal_angle_triple(t, brocard_point(t))
            assert max(angles) - min(angles) <= 1e-9

    def test_label_order_does_not_matter(self):
        # both vertex orders locate the same geometric point and satisfy
        # the (orientation-normalized) equal-angle triple
        ccw = Triangle(Point(0, 0), Point(4, 0), Point(1, 2))
        cw = Triangle(Point(0, 0), Point(1, 2), Point(4, 0))
        assert brocard_point(cw).distance_to(brocard_point(ccw)) <= 1e-12
        for t in (ccw, cw):
            angles = equal_angle_triple(t, brocard_point(t))
            assert max(angles) - min(angles) <= 1e-9

    def test_negative_labeling_golden(self):
        cw = Triangle(Point(0, 0), Point(0, 1), Point(1, 0))
        assert brocard_point(cw).distance_to(BROCARD_OF_RIGHT_ISOCELES) <= 1e-12

    def test_equals_spiral_fixed_point(self):
        rng = random.Random(88)
        for _ in range(50):
            t = random_triangle(rng)
            chain = iterate_circumscribe(t, math.radians(20), n=2)
            fp = kernel.similarity_fixed_point(chain_step_similarity(chain))
            scale = kernel.scene_scale(*t.vertices)
            assert fp.distance_to(brocard_point(t)) <= 1e-6 * scale


class TestBrocardAngle:
    def test_equilateral(self):
        assert abs(brocard_angle(EQUILATERAL) - math.pi / 6) <= 1e-9

    def test_345_oracle(self):
        # cot w = cot A + cot B + cot C = 0 + 4/3 + 3/4 = 25/12
        assert abs(brocard_angle(TRIANGLE_345) - math.atan2(12, 25)) <= 1e-12

    def test_right_isoceles_arccot_two(self):
        assert abs(brocard_angle(RIGHT_ISOCELES) - math.atan2(1, 2)) <= 1e-12

    def test_scale_invariance(self):
        small = TRIANGLE_345
        big = Triangle(Point(0, 0), Point(300, 0), Point(0, 400))
        assert abs(brocard_angle(small) - brocard_angle(big)) <= 1e-12

    def test_cot_sum_oracle_bulk(self):
        rng = random.Random(99)
        for _ in range(200):
            t = random_triangle(rng)
            assert abs(brocard_angle(t) - cot_sum_angle(t)) <= 1e-9


class TestEulerData:
    def test_right_triangle_example(self):
        d = euler_data(Triangle(Point(0, 0), Point(2, 0), Point(0, 2)))
        assert d.circumcenter.distance_to(Point(1, 1)) <= 1e-12
        assert d.orthocenter.distance_to(Point(0, 0)) <= 1e-12
        assert d.centroid.distance_to(Point(2 / 3, 2 / 3)) <= 1e-12
        gh = d.centroid.distance_to(d.orthocenter)
        go = d.centroid.distance_to(d.circumcenter)
        assert abs(gh / go - 2.0) <= 1e-12

    def test_equilateral_raises_with_centers(self):
        with pytest.raises(EquilateralDegenerate) as exc_info:
            euler_data(EQUILATERAL)
        err = exc_info.value
        g = kernel.centroid(EQUILATERAL)
        assert err.centroid.distance_to(g) <= 1e-12
        assert err.circumcenter.distance_to(g) <= 1e-9
        assert err.orthocenter.distance_to(g) <= 1e-9

    def test_two_to_one_bulk(self):
        rng = random.Random(123)
        for _ in range(1000):
            t = random_scalene(rng)
            try:
                d = euler_data(t)
            except EquilateralDegenerate:
                continue
            scale = kernel.scene_scale(*t.vertices)
            assert d.line.distance_to(d.centroid) <= 1e-9 * scale
            gh = d.centroid.distance_to(d.orthocenter)
            go = d.centroid.distance_to(d.circumcenter)
            assert abs(gh / go - 2.0) <= 1e-9


class TestEulerIterationChain:
    def test_zero_matches_euler_data(self):
        datas = euler_iteration_chain(SCALENE, 0)
        single = euler_data(SCALENE)
        assert len(datas) == 1
        assert datas[0].centroid == single.centroid
        assert datas[0].orthocenter == single.orthocenter

    def test_orthocenter_becomes_circumcenter(self):
        datas = euler_iteration_chain(SCALENE, 4)
        scale = kernel.scene_scale(*SCALENE.vertices)
        for k in range(4):
            assert (
                datas[k + 1].orthocenter.distance_to(datas[k].circumcenter)
                <= 1e-9 * scale
            )

    def test_all_centers_collinear(self):
        datas = euler_iteration_chain(SCALENE, 4)
        line = datas[0].line
        scale = kernel.scene_scale(*SCALENE.vertices)
        for d in datas:
            for p in (d.centroid, d.circumcenter, d.orthocenter):
                assert line.distance_to(p) <= 1e-9 * scale

    def test_distances_halve(self):
        datas = euler_iteration_chain(SCALENE, 4)
        for k in range(4):
            num = datas[k].circumcenter.distance_to(datas[k].orthocenter)
            den = datas[k + 1].circumcenter.distance_to(datas[k + 1].orthocenter)
            assert abs(num / den - 2.0) <= 1e-9
