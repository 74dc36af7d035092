"""Exact distances, gaps, minimizers and offset membership."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from offsetgrid.errors import DimensionMismatch, SceneError
from offsetgrid.exactness import ExactDistance
from offsetgrid.geometry import (
    Ball,
    CompiledScene,
    Point,
    PointPrim,
    Polyline,
    Scene,
    Segment,
    closure_connected,
    exact_dist2,
    gap2,
    minimizer_set,
    offset_member,
    point,
    zero_gap_classes,
)

rat = st.fractions(min_value=-4, max_value=4, max_denominator=6)
coords2 = st.tuples(rat, rat)


def _pt(c) -> Point:
    return Point(tuple(c))


points2 = coords2.map(_pt)
segments2 = st.tuples(points2, points2).filter(lambda ab: ab[0] != ab[1]).map(
    lambda ab: Segment(*ab)
)
balls2 = st.tuples(points2, st.fractions(min_value="1/6", max_value=3, max_denominator=6)).map(
    lambda cr: Ball(*cr)
)
prims2 = st.one_of(points2.map(PointPrim), segments2, balls2)


def _fig_left_scene() -> Scene:
    return Scene(
        2,
        (Segment(point("-1/2", "-1/2"), point("3/2", "3/2")),),
        (point("1/2", "1/2"),),
    )


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def _segments_intersect_2d(a, b, c, d) -> bool:
    """Closed-segment intersection from orientation signs alone."""
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def _sample_segment_min_d2(z: Point, seg: Segment, n: int) -> Fraction:
    """Dense-parameter oracle: exact min over the sample grid t = i/n."""
    best = None
    for i in range(n + 1):
        t = Fraction(i, n)
        p = tuple(a + t * (b - a) for a, b in zip(seg.a, seg.b))
        d2 = sum((zc - pc) ** 2 for zc, pc in zip(z.coords, p))
        if best is None or d2 < best:
            best = d2
    return best


class TestExactDist2:
    def test_perpendicular_foot(self):
        seg = Segment(point("-1/2", "1/2"), point("3/2", "1/2"))
        d = exact_dist2(point(0, 0), seg)
        assert d.square() == Fraction(1, 4)
        assert minimizer_set(point(0, 0), seg).points == (point(0, "1/2"),)

    def test_diagonal_projection_with_sampling_oracle(self):
        seg = Segment(point("-1/2", "-1/2"), point("3/2", "3/2"))
        z = point(1, 0)
        d = exact_dist2(z, seg)
        # oracle: the sample grid contains the true foot parameter 1/2
        sampled = _sample_segment_min_d2(z, seg, 2000)
        assert sampled == Fraction(1, 2)
        assert d.square() == Fraction(1, 2)
        assert minimizer_set(z, seg).points == (point("1/2", "1/2"),)

    def test_collinear_ball(self):
        d = exact_dist2(point(0, 0), Ball(point(3, 0), 1))
        assert d.square() == 4  # distance 2 exactly
        assert d == ExactDistance.from_square(4)

    def test_irrational_ball_distance(self):
        d = exact_dist2(point(1, 1), Ball(point(0, 0), 1))
        assert d.square() is None  # sqrt(2) - 1
        assert d.cmp_square(Fraction(17, 100)) > 0
        assert d.cmp_square(Fraction(18, 100)) < 0

    def test_polyline_is_min_over_edges(self):
        poly = Polyline((point(0, 0), point(2, 0), point(2, 2)))
        assert exact_dist2(point(3, 2), poly).square() == 1
        assert exact_dist2(point(1, -1), poly).square() == 1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            exact_dist2(point(0, 0, 0), PointPrim(point(1, 1)))

    @given(points2, prims2, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
    @settings(max_examples=100)
    def test_integer_translation_equivariance(self, z, prim, t):
        from offsetgrid.geometry import translate_primitive

        moved = exact_dist2(z.translate(t), translate_primitive(prim, t))
        assert moved == exact_dist2(z, prim)


class TestMinimizers:
    def test_point_on_primitive(self):
        seg = Segment(point(0, 0), point(2, 2))
        assert minimizer_set(point(1, 1), seg).points == (point(1, 1),)

    def test_v_polyline_two_feet_with_sampling_oracle(self):
        vee = Polyline((point(-1, 1), point(0, 0), point(1, 1)))
        z = point(0, 1)
        ms = minimizer_set(z, vee)
        assert set(ms.points) == {point("-1/2", "1/2"), point("1/2", "1/2")}
        # oracle: both arms reach the same sampled minimum
        left, right = vee.edges()
        n = 1000
        assert _sample_segment_min_d2(z, left, n) == _sample_segment_min_d2(z, right, n)

    def test_ball_center_reports_entire_sphere(self):
        ms = minimizer_set(point(0, 0), Ball(point(0, 0), 2))
        assert ms.entire_sphere and not ms.points

    def test_ball_outside_rational_foot(self):
        ms = minimizer_set(point(4, 0), Ball(point(0, 0), 1))
        assert ms.points == (point(1, 0),)

    def test_ball_outside_irrational_foot(self):
        ms = minimizer_set(point(1, 1), Ball(point(0, 0), 1))
        assert ms.irrational and not ms.points
        assert not ms.all_in(frozenset({point(1, 1)}))

    def test_ball_interior_point_is_its_own_minimizer(self):
        ms = minimizer_set(point("1/2", 0), Ball(point(0, 0), 1))
        assert ms.points == (point("1/2", 0),)


class TestGaps:
    def test_point_pair(self):
        assert gap2(PointPrim(point(0, 0)), PointPrim(point(3, 0))).square() == 9

    def test_segment_to_point_with_quadratic_oracle(self):
        seg = Segment(point(0, 0), point(1, 0))
        z = PointPrim(point(3, 4))
        sampled = _sample_segment_min_d2(point(3, 4), seg, 1000)
        assert sampled == 20  # attained at the endpoint (1,0)
        assert gap2(seg, z).square() == 20

    def test_collinear_balls(self):
        g = gap2(Ball(point(0, 0), 1), Ball(point(5, 0), 1))
        assert g.square() == 9  # gap 3

    def test_tangent_balls_touch(self):
        assert gap2(Ball(point(0, 0), 1), Ball(point(3, 0), 2)).is_zero()

    def test_crossing_segments(self):
        s1 = Segment(point(0, 0), point(2, 2))
        s2 = Segment(point(0, 2), point(2, 0))
        assert gap2(s1, s2).is_zero()

    def test_shared_endpoint_segments(self):
        s1 = Segment(point(0, 0), point(1, 0))
        s2 = Segment(point(1, 0), point(1, 1))
        assert gap2(s1, s2).is_zero()

    def test_parallel_segments(self):
        s1 = Segment(point(0, 0), point(2, 0))
        s2 = Segment(point(0, 1), point(2, 1))
        assert gap2(s1, s2).square() == 1

    def test_skew_segments_3d(self):
        # closest pair strictly interior to both segments
        s1 = Segment(point(-1, 0, 0), point(1, 0, 0))
        s2 = Segment(point(0, -1, 1), point(0, 1, 1))
        assert gap2(s1, s2).square() == 1

    def test_ball_segment(self):
        g = gap2(Ball(point(0, 3), 1), Segment(point(-2, 0), point(2, 0)))
        assert g.square() == 4  # distance 3 to the segment, minus radius 1

    @given(prims2, prims2)
    @settings(max_examples=100)
    def test_symmetry(self, a, b):
        assert gap2(a, b) == gap2(b, a)

    @given(segments2, segments2)
    @settings(max_examples=150)
    def test_zero_gap_iff_segments_intersect(self, s1, s2):
        # analytic closed-segment intersection via exact orientation signs
        assert gap2(s1, s2).is_zero() == _segments_intersect_2d(
            s1.a.coords, s1.b.coords, s2.a.coords, s2.b.coords
        )

    @given(balls2, balls2)
    @settings(max_examples=100)
    def test_zero_gap_iff_balls_intersect(self, b1, b2):
        d2 = sum((x - y) ** 2 for x, y in zip(b1.center, b2.center))
        touching = d2 <= (b1.radius + b2.radius) ** 2
        assert gap2(b1, b2).is_zero() == touching

    @given(segments2, segments2)
    @settings(max_examples=100)
    def test_segment_gap_vs_sampling(self, s1, s2):
        g = gap2(s1, s2)
        n = 24
        best = None
        for i in range(n + 1):
            t = Fraction(i, n)
            p = Point(tuple(a + t * (b - a) for a, b in zip(s1.a, s1.b)))
            d2 = exact_dist2(p, s2).square()
            if best is None or d2 < best:
                best = d2
        # sampled value can only overestimate the true infimum
        assert g.cmp_square(best) <= 0

    def test_3d_segment_gap_is_lower_bound_of_samples(self):
        import random as _random

        rng = _random.Random(2024)
        for _ in range(20):
            pts = [
                Point(tuple(Fraction(rng.randint(-10, 10), 2) for _ in range(3)))
                for _ in range(4)
            ]
            if pts[0] == pts[1] or pts[2] == pts[3]:
                continue
            s1, s2 = Segment(pts[0], pts[1]), Segment(pts[2], pts[3])
            g = gap2(s1, s2)
            for i in range(0, 13):
                t = Fraction(i, 12)
                p = Point(tuple(a + t * (b - a) for a, b in zip(s1.a, s1.b)))
                assert g.cmp(exact_dist2(p, s2)) <= 0


class TestOffsetMember:
    def test_fig_left_boundary_puncture_blocks(self, fig_left):
        assert offset_member(fig_left, point(1, 0), Fraction(1, 2)) is False
        assert offset_member(fig_left, point(0, 1), Fraction(1, 2)) is False

    def test_on_set_always_member(self, fig_left):
        assert offset_member(fig_left, point(0, 0), 0) is True
        assert offset_member(fig_left, point(0, 0), Fraction(1, 7)) is True

    def test_strictly_inside_ignores_punctures(self, fig_left):
        assert offset_member(fig_left, point(1, 0), Fraction(51, 100)) is True

    def test_boundary_with_non_punctured_witness(self, fig_left):
        # (2, 2) touches only the endpoint (3/2, 3/2), which is intact
        assert offset_member(fig_left, point(2, 2), Fraction(1, 2)) is True

    def test_puncture_itself_at_zero_radius(self, fig_right):
        assert offset_member(fig_right, point(1, "1/2"), 0) is False
        assert offset_member(fig_right, point(1, "1/2"), Fraction(1, 1000)) is True

    def test_punctured_ball_center_at_zero_radius(self):
        scene = Scene(2, (Ball(point(0, 0), 1),), (point(0, 0),))
        assert offset_member(scene, point(0, 0), 0) is False
        assert offset_member(scene, point(0, 0), Fraction(1, 100)) is True

    @given(
        points2,
        st.fractions(min_value=0, max_value=4, max_denominator=8),
        st.fractions(min_value=0, max_value=4, max_denominator=8),
    )
    @settings(max_examples=80)
    def test_monotone_in_radius(self, z, r2a, r2b):
        scene = _fig_left_scene()
        lo, hi = min(r2a, r2b), max(r2a, r2b)
        if offset_member(scene, z, lo):
            assert offset_member(scene, z, hi)

    @given(points2, st.fractions(min_value="1/10", max_value=4, max_denominator=10))
    @settings(max_examples=80)
    def test_puncture_irrelevant_when_strictly_inside(self, z, r2):
        scene = _fig_left_scene()
        unpunctured = Scene(2, scene.primitives)
        d = exact_dist2(z, scene.primitives[0])
        if d.cmp_square(r2) < 0:
            assert offset_member(scene, z, r2)
            assert offset_member(unpunctured, z, r2)


class TestClosureConnected:
    def test_shared_endpoint(self):
        scene = Scene(
            2, (Segment(point(0, 0), point(1, 0)), Segment(point(1, 0), point(1, 1)))
        )
        assert closure_connected(scene)

    def test_two_far_points(self):
        scene = Scene(2, (PointPrim(point(0, 0)), PointPrim(point(3, 0))))
        assert not closure_connected(scene)
        assert zero_gap_classes(scene) == [[0], [1]]

    def test_single_punctured_segment(self, fig_left):
        assert closure_connected(fig_left)


class TestSceneValidation:
    def test_puncture_off_primitive_rejected(self):
        with pytest.raises(SceneError):
            Scene(2, (Segment(point(0, 0), point(1, 0)),), (point(5, 5),))

    def test_puncture_swallowing_point_primitive_rejected(self):
        with pytest.raises(SceneError):
            Scene(2, (PointPrim(point(1, 1)),), (point(1, 1),))

    def test_component_partition_must_cover(self):
        prims = (PointPrim(point(0, 0)), PointPrim(point(2, 0)))
        with pytest.raises(SceneError):
            Scene(2, prims, (), ((0,),))
        with pytest.raises(SceneError):
            Scene(2, prims, (), ((0, 1), (1,)))
        Scene(2, prims, (), ((0,), (1,)))  # valid

    def test_degenerate_primitives_rejected(self):
        with pytest.raises(SceneError):
            Segment(point(1, 1), point(1, 1))
        with pytest.raises(SceneError):
            Ball(point(0, 0), 0)
        with pytest.raises(SceneError):
            Polyline((point(0, 0),))

    def test_dimension_consistency(self):
        with pytest.raises(DimensionMismatch):
            Scene(3, (PointPrim(point(0, 0)),))


class TestCompiledAgreesWithDirect:
    """The integer-scaled fast path must match the generic rational path on
    every decision, including exact boundaries."""

    @given(
        st.lists(prims2, min_size=1, max_size=3),
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
        st.fractions(min_value=0, max_value=5, max_denominator=12),
    )
    @settings(max_examples=150)
    def test_min_distance_and_membership(self, prims, z, r2):
        scene = Scene(2, tuple(prims))
        compiled = CompiledScene(scene)
        direct = exact_dist2(Point(z), scene.primitives[0])
        for p in scene.primitives[1:]:
            d = exact_dist2(Point(z), p)
            if d.cmp(direct) < 0:
                direct = d
        assert compiled.min_distance(z) == direct
        assert compiled.membership(r2)(z) == offset_member(scene, Point(z), r2)

    def test_boundary_decision_agreement(self, fig_left):
        compiled = CompiledScene(fig_left)
        member = compiled.membership(Fraction(1, 2))
        for z in [(1, 0), (0, 1), (2, 2), (-1, -1), (0, 0), (3, 3)]:
            assert member(z) == offset_member(fig_left, Point(z), Fraction(1, 2))
