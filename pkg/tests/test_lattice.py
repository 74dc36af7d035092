"""Discretizations, adjacency, components, voxel covers and orderings."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from offsetgrid.errors import VoxelOrderError
from offsetgrid.geometry import (
    Ball,
    Point,
    PointPrim,
    Polyline,
    Scene,
    Segment,
    offset_member,
    point,
)
from offsetgrid.lattice import (
    DiscreteSet,
    Voxel,
    components,
    enumeration_box,
    gauss_discretize,
    is_k_connected,
    k_adjacent,
    offset_discretize,
    order_voxels,
    voxel_cover,
    voxel_order_property_holds,
)
from tests.conftest import FIG_LEFT_DELTA, FIG_RIGHT_DELTA


def _brute_force_discretize(scene: Scene, r2) -> set:
    """Independent exhaustive scan: the generic rational membership predicate
    applied to every box point, no compiled evaluators involved."""
    lo, hi = enumeration_box(scene, r2)
    out = set()
    for z in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if offset_member(scene, Point(z), r2):
            out.add(z)
    return out


def _brute_force_components(pts: set, k: int, dim: int) -> list[frozenset]:
    """All-pairs path search: grow reachability sets until stable."""
    reach = {p: {p} for p in pts}
    changed = True
    while changed:
        changed = False
        for p in pts:
            for q in pts:
                if q in reach[p]:
                    continue
                if any(k_adjacent(r, q, k) for r in reach[p]):
                    reach[p].add(q)
                    changed = True
    classes = {frozenset(v) for v in reach.values()}
    merged = True
    while merged:
        merged = False
        for a, b in itertools.combinations(classes, 2):
            if a & b:
                classes = (classes - {a, b}) | {a | b}
                merged = True
                break
    return sorted(classes, key=lambda c: min(c))


class TestGauss:
    def test_segment(self):
        scene = Scene(2, (Segment(point(0, 0), point(2, 0)),))
        assert gauss_discretize(scene).points == {(0, 0), (1, 0), (2, 0)}

    def test_punctured_segment(self):
        scene = Scene(2, (Segment(point(0, 0), point(2, 0)),), (point(1, 0),))
        assert gauss_discretize(scene).points == {(0, 0), (2, 0)}

    def test_off_lattice_point(self):
        scene = Scene(2, (PointPrim(point("1/2", "1/2")),))
        assert gauss_discretize(scene).points == set()


class TestOffsetDiscretize:
    def test_voxel_center_at_half(self):
        scene = Scene(2, (PointPrim(point("1/2", "1/2")),))
        ds = offset_discretize(scene, Fraction(1, 2))
        assert ds.points == {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_voxel_center_below_half(self):
        scene = Scene(2, (PointPrim(point("1/2", "1/2")),))
        assert offset_discretize(scene, Fraction(49, 100)).points == set()

    def test_fig_left_frozen_and_cross_checked(self, fig_left):
        ds = offset_discretize(fig_left, Fraction(1, 2))
        assert ds.points == FIG_LEFT_DELTA
        assert _brute_force_discretize(fig_left, Fraction(1, 2)) == FIG_LEFT_DELTA

    def test_fig_right_frozen_and_cross_checked(self, fig_right):
        ds = offset_discretize(fig_right, Fraction(1, 4))
        assert ds.points == FIG_RIGHT_DELTA
        assert _brute_force_discretize(fig_right, Fraction(1, 4)) == FIG_RIGHT_DELTA

    @given(
        st.fractions(min_value=0, max_value=2, max_denominator=8),
        st.fractions(min_value=0, max_value=2, max_denominator=8),
    )
    @settings(max_examples=40, deadline=None)
    def test_monotone_in_radius(self, r2a, r2b):
        scene = Scene(
            2,
            (Segment(point("-1/2", "-1/2"), point("3/2", "3/2")),),
            (point("1/2", "1/2"),),
        )
        lo, hi = min(r2a, r2b), max(r2a, r2b)
        assert offset_discretize(scene, lo).points <= offset_discretize(scene, hi).points

    def test_union_law(self):
        prims = (
            Polyline((point(0, 0), point(1, 1), point(2, 0))),
            PointPrim(point(3, "1/2")),
        )
        punctures = (point("1/2", "1/2"), point("3/2", "1/2"))
        whole = Scene(2, prims, punctures)
        part_a = Scene(2, (prims[0],), punctures)
        part_b = Scene(2, (prims[1],))
        for r2 in (0, Fraction(1, 2), Fraction(3, 4), 2):
            got = offset_discretize(whole, r2).points
            want = offset_discretize(part_a, r2).points | offset_discretize(part_b, r2).points
            assert got == want

    def test_translation_equivariance(self, fig_left):
        t = (3, -2)
        base = offset_discretize(fig_left, Fraction(1, 2))
        moved = offset_discretize(fig_left.translate(t), Fraction(1, 2))
        assert moved.points == base.translate(t).points

    def test_coordinate_permutation_equivariance(self, fig_right):
        swapped = Scene(
            2,
            (Segment(point("1/2", "-1/2"), point("1/2", "5/2")),),
            (point("1/2", 1),),
        )
        base = offset_discretize(fig_right, Fraction(1, 4)).points
        got = offset_discretize(swapped, Fraction(1, 4)).points
        assert got == {(y, x) for x, y in base}

    def test_members_stay_clear_of_box_walls(self):
        # the inflated enumeration box must never clip: every member keeps
        # at least one cell of margin to every wall
        rng = random.Random(17)
        for trial in range(12):
            n = rng.choice((2, 3))
            scene = Scene(
                n,
                (
                    Segment(
                        Point(tuple(Fraction(rng.randint(-8, 8), 2) for _ in range(n))),
                        Point(tuple(Fraction(rng.randint(9, 16), 2) for _ in range(n))),
                    ),
                ),
            )
            r2 = Fraction(rng.randint(1, 12), 4)
            lo, hi = enumeration_box(scene, r2)
            for z in offset_discretize(scene, r2):
                assert all(l < c < h for c, l, h in zip(z, lo, hi))

    def test_fact_one_at_half_sqrt_n(self):
        rng = random.Random(5)
        for n in (2, 3, 4):
            for _ in range(40):
                center = Point(
                    tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(n))
                )
                scene = Scene(n, (PointPrim(center),))
                assert offset_discretize(scene, Fraction(n, 4)).points

    def test_fact_four_ball_connectivity(self):
        rng = random.Random(6)
        for n in (2, 3):
            for _ in range(25):
                center = Point(
                    tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 5)) for _ in range(n))
                )
                r = Fraction(rng.randint(2, 14), 6)
                ball_points = offset_discretize(Scene(n, (PointPrim(center),)), r * r)
                if ball_points.points:
                    assert is_k_connected(ball_points, n - 1)


class TestAdjacency:
    def test_examples(self):
        assert k_adjacent((0, 0), (1, 1), 0) is True
        assert k_adjacent((0, 0), (1, 1), 1) is False
        assert k_adjacent((0, 0), (0, 2), 0) is False
        assert k_adjacent((0, 0), (0, 2), 1) is False
        assert k_adjacent((0, 0, 0), (1, 1, 0), 1) is True
        assert k_adjacent((0, 0, 0), (1, 1, 0), 2) is False

    def test_not_self_adjacent(self):
        assert k_adjacent((2, 2), (2, 2), 0) is False

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            k_adjacent((0, 0), (1, 0), 2)

    @given(
        st.integers(2, 4).flatmap(
            lambda n: st.tuples(
                st.tuples(*(st.integers(-2, 2) for _ in range(n))),
                st.tuples(*(st.integers(-2, 2) for _ in range(n))),
                st.integers(0, n - 2),
            )
        )
    )
    @settings(max_examples=120)
    def test_nesting(self, pqk):
        p, q, k = pqk
        if k_adjacent(p, q, k + 1):
            assert k_adjacent(p, q, k)


class TestComponents:
    def test_empty(self):
        assert components(DiscreteSet(2, frozenset()), 0).count == 0
        assert is_k_connected(DiscreteSet(2, frozenset()), 1)

    def test_singleton(self):
        labeling = components(DiscreteSet(2, frozenset({(5, 7)})), 1)
        assert labeling.count == 1
        assert labeling.labels == {(5, 7): 0}

    def test_fig_left_counts(self, fig_left):
        ds = offset_discretize(fig_left, Fraction(1, 2))
        assert components(ds, 1).count == 2
        assert components(ds, 0).count == 1

    def test_fig_right_counts(self):
        ds = DiscreteSet(2, frozenset(FIG_RIGHT_DELTA))
        assert not is_k_connected(ds, 0)
        assert components(ds, 0).count == 2

    def test_pair_diagonal(self):
        ds = DiscreteSet(2, frozenset({(0, 0), (1, 1)}))
        assert is_k_connected(ds, 0)
        assert not is_k_connected(ds, 1)

    def test_deterministic_label_order(self):
        ds = DiscreteSet(2, frozenset({(5, 5), (0, 0), (5, 6), (0, 1)}))
        labeling = components(ds, 1)
        assert labeling.labels[(0, 0)] == 0 and labeling.labels[(0, 1)] == 0
        assert labeling.labels[(5, 5)] == 1 and labeling.labels[(5, 6)] == 1
        assert labeling.groups() == [[(0, 0), (0, 1)], [(5, 5), (5, 6)]]

    def test_against_brute_force_path_search(self):
        rng = random.Random(99)
        for trial in range(25):
            n = rng.choice((2, 3))
            k = rng.randint(0, n - 1)
            pts = {
                tuple(rng.randint(-3, 3) for _ in range(n))
                for _ in range(rng.randint(0, 18))
            }
            labeling = components(DiscreteSet(n, frozenset(pts)), k)
            got = sorted(
                (frozenset(g) for g in labeling.groups()), key=lambda c: min(c)
            ) if pts else []
            assert got == _brute_force_components(pts, k, n)


class TestVoxels:
    def test_point_in_cell_interior(self):
        cover = voxel_cover(Scene(2, (PointPrim(point("1/2", "1/2")),)))
        assert [v.anchor for v in cover] == [(0, 0)]

    def test_segment_cover(self):
        scene = Scene(2, (Segment(point("1/2", "1/2"), point("5/2", "1/2")),))
        assert [v.anchor for v in voxel_cover(scene)] == [(0, 0), (1, 0), (2, 0)]

    def test_shared_facet_point_in_both_cells(self):
        cover = voxel_cover(Scene(2, (PointPrim(point(1, "1/2")),)))
        assert [v.anchor for v in cover] == [(0, 0), (1, 0)]

    def test_puncture_only_contact_excluded(self):
        # the segment touches the right-hand cell only at its punctured tip
        scene = Scene(
            2,
            (Segment(point("-1/2", "1/2"), point(1, "1/2")),),
            (point(1, "1/2"),),
        )
        assert [v.anchor for v in voxel_cover(scene)] == [(-1, 0), (0, 0)]

    def test_ball_cover(self):
        cover = voxel_cover(Scene(2, (Ball(point("1/2", "1/2"), Fraction(1, 4)),)))
        assert [v.anchor for v in cover] == [(0, 0)]

    def test_order_single_voxel(self):
        order = order_voxels(Scene(2, (PointPrim(point("1/2", "1/2")),)))
        assert [v.anchor for v in order] == [(0, 0)]

    def test_order_segment(self):
        scene = Scene(2, (Segment(point("1/2", "1/2"), point("5/2", "1/2")),))
        order = order_voxels(scene)
        assert [v.anchor for v in order] == [(0, 0), (1, 0), (2, 0)]
        assert voxel_order_property_holds(scene, order)

    def test_order_fails_with_certificate_for_split_scene(self):
        scene = Scene(2, (PointPrim(point("1/2", "1/2")), PointPrim(point("7/2", "1/2"))))
        with pytest.raises(VoxelOrderError) as err:
            order_voxels(scene)
        assert err.value.ordered and err.value.remaining

    def test_order_on_punctured_chains(self):
        from offsetgrid.verify import SceneGenSpec, gen_scene

        for seed in range(12):
            scene = gen_scene(SceneGenSpec(seed=seed, dim=2))
            order = order_voxels(scene)
            assert voxel_order_property_holds(scene, order)

    def test_checker_rejects_bad_order(self):
        scene = Scene(2, (Segment(point("1/2", "1/2"), point("5/2", "1/2")),))
        good = order_voxels(scene)
        bad = [good[1], good[0], good[2]]  # (1,0) first, then (0,0): fine...
        rotated = [good[2], good[0], good[1]]  # (2,0) then (0,0): detached
        assert voxel_order_property_holds(scene, bad)
        assert not voxel_order_property_holds(scene, rotated)

    def test_checker_requires_cover_bijection(self):
        scene = Scene(2, (Segment(point("1/2", "1/2"), point("5/2", "1/2")),))
        order = order_voxels(scene)
        assert not voxel_order_property_holds(scene, order[:-1])
        assert not voxel_order_property_holds(scene, order + [Voxel((9, 9))])
