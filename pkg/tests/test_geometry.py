import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cambarrier.geometry import (
    TAU,
    CameraParams,
    CameraPose,
    Point2D,
    Segment,
    bearing_between,
    circular_gaps,
    covers,
    full_view_covered_point,
    full_view_covered_segment,
    max_angular_gap,
    midpoint_shortcut_covered,
    normalize_bearing,
)
from cambarrier.line_model import place_line_deployment

from helpers import boundary_margin, ref_full_view_point

NORTH = math.pi / 2
DEG = math.pi / 180.0


def cam(x, y, facing, r=1.0, phi=math.pi / 3, theta=math.pi / 4, cid=0):
    return CameraPose(cid, Point2D(x, y), facing, CameraParams(r=r, phi=phi, theta=theta))


class TestTypes:
    def test_point_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Point2D(float("nan"), 0.0)
        with pytest.raises(ValueError):
            Point2D(0.0, float("inf"))

    def test_params_validation(self):
        with pytest.raises(ValueError):
            CameraParams(r=0.0, phi=1.0, theta=0.5)
        with pytest.raises(ValueError):
            CameraParams(r=1.0, phi=0.0, theta=0.5)
        with pytest.raises(ValueError):
            CameraParams(r=1.0, phi=1.0, theta=math.pi)

    def test_comm_range_is_twice_radius(self):
        assert CameraParams(r=7.5, phi=1.0, theta=0.5).comm_range == 15.0

    def test_pose_normalizes_facing(self):
        assert cam(0, 0, -math.pi / 2).facing == pytest.approx(1.5 * math.pi)

    def test_segment_rejects_degenerate(self):
        with pytest.raises(ValueError):
            Segment(Point2D(1, 2), Point2D(1, 2))

    def test_normalize_bearing_range(self):
        for a in (-10.0, -1e-18, 0.0, 1.0, TAU, TAU + 0.5, 100.0):
            b = normalize_bearing(a)
            assert 0.0 <= b < TAU

    def test_bearing_between_wraps(self):
        assert bearing_between(350 * DEG, 10 * DEG) == pytest.approx(20 * DEG)


class TestCovers:
    def test_on_axis_inside_radius(self):
        assert covers(cam(0, 0, NORTH), Point2D(0, 0.5))

    def test_outside_radius(self):
        assert not covers(cam(0, 0, NORTH), Point2D(0, 1.5))

    def test_off_axis_angle(self):
        # 45 degrees off a 60-degree field of view
        assert not covers(cam(0, 0, NORTH), Point2D(0.5, 0.5))

    def test_coincident_point_is_covered(self):
        assert covers(cam(2, 3, 0.1), Point2D(2, 3))

    def test_boundary_gets_epsilon_slack(self):
        # exactly on the circle counts, clearly beyond it does not
        assert covers(cam(0, 0, NORTH, r=1.0), Point2D(0, 1.0))
        assert not covers(cam(0, 0, NORTH, r=1.0), Point2D(0, 1.0 + 1e-6))
        # same for the angular edge: the half-FoV ray itself is in
        edge = cam(0, 0, NORTH, phi=math.pi / 2)
        on_ray = Point2D(math.sin(math.pi / 4) * 0.5, math.cos(math.pi / 4) * 0.5)
        assert covers(edge, on_ray)

    def test_rigid_motion_invariance(self):
        rng = np.random.default_rng(7)
        for _ in range(10_000):
            cx, cy, px, py = rng.uniform(-10, 10, 4)
            facing = rng.uniform(0, TAU)
            r = rng.uniform(0.1, 5.0)
            phi = rng.uniform(0.1, TAU)
            c = cam(cx, cy, facing, r=r, phi=phi)
            p = Point2D(px, py)
            tx, ty = rng.uniform(-20, 20, 2)
            rot = rng.uniform(0, TAU)
            cosr, sinr = math.cos(rot), math.sin(rot)

            def move(x, y):
                return (x * cosr - y * sinr + tx, x * sinr + y * cosr + ty)

            c2 = cam(*move(cx, cy), facing + rot, r=r, phi=phi)
            p2 = Point2D(*move(px, py))
            assert covers(c, p) == covers(c2, p2)


class TestMaxAngularGap:
    def test_symmetric_square(self):
        assert max_angular_gap([0, 90 * DEG, 180 * DEG, 270 * DEG]) == pytest.approx(90 * DEG)

    def test_single_bearing_full_circle(self):
        assert max_angular_gap([0.0]) == pytest.approx(TAU)

    def test_wraparound(self):
        assert max_angular_gap([350 * DEG, 10 * DEG]) == pytest.approx(340 * DEG)

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="no bearings"):
            max_angular_gap([])

    @given(st.lists(st.floats(0, TAU - 1e-12), min_size=1, max_size=24))
    def test_gaps_sum_to_full_circle(self, bearings):
        gaps = circular_gaps(bearings)
        assert sum(gaps) == pytest.approx(TAU, abs=1e-9)
        g = max_angular_gap(bearings)
        assert 0.0 < g <= TAU + 1e-12
        assert g >= TAU / len(bearings) - 1e-12


class TestFullViewPoint:
    def test_four_compass_cameras(self):
        p = Point2D(0, 0)
        cams = [
            cam(0, 0.5, 1.5 * math.pi, cid=0),
            cam(0.5, 0, math.pi, cid=1),
            cam(0, -0.5, NORTH, cid=2),
            cam(-0.5, 0, 0.0, cid=3),
        ]
        assert full_view_covered_point(p, cams, math.pi / 4)

    def test_three_bearings_with_hole(self):
        p = Point2D(0, 0)
        cams = [
            cam(0.5, 0, math.pi, cid=0),
            cam(0, 0.5, 1.5 * math.pi, cid=1),
            cam(-0.5, 0, 0.0, cid=2),
        ]
        # bearings 0, 90, 180: the southern half is a 180-degree hole
        assert not full_view_covered_point(p, cams, math.pi / 4)

    def test_no_covering_camera(self):
        assert not full_view_covered_point(Point2D(0, 0), [cam(10, 10, 0.0)], math.pi / 4)

    def test_coincident_camera_contributes_no_bearing(self):
        assert not full_view_covered_point(Point2D(1, 1), [cam(1, 1, 0.0)], math.pi / 4)

    def test_axis_exemption_pins_behavior(self):
        # One camera north, one south, nothing east or west: passes only
        # because the crossing-line directions are exempt.
        p = Point2D(0, 0)
        cams = [cam(0, 0.5, 1.5 * math.pi, cid=0), cam(0, -0.5, NORTH, cid=1)]
        assert full_view_covered_point(p, cams, math.pi / 4, axis=0.0)
        assert not full_view_covered_point(p, cams, math.pi / 4, axis=None)
        # rotating the exempt axis to north/south removes the help
        assert not full_view_covered_point(p, cams, math.pi / 4, axis=NORTH)

    def test_monotone_in_theta_and_cameras(self):
        rng = np.random.default_rng(11)
        p = Point2D(0, 0)
        for _ in range(300):
            k = rng.integers(1, 7)
            cams = [
                cam(*rng.uniform(-2, 2, 2), rng.uniform(0, TAU), r=rng.uniform(0.5, 4), phi=rng.uniform(0.5, TAU), cid=i)
                for i in range(k)
            ]
            t1, t2 = sorted(rng.uniform(0.05, math.pi / 2, 2))
            if full_view_covered_point(p, cams, t1):
                assert full_view_covered_point(p, cams, t2)
            extra = cams + [cam(*rng.uniform(-2, 2, 2), rng.uniform(0, TAU), r=3.0, phi=TAU, cid=99)]
            if full_view_covered_point(p, cams, t1):
                assert full_view_covered_point(p, extra, t1)

    def test_scaling_toward_point_preserves_coverage(self):
        p = Point2D(3, -2)
        rng = np.random.default_rng(13)
        theta = math.pi / 4
        for _ in range(100):
            k = int(rng.integers(4, 9))
            bearings = np.sort(rng.uniform(0, TAU, k))
            if max(np.diff(bearings, append=bearings[0] + TAU)) > 2 * theta:
                continue
            for c in (1.0, 0.7, 0.2):
                cams = []
                for i, b in enumerate(bearings):
                    d = 0.8 * c
                    pos = Point2D(p.x + d * math.cos(b), p.y + d * math.sin(b))
                    cams.append(CameraPose(i, pos, normalize_bearing(b + math.pi), CameraParams(1.0, math.pi / 2, theta)))
                assert full_view_covered_point(p, cams, theta, axis=None)

    def test_theta_out_of_range_raises(self):
        with pytest.raises(ValueError):
            full_view_covered_point(Point2D(0, 0), [], 0.0)
        with pytest.raises(ValueError):
            full_view_covered_point(Point2D(0, 0), [], 2.0)


@st.composite
def scenes(draw):
    k = draw(st.integers(0, 6))
    coord = st.floats(-8, 8)
    cams = []
    for i in range(k):
        cams.append(
            CameraPose(
                i,
                Point2D(draw(coord), draw(coord)),
                draw(st.floats(0, TAU - 1e-9)),
                CameraParams(
                    r=draw(st.floats(0.2, 10.0)),
                    phi=draw(st.floats(0.2, TAU)),
                    theta=math.pi / 4,
                ),
            )
        )
    p = Point2D(draw(coord), draw(coord))
    theta = draw(st.floats(0.05, math.pi / 2))
    axis = draw(st.sampled_from([None, 0.0, 1.2345]))
    return p, cams, theta, axis


class TestVectorizedAgreement:
    @settings(max_examples=150, deadline=None)
    @given(scenes())
    def test_library_matches_plain_math_reference(self, scene):
        p, cams, theta, axis = scene
        assume(boundary_margin(p, cams) > 1e-6)
        assert full_view_covered_point(p, cams, theta, axis=axis) == ref_full_view_point(
            p, cams, theta, axis=axis
        )

    @settings(max_examples=60, deadline=None)
    @given(scenes())
    def test_segment_equals_pointwise_conjunction(self, scene):
        _, cams, theta, axis = scene
        seg = Segment(Point2D(-3, 0.5), Point2D(3, -0.5))
        samples = 13
        t = np.linspace(0, 1, samples)
        pts = [Point2D(seg.a.x + u * (seg.b.x - seg.a.x), seg.a.y + u * (seg.b.y - seg.a.y)) for u in t]
        assume(all(boundary_margin(q, cams) > 1e-6 for q in pts))
        expected = all(ref_full_view_point(q, cams, theta, axis=axis) for q in pts)
        assert full_view_covered_segment(seg, cams, theta, samples=samples, axis=axis) == expected


class TestSegment:
    def test_empty_cameras_false(self):
        seg = Segment(Point2D(0, 0), Point2D(1, 0))
        assert not full_view_covered_segment(seg, [], math.pi / 4)

    def test_samples_validation(self):
        seg = Segment(Point2D(0, 0), Point2D(1, 0))
        with pytest.raises(ValueError):
            full_view_covered_segment(seg, [], math.pi / 4, samples=1)

    def test_canonical_subline_passes_and_halved_radius_fails(self):
        r = 5.0
        barrier = Segment(Point2D(0, 0), Point2D(100, 0))
        dep = place_line_deployment(barrier, r)
        sub = Segment(Point2D(0, 0), Point2D(dep.params.delta, 0))
        assert full_view_covered_segment(sub, list(dep.cameras), math.pi / 4, samples=101)
        # cross-check every sample against the plain-math reference
        for u in np.linspace(0, 1, 101):
            q = Point2D(u * dep.params.delta, 0.0)
            assert ref_full_view_point(q, dep.cameras, math.pi / 4)
        halved = [
            CameraPose(c.id, c.position, c.facing, CameraParams(c.params.r / 2, c.params.phi, c.params.theta))
            for c in dep.cameras
        ]
        assert not full_view_covered_segment(sub, halved, math.pi / 4, samples=101)


class TestMidpointShortcut:
    def test_canonical_sublines_pass(self):
        dep = place_line_deployment(Segment(Point2D(0, 0), Point2D(100, 0)), 5.0)
        delta = dep.params.delta
        for k in range(5):
            sub = Segment(Point2D(k * delta, 0), Point2D((k + 1) * delta, 0))
            assert midpoint_shortcut_covered(sub, list(dep.cameras), math.pi / 4)
            # agreement with the sampling check under canonical geometry
            assert full_view_covered_segment(sub, list(dep.cameras), math.pi / 4, samples=1001)

    def test_empty_cameras_false(self):
        assert not midpoint_shortcut_covered(Segment(Point2D(0, 0), Point2D(1, 0)), [], math.pi / 4)

    def test_single_camera_above_midpoint_false(self):
        seg = Segment(Point2D(0, 0), Point2D(2, 0))
        lone = cam(1.0, 0.5, 1.5 * math.pi, r=2.0, phi=math.pi)
        assert not midpoint_shortcut_covered(seg, [lone], math.pi / 4)
