"""Protecting a line with two camera rows.

Walks through the closed-form deployment parameters for a 100 m barrier,
places the two rows, and verifies full-view coverage with a dense sweep.
"""

import math

from cambarrier import (
    Point2D,
    Segment,
    camera_density,
    cameras_for_barrier,
    full_view_covered_segment,
    optimal_params,
    place_line_deployment,
    validate_params,
)

R = 5.0
THETA = math.pi / 4
barrier = Segment(Point2D(0.0, 0.0), Point2D(100.0, 0.0))

params = optimal_params(R)
print(f"sensing radius r = {R} m")
print(f"  row offset   h     = {params.h:.6f} m")
print(f"  spot spacing delta = {params.delta:.6f} m  (= 2h)")
print(f"  swing angle  alpha = {params.alpha:.6f} rad  (tan(alpha/2) = {math.tan(params.alpha/2):.3f})")
print(f"  density            = {camera_density(params):.6f} cameras per meter per row")

report = validate_params(params, R, THETA)
print(f"deployment conditions all hold: {report.all_ok}")

deployment = place_line_deployment(barrier, R, theta=THETA)
print(f"placed {len(deployment.cameras)} cameras "
      f"(formula says {cameras_for_barrier(barrier.length(), R)})")

covered = full_view_covered_segment(barrier, list(deployment.cameras), THETA, samples=1001)
print(f"barrier full-view covered at 1001 sample points: {covered}")

# Stretch the spacing 10% and the guarantee collapses.
from dataclasses import replace

stretched = replace(params, delta=params.delta * 1.1)
loose = place_line_deployment(barrier, R, theta=THETA, params=stretched)
covered = full_view_covered_segment(barrier, list(loose.cameras), THETA, samples=1001)
print(f"same check with spacing * 1.1: {covered}")
