"""Command-line front end.

Subcommands: plan-line, deploy-grid, barrier, k-barrier, simulate, fig3.
Exit codes: 0 success, 2 invalid configuration or arguments, 3 infeasible
input (for example cameras outside the region).
"""

import argparse
import json
import math
import sys
from dataclasses import replace
from pathlib import Path

from .barrier_graph import build_graph, distinct_cameras, k_barrier_count, prune_degree_one, shortest_barrier
from .geometry import EPS, Point2D, Segment
from .grid_deploy import CameraOutsideRegionError, grid_length_bound, run_algorithm1, staffed_cells
from .line_model import place_line_deployment
from .serialize import (
    barrier_to_dict,
    camera_from_dict,
    dumps,
    graph_to_dict,
    line_deployment_to_dict,
    plan_from_dict,
    plan_to_dict,
    sweep_csv_text,
)
from .simulate import (
    ScenarioConfig,
    coverage_probability_sweep,
    fig3_sweep,
    with_overrides,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _cmd_plan_line(args) -> int:
    barrier = Segment(Point2D(0.0, 0.0), Point2D(args.length, 0.0))
    dep = place_line_deployment(barrier, args.r, theta=args.theta)
    _emit(dumps(line_deployment_to_dict(dep)), args.out)
    return 0


def _cmd_deploy_grid(args) -> int:
    cameras = [camera_from_dict(entry) for entry in _load_json(args.cameras)]
    if args.d is not None:
        d = args.d
    else:
        if not cameras:
            raise ValueError("--d is required when the camera file is empty")
        d = grid_length_bound(min(c.params.r for c in cameras))
    plan = run_algorithm1(args.width, args.height, cameras, d)
    _emit(dumps(plan_to_dict(plan)), args.out)
    return 0


def _cmd_barrier(args) -> int:
    plan = plan_from_dict(_load_json(args.plan))
    covered = staffed_cells(plan)
    graph = build_graph(covered, plan.grid.m, plan.grid.n)
    result = shortest_barrier(prune_degree_one(graph))
    if result.exists:
        result = replace(result, camera_count=distinct_cameras(result, plan))
    payload = barrier_to_dict(result)
    payload["graph"] = graph_to_dict(graph)
    _emit(dumps(payload), args.out)
    return 0


def _cmd_k_barrier(args) -> int:
    plan = plan_from_dict(_load_json(args.plan))
    covered = staffed_cells(plan)
    m, n = plan.grid.m, plan.grid.n
    counts = [sum(1 for i in range(1, m + 1) if (i, j) in covered) for j in range(1, n + 1)]
    _emit(dumps({"k": k_barrier_count(covered, m, n), "column_counts": counts}), args.out)
    return 0


def _cmd_simulate(args) -> int:
    config = ScenarioConfig.from_dict(_load_json(args.config))
    config = with_overrides(
        config, seed=args.seed, trials=args.trials, mode=args.mode, samples=args.samples
    )
    result = coverage_probability_sweep(config)
    _emit(sweep_csv_text(result), args.out)
    return 0


def _cmd_fig3(args) -> int:
    if args.step <= 0:
        raise ValueError(f"step must be positive, got {args.step}")
    r_values = []
    k = 0
    while True:
        r = args.r_min + k * args.step
        if r > args.r_max + EPS:
            break
        r_values.append(r)
        k += 1
    if not r_values:
        raise ValueError("empty radius range")
    _emit(sweep_csv_text(fig3_sweep(args.length, r_values)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cambarrier",
        description="Plan, verify and simulate full-view camera barriers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan-line", help="emit the canonical two-row line deployment as JSON")
    p.add_argument("--length", type=float, required=True, help="barrier length in meters")
    p.add_argument("--r", type=float, required=True, help="sensing radius in meters")
    p.add_argument("--theta", type=float, default=math.pi / 4, help="recognition half-window, radians")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_plan_line)

    p = sub.add_parser("deploy-grid", help="run the grid relocation pipeline on a camera file")
    p.add_argument("--cameras", required=True, help="JSON list of cameras")
    p.add_argument("--width", type=float, required=True)
    p.add_argument("--height", type=float, required=True)
    p.add_argument("--d", type=float, default=None, help="cell side; defaults to the verifiable bound")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_deploy_grid)

    p = sub.add_parser("barrier", help="extract the minimum-camera barrier from a plan JSON")
    p.add_argument("--plan", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_barrier)

    p = sub.add_parser("k-barrier", help="column-minimum barrier multiplicity of a plan JSON")
    p.add_argument("--plan", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_k_barrier)

    p = sub.add_parser("simulate", help="run a coverage-probability sweep from a config JSON")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--mode", choices=("static", "mobile"), default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("fig3", help="camera count vs sensing radius for a fixed barrier length")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--r-min", dest="r_min", type=float, required=True)
    p.add_argument("--r-max", dest="r_max", type=float, required=True)
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_fig3)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CameraOutsideRegionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
