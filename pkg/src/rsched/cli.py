"""Batch command-line surface: solve, validate, compare, gadget.

Exit codes are a stable contract: 0 success, 2 validation failure,
3 no feasible schedule set within the search horizon.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .cyclesolve import cycle_approximation_report, solve_cycle
from .errors import HorizonExhaustedError, RschedError
from .gadgets import gadget_complete, gadget_planar, gadget_star
from .io import (
    graph_from_obj,
    instance_to_json,
    load_instance,
    load_schedule_set,
    save_schedule_set,
)
from .model import CYCLE, GENERAL, PATH, TADPOLE, build_cycle, build_path, make_instance
from .oracle import exact_optimum
from .pathsolve import (
    approximation_report,
    solve_k_partition_dp,
    solve_one_robot,
    solve_two_robot_partition,
)
from .schedule import ScheduleSet, gantt, schedule_span, validate_set
from .tadpolesolve import solve_tadpole

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3

AUTO_BY_KIND = {PATH: "k-dp", CYCLE: "cycle", TADPOLE: "tadpole", GENERAL: "oracle"}


def _dispatch(inst, algo):
    """Run one solver; returns (ScheduleSet, makespan, optimal_claimed, table)."""
    if algo == "auto":
        algo = AUTO_BY_KIND[inst.graph.kind]
    if algo == "one-robot":
        if inst.k != 1:
            raise RschedError(f"one-robot solver needs k=1, got k={inst.k}")
        sched = solve_one_robot(inst.graph, inst.tasks, inst.robots[0].start)
        ss = ScheduleSet(schedules=(sched,))
        return ss, schedule_span(sched, inst), True, None
    if algo == "two-partition":
        res = solve_two_robot_partition(inst)
        return res.schedule_set, res.makespan, res.optimal_claimed, None
    if algo == "k-dp":
        res = solve_k_partition_dp(inst)
        return res.schedule_set, res.makespan, res.optimal_claimed, res.table
    if algo == "cycle":
        res = solve_cycle(inst)
        return res.schedule_set, res.makespan, res.optimal_claimed, None
    if algo == "tadpole":
        res = solve_tadpole(inst)
        return res.schedule_set, res.makespan, res.optimal_claimed, None
    if algo == "oracle":
        makespan, ss = exact_optimum(inst)
        return ss, makespan, True, None
    raise RschedError(f"unknown algorithm {algo!r}")


def cmd_solve(args):
    inst = load_instance(args.infile)
    t0 = time.perf_counter()
    try:
        ss, makespan, optimal_claimed, table = _dispatch(inst, args.algo)
    except HorizonExhaustedError as exc:
        print(f"infeasible within horizon {exc.horizon}")
        return EXIT_INFEASIBLE
    wall = time.perf_counter() - t0
    verdict = validate_set(ss, inst)
    print(f"algorithm: {args.algo}")
    print(f"makespan: {makespan}")
    print(f"optimal_claimed: {str(optimal_claimed).lower()}")
    print(f"valid: {str(verdict.valid).lower()}")
    print(f"wall_time_s: {wall:.4f}")
    if args.gantt:
        sys.stdout.write(gantt(ss, inst))
    if args.out:
        save_schedule_set(ss, args.out)
    if args.dp_csv and table is not None:
        with open(args.dp_csv, "w", encoding="utf-8") as fh:
            fh.write(table.to_csv())
    if not verdict.valid:
        for v in verdict.violations:
            print(f"violation: {v}")
        return EXIT_INVALID
    return EXIT_OK


def cmd_validate(args):
    inst = load_instance(args.infile)
    ss = load_schedule_set(args.schedule)
    verdict = validate_set(ss, inst)
    print(f"valid: {str(verdict.valid).lower()}")
    print(f"span: {verdict.span}")
    for v in verdict.violations:
        print(f"violation: {v}")
    return EXIT_OK if verdict.valid else EXIT_INVALID


def random_instance(rng, shape, n, k, m, dmax):
    """One random path or cycle instance at the given ceilings."""
    n = rng.randint(3 if shape == "cycle" else 2, n)
    k = rng.randint(1, min(k, n - 1))
    m = rng.randint(1, min(m, n))
    graph = build_cycle(n) if shape == "cycle" else build_path(n)
    task_vertices = rng.sample(range(1, n + 1), m)
    tasks = [(v, rng.randint(1, dmax)) for v in task_vertices]
    starts = rng.sample(range(1, n + 1), k)
    return make_instance(graph, tasks, starts)


def _parse_random_spec(text):
    parts = text.split(",")
    if len(parts) != 7:
        raise RschedError(
            "--random wants seed,count,shape,n,k,m,dmax (shape: path|cycle)"
        )
    seed, count = int(parts[0]), int(parts[1])
    shape = parts[2]
    if shape not in ("path", "cycle"):
        raise RschedError(f"unknown random shape {shape!r}")
    n, k, m, dmax = (int(x) for x in parts[3:])
    return seed, count, shape, n, k, m, dmax


def cmd_compare(args):
    batch = []
    if args.infile:
        for path in args.infile:
            batch.append((path, load_instance(path)))
    if args.random:
        seed, count, shape, n, k, m, dmax = _parse_random_spec(args.random)
        rng = random.Random(seed)
        for i in range(count):
            batch.append((f"{shape}-{seed}-{i}", random_instance(rng, shape, n, k, m, dmax)))
    if not batch:
        raise RschedError("compare needs --in files or a --random spec")

    print("instance,algo,n,k,m,makespan,oracle_makespan,ratio,wall_time_s")
    exceeded = False
    for name, inst in batch:
        t0 = time.perf_counter()
        if inst.graph.kind == CYCLE:
            algo = "cycle"
            report = cycle_approximation_report(inst)
        else:
            algo = "two-partition" if inst.k == 2 else "k-dp"
            report = approximation_report(inst)
        wall = time.perf_counter() - t0
        print(
            f"{name},{algo},{inst.n},{inst.k},{inst.m},"
            f"{report.solver_span},{report.oracle_span},{report.ratio:.4f},{wall:.4f}"
        )
        if report.ratio > report.bound:
            exceeded = True
    return EXIT_INVALID if exceeded else EXIT_OK


def _parse_values(text):
    return [int(x) for x in text.split(",") if x]


def cmd_gadget(args):
    if args.kind == "star":
        result = gadget_star(_parse_values(args.set))
    elif args.kind == "complete":
        result = gadget_complete(_parse_values(args.set), args.k)
    else:
        # the graph file is either a bare graph object or a full instance
        # JSON whose tasks/robots are ignored
        with open(args.graph, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        graph = graph_from_obj(obj["graph"] if "graph" in obj else obj)
        result = gadget_planar(graph, args.start)
    print(instance_to_json(result.instance))
    print(f"threshold: {result.threshold}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rsched",
        description="Collision-free multi-robot scheduling on paths, cycles and tadpoles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("--in", dest="infile", required=True)
    p_solve.add_argument(
        "--algo",
        default="auto",
        choices=["auto", "one-robot", "two-partition", "k-dp", "cycle", "tadpole", "oracle"],
    )
    p_solve.add_argument("--out", default=None)
    p_solve.add_argument("--gantt", action="store_true")
    p_solve.add_argument("--dp-csv", dest="dp_csv", default=None)
    p_solve.set_defaults(func=cmd_solve)

    p_val = sub.add_parser("validate", help="validate a schedule set")
    p_val.add_argument("--in", dest="infile", required=True)
    p_val.add_argument("--schedule", required=True)
    p_val.set_defaults(func=cmd_validate)

    p_cmp = sub.add_parser("compare", help="solver vs exhaustive search")
    p_cmp.add_argument("--in", dest="infile", nargs="*", default=None)
    p_cmp.add_argument("--random", default=None, help="seed,count,shape,n,k,m,dmax")
    p_cmp.set_defaults(func=cmd_compare)

    p_gad = sub.add_parser("gadget", help="emit a hardness gadget instance")
    gsub = p_gad.add_subparsers(dest="kind", required=True)
    g_star = gsub.add_parser("star")
    g_star.add_argument("--set", required=True)
    g_star.set_defaults(func=cmd_gadget)
    g_comp = gsub.add_parser("complete")
    g_comp.add_argument("--set", required=True)
    g_comp.add_argument("--k", type=int, required=True)
    g_comp.set_defaults(func=cmd_gadget)
    g_pla = gsub.add_parser("planar")
    g_pla.add_argument("--graph", required=True)
    g_pla.add_argument("--start", type=int, required=True)
    g_pla.set_defaults(func=cmd_gadget)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RschedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
