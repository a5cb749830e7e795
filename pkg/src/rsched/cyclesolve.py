"""Cycle solver: try every edge removal, solve the cut-open path, keep
the best. With equal task durations some optimal schedule leaves an edge
untraversed, so the best cut is exactly optimal; for general durations
the same sweep is a k-approximation.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import oracle as _oracle
from .errors import PlanDeadlockError, RepairOverrunError, TopologyError
from .model import CYCLE
from .motion import realized_span, schedule_set_from_actions
from .pathsolve import (
    ApproximationReport,
    _equal_durations,
    solve_sorted_path,
)
from .schedule import ScheduleSet


@dataclass(frozen=True)
class CycleSolveResult:
    schedule_set: ScheduleSet
    removed_edge: tuple
    makespan: int
    optimal_claimed: bool


def _cut_edge(n, i):
    """Edge removed by cut i: (i, i+1), with (n, 1) stored as (1, n)."""
    return (i, i + 1) if i < n else (1, n)


def _relabel(n, i):
    """After cutting edge (v_i, v_{i+1}), the path reads v_{i+1}..v_i."""
    new = {v: ((v - i - 1) % n) + 1 for v in range(1, n + 1)}
    old = {w: v for v, w in new.items()}
    return new, old


def solve_cycle(inst):
    """Best cut-open path solution; ties broken by smallest cut index."""
    if inst.graph.kind != CYCLE:
        raise TopologyError(f"expected a cycle instance, got {inst.graph.kind}")
    n = inst.n
    pairs = [(t.vertex, t.duration) for t in inst.tasks]
    equal = _equal_durations(pairs)

    best = None  # (span, cut index, table value, actions, robot ids)
    for i in range(1, n + 1):
        new, old = _relabel(n, i)
        cut_tasks = sorted((new[v], d) for v, d in pairs)
        robots = sorted(inst.robots, key=lambda r: new[r.start])
        starts = [new[r.start] for r in robots]
        try:
            table, actions, span = solve_sorted_path(n, cut_tasks, starts)
        except PlanDeadlockError:
            # this cut boxes a robot into a corner; another cut will not
            continue
        mapped = [
            [
                ("m", old[a[1]], old[a[2]]) if a[0] == "m" else ("w", old[a[1]])
                for a in acts
            ]
            for acts in actions
        ]
        key = (span, i)
        if best is None or key < best[0]:
            best = (key, table.final(), mapped, [r.id for r in robots])

    if best is None:
        raise PlanDeadlockError("every cut-open path realization deadlocked")
    (span, cut_index), table_value, mapped, robot_ids = best
    if equal and span > table_value:
        raise RepairOverrunError(
            f"repair produced span {span} > DP bound {table_value}"
        )
    sched = schedule_set_from_actions(inst, robot_ids, mapped)
    return CycleSolveResult(
        schedule_set=sched,
        removed_edge=_cut_edge(n, cut_index),
        makespan=span,
        optimal_claimed=equal,
    )


def cycle_approximation_report(inst, horizon=None):
    """Solver vs exhaustive-search spans on a cycle; ratio bound is k."""
    solver_span = solve_cycle(inst).makespan
    oracle_span, _ = _oracle.exact_optimum(inst, horizon=horizon)
    ratio = solver_span / oracle_span if oracle_span else 1.0
    return ApproximationReport(
        solver_span=solver_span,
        oracle_span=oracle_span,
        ratio=ratio,
        bound=inst.k,
    )
