"""Solvers for robots on a path: single robot, 2-robot split, k-robot DP.

The single-robot schedule walks to the nearer extreme task first, then
sweeps to the other extreme, finishing every task on that one return
sweep. Multi-robot solvers partition the sorted task list into contiguous
blocks, one per robot in left-to-right order, picking split points with a
k x m dynamic program over block makespans. Block walks are then executed
jointly; transient conflicts are repaired with waits (and by shoving
already-parked robots aside), which never lengthens the critical schedule
on instances with equal task durations.
"""
from __future__ import annotations

import io as _io
from dataclasses import dataclass

import numpy as np

from . import oracle as _oracle
from .errors import (
    PlanDeadlockError,
    PreconditionError,
    RepairOverrunError,
    TopologyError,
)
from .model import PATH, build_path
from .motion import (
    plan_move,
    plan_work,
    realize_plans,
    realized_span,
    schedule_set_from_actions,
)
from .schedule import DoTask, Schedule, ScheduleSet, Walk


def _as_pairs(tasks):
    out = []
    for t in tasks:
        if hasattr(t, "vertex"):
            out.append((t.vertex, t.duration))
        else:
            out.append((int(t[0]), int(t[1])))
    return out


def _check_sorted_tasks(pairs):
    for a, b in zip(pairs, pairs[1:]):
        if a[0] >= b[0]:
            raise PreconditionError("tasks must be strictly sorted by vertex")


def one_robot_span(tasks, start):
    """Closed-form span: walk to the nearer extreme, sweep, work everything."""
    pairs = _as_pairs(tasks)
    if not pairs:
        return 0
    _check_sorted_tasks(pairs)
    first, last = pairs[0][0], pairs[-1][0]
    total = sum(d for _, d in pairs)
    return min(abs(start - first), abs(start - last)) + (last - first) + total


def one_robot_plan(tasks, start):
    """Atomic intents realizing the one-robot schedule.

    Travel to the nearer extreme carries no work; every task is completed
    on the single sweep towards the far extreme (i.e. on the last visit to
    its vertex), which is what lets neighbouring robots slip past earlier.
    """
    pairs = _as_pairs(tasks)
    if not pairs:
        return []
    _check_sorted_tasks(pairs)
    first, last = pairs[0][0], pairs[-1][0]
    if start <= first:
        turn, sweep = first, list(pairs)
    elif start >= last:
        turn, sweep = last, list(reversed(pairs))
    elif last - start <= start - first:
        turn, sweep = last, list(reversed(pairs))
    else:
        turn, sweep = first, list(pairs)
    plan = []
    step = 1 if turn > start else -1
    for v in range(start, turn, step):
        plan.append(plan_move(v, v + step))
    pos = turn
    for v, d in sweep:
        step = 1 if v > pos else -1
        for u in range(pos, v, step):
            plan.append(plan_move(u, u + step))
        plan.extend(plan_work(v) for _ in range(d))
        pos = v
    return plan


def solve_one_robot(path, tasks, start):
    """Optimal schedule for a lone robot on a path (robot id 1)."""
    if path.kind != PATH:
        raise TopologyError(f"expected a path, got {path.kind}")
    pairs = _as_pairs(tasks)
    for v, _ in pairs:
        if not (1 <= v <= path.n):
            raise PreconditionError(f"task vertex {v} outside path 1..{path.n}")
    if not (1 <= start <= path.n):
        raise PreconditionError(f"start {start} outside path 1..{path.n}")
    plan = one_robot_plan(pairs, start)
    segments = []
    walk = []
    i = 0
    while i < len(plan):
        if plan[i][0] == "m":
            walk.append((plan[i][1], plan[i][2]))
            i += 1
        else:
            if walk:
                segments.append(Walk(moves=tuple(walk)))
                walk = []
            v = plan[i][1]
            while i < len(plan) and plan[i][0] == "w":
                i += 1
            segments.append(DoTask(vertex=v))
    if walk:
        segments.append(Walk(moves=tuple(walk)))
    return Schedule(robot=1, segments=tuple(segments))


@dataclass(frozen=True)
class DPTable:
    """Block-partition DP: spans[c][l] is the best makespan for robots
    1..c completing tasks 1..l; splits holds the chosen split point r
    (robot c takes tasks r+1..l). Indices are 1-based, column 0 present."""

    spans: tuple  # (k+1) rows x (m+1) cols, row 0 unused
    splits: tuple

    @property
    def k(self):
        return len(self.spans) - 1

    @property
    def m(self):
        return len(self.spans[0]) - 1

    def rows(self):
        """The k x m table body, matching hand-computed golden tables."""
        return [list(row[1:]) for row in self.spans[1:]]

    def final(self):
        return self.spans[self.k][self.m]

    def to_csv(self):
        buf = _io.StringIO()
        buf.write("c\\l," + ",".join(str(l) for l in range(1, self.m + 1)) + "\n")
        for c, row in enumerate(self.rows(), start=1):
            buf.write(str(c) + "," + ",".join(str(x) for x in row) + "\n")
        return buf.getvalue()


def k_partition_table(tasks, starts):
    """Fill the DP table for sorted tasks and left-to-right sorted starts."""
    pairs = _as_pairs(tasks)
    _check_sorted_tasks(pairs)
    for a, b in zip(starts, starts[1:]):
        if a >= b:
            raise PreconditionError("robot starts must be strictly increasing")
    k, m = len(starts), len(pairs)
    iv = np.array([0] + [v for v, _ in pairs], dtype=np.int64)
    dur = np.array([0] + [d for _, d in pairs], dtype=np.int64)
    dcum = np.cumsum(dur)

    spans = np.zeros((k + 1, m + 1), dtype=np.int64)
    splits = np.zeros((k + 1, m + 1), dtype=np.int64)
    for l in range(1, m + 1):
        sv = starts[0]
        spans[1][l] = (
            min(abs(sv - iv[1]), abs(sv - iv[l])) + iv[l] - iv[1] + dcum[l]
        )
    for c in range(2, k + 1):
        sv = starts[c - 1]
        for l in range(1, m + 1):
            r = np.arange(0, l)
            first = iv[r + 1]
            last = iv[l]
            block = (
                np.minimum(np.abs(sv - first), np.abs(sv - last))
                + last
                - first
                + dcum[l]
                - dcum[r]
            )
            cand = np.maximum(spans[c - 1][r], block)
            # r = l: robot c takes nothing
            cand = np.append(cand, spans[c - 1][l])
            best = int(np.argmin(cand))  # first minimum = smallest r
            splits[c][l] = best
            spans[c][l] = int(cand[best])
    return DPTable(
        spans=tuple(tuple(int(x) for x in row) for row in spans),
        splits=tuple(tuple(int(x) for x in row) for row in splits),
    )


def blocks_from_table(table):
    """Per-robot contiguous task blocks [(lo, hi)] with 1-based task
    indices, (0, -1) meaning an empty block."""
    blocks = [None] * (table.k + 1)
    l = table.m
    for c in range(table.k, 1, -1):
        r = table.splits[c][l]
        blocks[c] = (r + 1, l) if r < l else (0, -1)
        l = r
    blocks[1] = (1, l) if l >= 1 else (0, -1)
    return blocks[1:]


def optimal_block_choices(table, pairs, starts, limit=32):
    """Yield block partitions achieving the DP optimum, DP choice first.

    Different optimal splits differ in realizability: a split that parks an
    idle robot between a worker and its tasks can box the worker into a
    corner, so callers retry with the next choice on deadlock.
    """
    target = table.final()
    first = blocks_from_table(table)
    yield first
    emitted = 1

    def block_span(lo, hi, sv):
        return one_robot_span(pairs[lo - 1 : hi], sv) if lo <= hi else 0

    def rec(c, l, suffix):
        nonlocal emitted
        if emitted >= limit:
            return
        if c == 1:
            if block_span(1, l, starts[0]) <= target:
                blocks = [(1, l) if l >= 1 else (0, -1)] + suffix
                if blocks != first:
                    emitted += 1
                    yield blocks
            return
        for r in range(l + 1):
            if table.spans[c - 1][r] > target:
                continue
            if block_span(r + 1, l, starts[c - 1]) > target:
                continue
            piece = (r + 1, l) if r < l else (0, -1)
            yield from rec(c - 1, r, [piece] + suffix)

    yield from rec(table.k, table.m, [])


def _equal_durations(pairs):
    durations = {d for _, d in pairs}
    return len(durations) <= 1


@dataclass(frozen=True)
class PathSolveResult:
    table: DPTable
    schedule_set: ScheduleSet
    makespan: int
    optimal_claimed: bool


def _realize_blocks(path_n, pairs, starts, blocks):
    """Joint execution of the per-block one-robot walks; actions are in
    the same (sorted) robot order as starts."""
    plans = []
    for sv, (lo, hi) in zip(starts, blocks):
        block = pairs[lo - 1 : hi] if lo >= 1 else []
        plans.append(one_robot_plan(block, sv))
    graph = build_path(path_n)
    return realize_plans(graph, starts, plans)


def solve_sorted_path(path_n, pairs, starts):
    """Table + realized joint actions for presorted input; core of every
    higher-level path/cycle solve. Returns (table, actions, span)."""
    if not pairs:
        table = k_partition_table([], starts)
        actions = [[] for _ in starts]
        return table, actions, 0
    table = k_partition_table(pairs, starts)
    equal = _equal_durations(pairs)
    last_err = None
    for blocks in optimal_block_choices(table, pairs, starts):
        try:
            actions = _realize_blocks(path_n, pairs, starts, blocks)
        except PlanDeadlockError as exc:
            last_err = exc
            continue
        span = realized_span(actions)
        if equal and span > table.final():
            last_err = RepairOverrunError(
                f"repair produced span {span} > DP bound {table.final()}"
            )
            continue
        return table, actions, span
    raise last_err


def _sorted_robots(inst):
    return sorted(inst.robots, key=lambda r: r.start)


def solve_k_partition_dp(inst):
    """Optimal for equal durations, k-approximation otherwise."""
    if inst.graph.kind != PATH:
        raise TopologyError(f"expected a path instance, got {inst.graph.kind}")
    pairs = _as_pairs(inst.tasks)
    robots = _sorted_robots(inst)
    starts = [r.start for r in robots]
    table, actions, span = solve_sorted_path(inst.n, pairs, starts)
    sched = schedule_set_from_actions(inst, [r.id for r in robots], actions)
    return PathSolveResult(
        table=table,
        schedule_set=sched,
        makespan=span,
        optimal_claimed=_equal_durations(pairs),
    )


@dataclass(frozen=True)
class TwoPartitionResult:
    candidates: tuple  # (q, left span, right span) for q = 0..m
    split: int
    schedule_set: ScheduleSet
    makespan: int
    optimal_claimed: bool


def solve_two_robot_partition(inst):
    """2-robot split: left robot takes a task prefix, right the suffix."""
    if inst.graph.kind != PATH:
        raise TopologyError(f"expected a path instance, got {inst.graph.kind}")
    if inst.k != 2:
        raise PreconditionError(f"two-robot partition needs k=2, got {inst.k}")
    pairs = _as_pairs(inst.tasks)
    robots = _sorted_robots(inst)
    left, right = robots
    m = len(pairs)
    candidates = []
    for q in range(m + 1):
        span_l = one_robot_span(pairs[:q], left.start)
        span_r = one_robot_span(pairs[q:], right.start)
        candidates.append((q, span_l, span_r))
    starts = [left.start, right.start]
    equal = _equal_durations(pairs)
    order = sorted(range(m + 1), key=lambda q: (max(candidates[q][1:]), q))
    best_q = span = actions = None
    last_err = None
    for q in order:
        blocks = [(1, q) if q else (0, -1), (q + 1, m) if q < m else (0, -1)]
        try:
            acts = _realize_blocks(inst.n, pairs, starts, blocks)
        except PlanDeadlockError as exc:
            last_err = exc
            continue
        sp = realized_span(acts)
        if equal and sp > max(candidates[q][1:]):
            last_err = RepairOverrunError(
                f"repair produced span {sp} > {max(candidates[q][1:])}"
            )
            continue
        best_q, span, actions = q, sp, acts
        break
    if best_q is None:
        raise last_err
    sched = schedule_set_from_actions(inst, [left.id, right.id], actions)
    return TwoPartitionResult(
        candidates=tuple(candidates),
        split=best_q,
        schedule_set=sched,
        makespan=span,
        optimal_claimed=_equal_durations(pairs),
    )


@dataclass(frozen=True)
class ApproximationReport:
    solver_span: int
    oracle_span: int
    ratio: float
    bound: int


def approximation_report(inst, horizon=None):
    """Solver vs exhaustive-search spans; ratio must stay within k
    (within 2 for the dedicated 2-robot solver)."""
    if inst.k == 2:
        solver_span = solve_two_robot_partition(inst).makespan
        bound = 2
    else:
        solver_span = solve_k_partition_dp(inst).makespan
        bound = inst.k
    oracle_span, _ = _oracle.exact_optimum(inst, horizon=horizon)
    ratio = solver_span / oracle_span if oracle_span else 1.0
    return ApproximationReport(
        solver_span=solver_span, oracle_span=oracle_span, ratio=ratio, bound=bound
    )
