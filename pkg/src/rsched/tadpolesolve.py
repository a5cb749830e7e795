"""Tadpole solver: enumerate how work splits across the connector, solve
the parts with the path and cycle machinery, and execute everything
jointly on the real graph.

In some fastest schedule set at most two robots (the crossers) complete
tasks on both the cycle and the path, and their tasks sit on a subtree of
the graph. The enumeration therefore ranges over crosser sets of size 0,
1 or 2 and over boundary tasks: the deepest task taken on each cycle arc
and the deepest prefix task taken on the path. Remaining cycle tasks form
a cycle sub-instance for a chosen subset of the leftover cycle robots;
remaining path tasks form an extended-path sub-instance where leftover
cycle-side robots are funnelled through the connector, greedily assigned
virtual slots before the path's first vertex (ties by robot index), their
extra distance showing up as initial waiting. Each candidate is executed
with wait-and-push repair; the fastest realized set wins.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cyclesolve import solve_cycle
from .errors import PlanDeadlockError, RepairOverrunError, TopologyError
from .model import TADPOLE, build_cycle, make_instance
from .motion import plan_move, realize_plans, realized_span, route_moves, schedule_set_from_actions
from .pathsolve import _equal_durations, blocks_from_table, k_partition_table, one_robot_plan
from .schedule import DoTask, ScheduleSet, Walk
from .trees import MAX_TOUR_TASKS, adjacency_of, tour_candidates_multi

MAX_JOINT_TRIES = 12  # joint executions attempted per selection


@dataclass(frozen=True)
class TadpoleSolveResult:
    schedule_set: ScheduleSet
    makespan: int
    optimal_claimed: bool


def _schedule_actions(sched, inst):
    """Flatten a Schedule back into per-timestep action intents."""
    acts = []
    for seg in sched.segments:
        if isinstance(seg, Walk):
            acts.extend(("m", u, v) for u, v in seg.moves)
        elif isinstance(seg, DoTask):
            task = inst.task_at(seg.vertex)
            acts.extend(("w", seg.vertex) for _ in range(task.duration))
    return acts


def _shift_actions(acts, offset):
    out = []
    for a in acts:
        if a[0] == "m":
            out.append(("m", a[1] + offset, a[2] + offset))
        else:
            out.append(("w", a[1] + offset))
    return out


def _subsets(items):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


class _Planner:
    """Per-instance sub-solvers with memoisation across selections."""

    def __init__(self, inst):
        self.inst = inst
        self.big_m = inst.graph.cycle_len
        self.big_n = inst.graph.path_len
        self.adj = adjacency_of(inst.graph)
        self._cycle_cache = {}
        self._ext_cache = {}
        self._tour_cache = {}

    def cycle_side(self, far_pairs, robot_ids):
        """solve_cycle on the leftover cycle tasks; (bound, plans by id)."""
        key = (frozenset(far_pairs), frozenset(robot_ids))
        if key not in self._cycle_cache:
            self._cycle_cache[key] = self._cycle_side(far_pairs, robot_ids)
        return self._cycle_cache[key]

    def _cycle_side(self, far_pairs, robot_ids):
        robots = [r for r in self.inst.robots if r.id in robot_ids]
        if not far_pairs:
            return 0, {r.id: [] for r in robots}
        try:
            sub = make_instance(
                build_cycle(self.big_m), sorted(far_pairs), [r.start for r in robots]
            )
            res = solve_cycle(sub)
        except (RepairOverrunError, PlanDeadlockError):
            return None
        plans = {
            r.id: _schedule_actions(sched, sub)
            for r, sched in zip(robots, res.schedule_set)
        }
        return res.makespan, plans

    def _funnel_route(self, p):
        """Shortest cycle-side route to the path entrance, ties clockwise."""
        if p == 1:
            return [1, self.big_m + 1]
        down = list(range(p, 0, -1))
        up = list(range(p, self.big_m + 1)) + [1]
        route = down if len(down) <= len(up) else up
        return route + [self.big_m + 1]

    def extended_path(self, rem_pairs, robot_ids):
        """Leftover path tasks on the path extended by funnel slots."""
        key = (frozenset(rem_pairs), frozenset(robot_ids))
        if key not in self._ext_cache:
            self._ext_cache[key] = self._extended_path(rem_pairs, robot_ids)
        return self._ext_cache[key]

    def _extended_path(self, rem_pairs, robot_ids):
        big_m = self.big_m
        robots = [r for r in self.inst.robots if r.id in robot_ids]
        if not rem_pairs:
            return 0, {r.id: [] for r in robots}
        funnel = sorted(
            (r for r in robots if r.start <= big_m),
            key=lambda r: (len(self._funnel_route(r.start)) - 1, r.id),
        )
        used = set()
        info = {}
        for r in funnel:
            route = self._funnel_route(r.start)
            dist = len(route) - 1
            slot = dist
            while slot in used:
                slot += 1
            used.add(slot)
            info[r.id] = (route, dist, slot)
        shift = max(used, default=0)

        entries = [
            (r.start - big_m + shift, r) for r in robots if r.start > big_m
        ]
        entries.extend((1 - info[r.id][2] + shift, r) for r in funnel)
        entries.sort(key=lambda e: e[0])
        ext_pairs = sorted((j + shift, d) for j, d in rem_pairs)
        table = k_partition_table(ext_pairs, [coord for coord, _ in entries])
        plans = {}
        for (coord, r), (lo, hi) in zip(entries, blocks_from_table(table)):
            block = ext_pairs[lo - 1 : hi] if lo >= 1 else []
            plan = one_robot_plan(block, coord)
            if r.id not in info:
                plans[r.id] = _shift_actions(plan, big_m - shift)
                continue
            if not plan:
                plans[r.id] = []
                continue
            route, dist, slot = info[r.id]
            # the first `slot` intents walk the virtual prefix: realize them
            # as initial waiting plus the concrete route to the path
            mapped = [plan_move(r.start, r.start)] * (slot - dist)
            mapped.extend(route_moves(route))
            mapped.extend(_shift_actions(plan[slot:], big_m - shift))
            plans[r.id] = mapped
        return table.final(), plans

    def tours(self, t_pairs, start):
        key = (frozenset(t_pairs), start)
        if key not in self._tour_cache:
            self._tour_cache[key] = tour_candidates_multi(
                self.adj, sorted(t_pairs), start
            )
        return self._tour_cache[key]

    def crosser_candidates(self, t_pairs, crossers):
        """(bound, plan per crosser) pairs, cheapest bound first."""
        if len(crossers) == 1:
            return [(sp, (pl,)) for sp, pl in self.tours(t_pairs, crossers[0].start)]
        out = []
        t_list = sorted(t_pairs)
        for share in _subsets(t_list):
            rest = [t for t in t_list if t not in share]
            for sa, pa in self.tours(share, crossers[0].start)[:3]:
                for sb, pb in self.tours(rest, crossers[1].start)[:3]:
                    out.append((max(sa, sb), (pa, pb)))
        out.sort(key=lambda item: item[0])
        return out


def solve_tadpole(inst):
    """Fastest schedule set on a tadpole (exact for equal durations)."""
    if inst.graph.kind != TADPOLE:
        raise TopologyError(f"expected a tadpole instance, got {inst.graph.kind}")
    big_m = inst.graph.cycle_len
    pairs = [(t.vertex, t.duration) for t in inst.tasks]
    equal = _equal_durations(pairs)
    robots = list(inst.robots)
    order = [r.id for r in robots]
    starts = [r.start for r in robots]

    if not pairs:
        sched = schedule_set_from_actions(inst, order, [[] for _ in robots])
        return TadpoleSolveResult(schedule_set=sched, makespan=0, optimal_claimed=True)

    planner = _Planner(inst)
    cyc_pos = sorted(v for v, _ in pairs if 2 <= v <= big_m)
    depths = sorted(v - big_m for v, _ in pairs if v > big_m)

    variants = []  # (bound, sub bound, fixed plans, crosser cands, crossers)
    seen = set()
    crosser_sets = [()] + [(r,) for r in robots] + list(combinations(robots, 2))
    for crossers in crosser_sets:
        x_ids = frozenset(r.id for r in crossers)
        boundaries = (
            [(None, None, 0)]
            if not crossers
            else [
                (a, b, j3)
                for a in [None] + cyc_pos
                for b in [None] + cyc_pos
                if a is None or b is None or a < b
                for j3 in [0] + depths
            ]
        )
        for a, b, j3 in boundaries:
            aa = a if a is not None else 1
            bb = b if b is not None else big_m + 1
            t_full = frozenset(
                (v, d)
                for v, d in pairs
                if (v <= big_m and (v <= aa or v >= bb))
                or (big_m < v <= big_m + j3)
            ) if crossers else frozenset()
            # a task on the connector itself may go either to the crossers
            # or to the cycle side
            connector = frozenset((v, d) for v, d in t_full if v == 1)
            t_choices = [t_full]
            if connector and len(t_full) > len(connector):
                t_choices.append(t_full - connector)
            for t_pairs in t_choices:
                if crossers and not t_pairs:
                    continue
                if len(t_pairs) > MAX_TOUR_TASKS:
                    continue
                far_pairs = frozenset(
                    (v, d) for v, d in pairs if v <= big_m and (v, d) not in t_pairs
                )
                rem_pairs = frozenset(
                    (v - big_m, d)
                    for v, d in pairs
                    if v > big_m and (v, d) not in t_pairs
                )
                leftovers = [r for r in robots if r.id not in x_ids]
                cyc_eligible = [r for r in leftovers if r.start <= big_m]
                for cyc_side in _subsets(cyc_eligible):
                    cyc_ids = frozenset(r.id for r in cyc_side)
                    ext_ids = frozenset(
                        r.id for r in leftovers if r.id not in cyc_ids
                    )
                    if far_pairs and not cyc_ids:
                        continue
                    if rem_pairs and not ext_ids:
                        continue
                    key = (far_pairs, cyc_ids, rem_pairs, ext_ids, x_ids, t_pairs)
                    if key in seen:
                        continue
                    seen.add(key)
                    cyc_entry = planner.cycle_side(far_pairs, cyc_ids)
                    if cyc_entry is None:
                        continue
                    ext_entry = planner.extended_path(rem_pairs, ext_ids)
                    fixed = dict(cyc_entry[1])
                    fixed.update(ext_entry[1])
                    sub_bound = max(cyc_entry[0], ext_entry[0])
                    if crossers:
                        cands = planner.crosser_candidates(t_pairs, crossers)
                    else:
                        cands = [(0, ())]
                    bound = max(sub_bound, cands[0][0])
                    variants.append((bound, sub_bound, fixed, cands, crossers))

    variants.sort(key=lambda v: v[0])
    best = None  # (span, actions per robot in instance order)
    for bound, sub_bound, fixed, cands, crossers in variants:
        if best is not None and bound >= best[0]:
            break
        tried = 0
        for cbound, xplans in cands:
            if best is not None and max(sub_bound, cbound) >= best[0]:
                break
            if tried >= MAX_JOINT_TRIES:
                break
            tried += 1
            plans = dict(fixed)
            for r, plan in zip(crossers, xplans):
                plans[r.id] = plan
            try:
                acts = realize_plans(
                    inst.graph, starts, [plans.get(rid, []) for rid in order]
                )
            except PlanDeadlockError:
                continue
            span = realized_span(acts)
            if best is None or span < best[0]:
                best = (span, acts)

    if best is None:
        raise PlanDeadlockError("no selection produced an executable schedule set")
    span, acts = best
    sched = schedule_set_from_actions(inst, order, acts)
    return TadpoleSolveResult(schedule_set=sched, makespan=span, optimal_claimed=equal)
