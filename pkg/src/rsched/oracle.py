"""Exact optimum by breadth-first search over joint robot configurations.

Ground truth for every solver at desk scale (roughly n <= 10, k <= 3,
m <= 6). A state is (positions, done-bitmask, per-robot work progress);
BFS layers are elapsed timesteps, so the first task-complete state found
is the optimum. A robot that starts working must keep working until the
task is finished, which encodes single-robot task completion without
tracking assignees.
"""
from __future__ import annotations

import os

from .errors import HorizonExhaustedError, StateBudgetExceededError
from .schedule import ScheduleSet, segments_from_actions

DEFAULT_STATE_BUDGET = 4_000_000

# action encoding inside the search: ("move", v) | ("stay",) | ("work",)
_STAY = ("stay",)
_WORK = ("work",)


def default_horizon(inst):
    """2 * (n + total duration): generous for connected desk-scale instances."""
    return 2 * (inst.n + inst.total_duration())


def horizon_from_env(inst):
    value = os.environ.get("RSCHED_HORIZON")
    if value:
        return int(value)
    return default_horizon(inst)


def _robot_options(inst, pos, progress, done, task_index):
    """Legal actions for one robot, in deterministic order."""
    if progress > 0:
        return [_WORK]  # committed to the task under way
    options = []
    idx = task_index.get(pos)
    if idx is not None and not (done >> idx) & 1:
        options.append(_WORK)
    options.append(_STAY)
    for nb in sorted(inst.graph.neighbors(pos)):
        options.append(("move", nb))
    return options


def _apply(inst, state, actions, task_index, durations):
    positions, done, progress = state
    new_pos = list(positions)
    new_prog = list(progress)
    new_done = done
    for r, act in enumerate(actions):
        if act[0] == "move":
            new_pos[r] = act[1]
            new_prog[r] = 0
        elif act[0] == "work":
            idx = task_index[positions[r]]
            p = progress[r] + 1
            if p == durations[idx]:
                new_done |= 1 << idx
                new_prog[r] = 0
            else:
                new_prog[r] = p
        else:
            new_prog[r] = 0
    return tuple(new_pos), new_done, tuple(new_prog)


def _joint_actions(inst, positions, per_robot_options):
    """Collision-free joint actions, lexicographically by robot option order."""
    k = len(positions)
    out = []

    def targets(r, act):
        return act[1] if act[0] == "move" else positions[r]

    def rec(r, chosen):
        if r == k:
            out.append(tuple(chosen))
            return
        for act in per_robot_options[r]:
            tgt = targets(r, act)
            ok = True
            for q in range(r):
                qt = targets(q, chosen[q])
                if qt == tgt:
                    ok = False
                    break
                # edge swap: q goes a->b while r goes b->a
                if qt == positions[r] and tgt == positions[q]:
                    ok = False
                    break
            if ok:
                chosen.append(act)
                rec(r + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def _search(inst, horizon, state_budget):
    """BFS; returns (makespan, action trace per robot) or raises."""
    task_index = {t.vertex: i for i, t in enumerate(inst.tasks)}
    durations = [t.duration for t in inst.tasks]
    all_done = (1 << inst.m) - 1
    start = (tuple(r.start for r in inst.robots), 0, tuple(0 for _ in inst.robots))

    if start[1] == all_done:
        return 0, [[] for _ in inst.robots]

    parents = {start: None}  # state -> (previous state, joint action)
    frontier = [start]
    for depth in range(1, horizon + 1):
        next_frontier = []
        for state in frontier:
            positions, done, progress = state
            options = [
                _robot_options(inst, positions[r], progress[r], done, task_index)
                for r in range(inst.k)
            ]
            for actions in _joint_actions(inst, positions, options):
                nxt = _apply(inst, state, actions, task_index, durations)
                if nxt in parents:
                    continue
                parents[nxt] = (state, actions)
                if len(parents) > state_budget:
                    raise StateBudgetExceededError(
                        f"search exceeded {state_budget} states"
                    )
                if nxt[1] == all_done:
                    return depth, _trace(parents, nxt, inst.k)
                next_frontier.append(nxt)
        if not next_frontier:
            break
        frontier = next_frontier
    raise HorizonExhaustedError(horizon)


def _trace(parents, state, k):
    per_robot = [[] for _ in range(k)]
    chain = []
    cur = state
    while parents[cur] is not None:
        prev, actions = parents[cur]
        chain.append((prev, actions))
        cur = prev
    chain.reverse()
    for prev, actions in chain:
        positions = prev[0]
        for r, act in enumerate(actions):
            if act[0] == "move":
                per_robot[r].append(("m", positions[r], act[1]))
            elif act[0] == "work":
                per_robot[r].append(("w", positions[r]))
            else:
                per_robot[r].append(("m", positions[r], positions[r]))
    return per_robot


def exact_optimum(inst, horizon=None, state_budget=DEFAULT_STATE_BUDGET):
    """Minimum makespan plus one witness set that passes validate_set.

    Raises HorizonExhaustedError if no task-completing collision-free set
    exists within the horizon, StateBudgetExceededError on blow-up.
    """
    if horizon is None:
        horizon = horizon_from_env(inst)
    makespan, traces = _search(inst, horizon, state_budget)
    schedules = tuple(
        segments_from_actions(r.id, r.start, trace, inst)
        for r, trace in zip(inst.robots, traces)
    )
    return makespan, ScheduleSet(schedules=schedules)


def feasible_within(inst, limit, state_budget=DEFAULT_STATE_BUDGET):
    """True iff some task-completing collision-free set has span <= limit."""
    if limit < 0:
        return False
    try:
        _search(inst, limit, state_budget)
        return True
    except HorizonExhaustedError:
        return False
