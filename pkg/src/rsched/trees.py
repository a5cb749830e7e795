"""Walk planning on small trees: single-robot task tours and the 2-robot
solver for spider trees (one vertex of degree 3, everything else a path).

Task tours are found by trying completion orders outright; at desk scale
the permutation count is tiny and the best order on a tree is exactly the
classic double-every-edge-except-the-last-branch walk. The 2-robot solver
enumerates the contiguity-respecting partitions of the tasks between the
robots and keeps the fastest jointly executable one.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .errors import PlanDeadlockError, TopologyError
from .model import make_instance
from .motion import (
    plan_move,
    plan_work,
    realize_plans,
    realized_span,
    schedule_set_from_actions,
)

MAX_TOUR_TASKS = 7  # permutation search guard


def adjacency_of(graph):
    return {v: set(graph.neighbors(v)) for v in graph.vertices()}


def shortest_path(adj, src, dst):
    """Vertex sequence src..dst (BFS; unique on trees)."""
    if src == dst:
        return [src]
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w not in prev:
                prev[w] = u
                if w == dst:
                    path = [dst]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                queue.append(w)
    raise PlanDeadlockError(f"no route from {src} to {dst}")


def tour_plan(adj, ordered_tasks, start):
    """Intents visiting tasks in the given order, working each in full."""
    plan = []
    pos = start
    for v, d in ordered_tasks:
        route = shortest_path(adj, pos, v)
        plan.extend(plan_move(a, b) for a, b in zip(route, route[1:]))
        plan.extend(plan_work(v) for _ in range(d))
        pos = v
    return plan


def tour_candidates(adj, tasks, start):
    """All task orders as (span, plan), best span first; deterministic."""
    pairs = sorted(tasks)
    if not pairs:
        return [(0, [])]
    if len(pairs) > MAX_TOUR_TASKS:
        raise TopologyError(
            f"tour search capped at {MAX_TOUR_TASKS} tasks, got {len(pairs)}"
        )
    out = []
    seen = set()
    for perm in permutations(pairs):
        plan = tour_plan(adj, perm, start)
        key = tuple(plan)
        if key in seen:
            continue
        seen.add(key)
        out.append((len(plan), plan))
    out.sort(key=lambda sp: sp[0])
    return out


def all_simple_routes(adj, src, dst, cap=4):
    """Every simple path src..dst (at most cap), shortest first.

    On tadpole-shaped graphs there are at most two; enumerating both lets
    a tour pick the long way around the cycle when that avoids backtracking.
    """
    if src == dst:
        return [[src]]
    out = []
    stack = [(src, [src])]
    while stack and len(out) < cap:
        v, path = stack.pop()
        for w in sorted(adj[v], reverse=True):
            if w == dst:
                out.append(path + [w])
            elif w not in path:
                stack.append((w, path + [w]))
    out.sort(key=len)
    return out


def tour_candidates_multi(adj, tasks, start, keep=6):
    """Task tours where each leg may take any simple route, best first.

    Used on graphs that contain a cycle; tour_candidates (tree version)
    is the special case with unique routes.
    """
    pairs = sorted(tasks)
    if not pairs:
        return [(0, [])]
    if len(pairs) > MAX_TOUR_TASKS:
        raise TopologyError(
            f"tour search capped at {MAX_TOUR_TASKS} tasks, got {len(pairs)}"
        )
    out = []
    seen = set()

    def extend(pos, remaining, plan):
        if not remaining:
            key = tuple(plan)
            if key not in seen:
                seen.add(key)
                out.append((len(plan), list(plan)))
            return
        for i, (v, d) in enumerate(remaining):
            rest = remaining[:i] + remaining[i + 1 :]
            for route in all_simple_routes(adj, pos, v):
                added = [plan_move(a, b) for a, b in zip(route, route[1:])]
                added.extend(plan_work(v) for _ in range(d))
                plan.extend(added)
                extend(v, rest, plan)
                del plan[len(plan) - len(added) :]

    extend(start, pairs, [])
    out.sort(key=lambda sp: sp[0])
    return out[:keep]


def check_spider(graph):
    """Center vertex of a spider tree (None for a bare path)."""
    if len(graph.edges) != graph.n - 1:
        raise TopologyError("spider solver needs a tree")
    center = None
    for v in graph.vertices():
        d = graph.degree(v)
        if d > 3:
            raise TopologyError(f"vertex {v} has degree {d} > 3")
        if d == 3:
            if center is not None:
                raise TopologyError("more than one degree-3 vertex")
            center = v
    return center


def spider_arms(adj, center):
    """The three outward vertex lists from the center."""
    arms = []
    for first in sorted(adj[center]):
        arm = [first]
        prev, cur = center, first
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    return arms


def _linear_coordinates(adj, center):
    """Coordinates along a bare path tree (any consistent orientation)."""
    ends = [v for v in adj if len(adj[v]) <= 1]
    root = min(ends)
    order = shortest_path(adj, root, max(ends)) if len(adj) > 1 else [root]
    return {v: i for i, v in enumerate(order)}


def spider_partitions(adj, tasks, start_a, start_b):
    """Contiguity-respecting splits of the tasks between the two robots.

    Yields (tasks_a, tasks_b) pairs. On the main path (two arms through
    the center, holding both starts) each robot takes a contiguous block;
    on the off arm the deeper block goes to one robot, the rest to the
    other.
    """
    pairs = sorted(tasks)
    try:
        center = None
        degree3 = [v for v in adj if len(adj[v]) == 3]
        if degree3:
            center = degree3[0]
    except Exception:  # pragma: no cover
        center = None

    seen = set()

    def emit(ta, tb):
        key = (tuple(sorted(ta)), tuple(sorted(tb)))
        if key not in seen:
            seen.add(key)
            yield ta, tb

    if center is None:
        coord = _linear_coordinates(adj, None)
        ordered = sorted(pairs, key=lambda t: coord[t[0]])
        if coord[start_a] > coord[start_b]:
            flip = True
        else:
            flip = False
        for q in range(len(ordered) + 1):
            left, right = ordered[:q], ordered[q:]
            ta, tb = (right, left) if flip else (left, right)
            yield from emit(ta, tb)
        return

    arms = spider_arms(adj, center)
    where = {center: (None, 0)}
    for ai, arm in enumerate(arms):
        for depth, v in enumerate(arm, start=1):
            where[v] = (ai, depth)

    for i in range(len(arms)):
        for j in range(i + 1, len(arms)):
            main_arms = {i, j}
            ok = True
            for s in (start_a, start_b):
                ai, _ = where[s]
                if ai is not None and ai not in main_arms:
                    ok = False
            if not ok:
                continue

            def coord(v):
                ai, depth = where[v]
                if ai is None:
                    return 0
                return -depth if ai == i else depth

            main_tasks = sorted(
                (t for t in pairs if where[t[0]][0] in (None, i, j)),
                key=lambda t: coord(t[0]),
            )
            off_tasks = sorted(
                (t for t in pairs if where[t[0]][0] not in (None, i, j)),
                key=lambda t: where[t[0]][1],
            )
            a_left = coord(start_a) <= coord(start_b)
            for q in range(len(main_tasks) + 1):
                left, right = main_tasks[:q], main_tasks[q:]
                for cut in range(len(off_tasks) + 1):
                    shallow, deep = off_tasks[:cut], off_tasks[cut:]
                    for deep_to_left in (True, False):
                        if deep_to_left:
                            la = left + deep
                            lb = right + shallow
                        else:
                            la = left + shallow
                            lb = right + deep
                        ta, tb = (la, lb) if a_left else (lb, la)
                        yield from emit(sorted(ta), sorted(tb))


def spider_plan_candidates(adj, tasks, start_a, start_b, keep_per_split=3):
    """(bound, plan_a, plan_b) triples, cheapest bound first.

    The bound is max of the two solo spans; joint execution can only add
    wait time, so iterating in bound order allows early cut-off.
    """
    out = []
    for ta, tb in spider_partitions(adj, tasks, start_a, start_b):
        cand_a = tour_candidates(adj, ta, start_a)[:keep_per_split]
        cand_b = tour_candidates(adj, tb, start_b)[:keep_per_split]
        for sa, pa in cand_a:
            for sb, pb in cand_b:
                out.append((max(sa, sb), pa, pb))
    out.sort(key=lambda item: item[0])
    return out


@dataclass(frozen=True)
class SpiderSolveResult:
    schedule_set: object
    makespan: int


def solve_two_robot_spider(tree, tasks, start_a, start_b):
    """Fastest 2-robot set on a spider tree (equal durations assumed)."""
    check_spider(tree)
    adj = adjacency_of(tree)
    pairs = sorted((t.vertex, t.duration) if hasattr(t, "vertex") else tuple(t)
                   for t in tasks)
    inst = make_instance(tree, pairs, [start_a, start_b])

    best = None  # (span, actions)
    for bound, pa, pb in spider_plan_candidates(adj, pairs, start_a, start_b):
        if best is not None and bound >= best[0]:
            break
        try:
            actions = realize_plans(tree, [start_a, start_b], [pa, pb])
        except PlanDeadlockError:
            continue
        span = realized_span(actions)
        if best is None or span < best[0]:
            best = (span, actions)
    if best is None:
        raise PlanDeadlockError("no spider partition could be executed")
    span, actions = best
    sched = schedule_set_from_actions(inst, [1, 2], actions)
    return SpiderSolveResult(schedule_set=sched, makespan=span)
