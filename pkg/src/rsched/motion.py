"""Turn per-robot planned walks into a collision-free joint execution.

Each robot gets a plan of atomic intents: moves along edges (or waits it
planned itself) and single work steps. The simulator advances all plans in
lockstep, making a robot wait when its target vertex is contested, and
shoving robots that have finished their plan out of the way when a working
route runs through their parking spot. On path-shaped territories with
order-consistent plans this always terminates; a genuinely stuck step
raises PlanDeadlockError.
"""
from __future__ import annotations

from .errors import PlanDeadlockError
from .schedule import ScheduleSet, segments_from_actions

MOVE = "m"
WORK = "w"


def plan_move(u, v):
    return (MOVE, u, v)

def plan_work(v):
    return (WORK, v)


def route_moves(path_vertices):
    """Moves along a concrete vertex sequence."""
    return [plan_move(u, v) for u, v in zip(path_vertices, path_vertices[1:])]


class _Sim:
    def __init__(self, graph, starts, plans, forbidden_edges):
        self.graph = graph
        self.starts = list(starts)
        self.plans = [list(p) for p in plans]
        self.forbidden = {tuple(sorted(e)) for e in forbidden_edges}
        self.pos = list(starts)
        self.idx = [0] * len(starts)
        self.actions = [[] for _ in starts]

    def edge_ok(self, u, v):
        if u == v:
            return True
        return (
            tuple(sorted((u, v))) not in self.forbidden
            and v in self.graph.neighbors(u)
        )

    def parked(self, r):
        return self.idx[r] >= len(self.plans[r])

    def desired(self, r):
        if self.parked(r):
            return None
        return self.plans[r][self.idx[r]]

    def run(self, max_steps):
        k = len(self.pos)
        for _ in range(max_steps):
            if all(self.parked(r) for r in range(k)):
                return self.actions
            granted = {}  # robot -> target vertex this step (moves only)
            workers = set()
            occupant = {v: r for r, v in enumerate(self.pos)}

            def free_at_end(v, mover):
                occ = occupant.get(v)
                if occ is None or occ == mover:
                    return True
                return occ in granted and granted[occ] != v

            def try_grant(r, tgt, visiting):
                """Grant r's move to tgt, pushing parked robots if needed."""
                if tgt in granted.values():
                    return False
                # swap check: the occupant of tgt moving into r's cell
                occ = occupant.get(tgt)
                if occ is not None and granted.get(occ) == self.pos[r]:
                    return False
                if free_at_end(tgt, r):
                    granted[r] = tgt
                    return True
                if occ is None or occ in visiting:
                    return False
                if self.parked(occ) and occ not in granted and occ not in workers:
                    # push the parked robot one step further on, chaining
                    for w in sorted(self.graph.neighbors(tgt)):
                        if w == self.pos[r] or not self.edge_ok(tgt, w):
                            continue
                        if try_grant(occ, w, visiting | {r}):
                            granted[r] = tgt
                            return True
                return False

            # fixpoint over move grants; work steps never conflict
            changed = True
            while changed:
                changed = False
                for r in range(k):
                    if r in granted or r in workers:
                        continue
                    want = self.desired(r)
                    if want is None:
                        continue
                    if want[0] == WORK:
                        workers.add(r)
                        changed = True
                    else:
                        tgt = want[2]
                        if try_grant(r, tgt, {r}):
                            changed = True

            progressed = False
            for r in range(k):
                if r in workers:
                    self.actions[r].append((WORK, self.pos[r]))
                    self.idx[r] += 1
                    progressed = True
                elif r in granted:
                    tgt = granted[r]
                    self.actions[r].append((MOVE, self.pos[r], tgt))
                    want = self.desired(r)
                    if want is not None and want[0] == MOVE and want[2] == tgt:
                        self.idx[r] += 1
                        progressed = True
                    # else: an induced push, not plan progress
                    self.pos[r] = tgt
                else:
                    self.actions[r].append((MOVE, self.pos[r], self.pos[r]))
            if not progressed:
                raise PlanDeadlockError(
                    f"no plan progress at positions {self.pos}"
                )
        raise PlanDeadlockError("plan realization exceeded its step budget")


def realize_plans(graph, starts, plans, forbidden_edges=(), max_steps=None):
    """Execute plans with wait/push repair; per-robot action lists."""
    if max_steps is None:
        total = sum(len(p) for p in plans)
        max_steps = 4 * total + 4 * graph.n * max(1, len(starts)) + 16
    sim = _Sim(graph, starts, plans, forbidden_edges)
    return sim.run(max_steps)


def realized_span(actions):
    """Span of the realized set: trailing waits do not count."""
    best = 0
    for acts in actions:
        last = 0
        for t, act in enumerate(acts, start=1):
            if act[0] == WORK or act[1] != act[2]:
                last = t
        best = max(best, last)
    return best


def schedule_set_from_actions(inst, robot_ids, actions):
    """Assemble a ScheduleSet (in robot-id order) from realized actions."""
    by_id = {}
    for rid, acts in zip(robot_ids, actions):
        robot = next(r for r in inst.robots if r.id == rid)
        by_id[rid] = segments_from_actions(rid, robot.start, acts, inst)
    schedules = tuple(by_id[r.id] for r in inst.robots)
    return ScheduleSet(schedules=schedules)
