"""Schedules, their walk-representation normal form, and the validator.

A schedule alternates walk segments and task segments. The walk
representation flattens it to one move per timestep, expanding a task of
duration d into d self-loops at its vertex. All collision checking happens
on walk representations padded to a common length: a finished robot keeps
occupying its final vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedScheduleError, UnknownTaskError


@dataclass(frozen=True)
class Walk:
    moves: tuple  # ((u, v), ...), chained

    def __post_init__(self):
        if not self.moves:
            raise MalformedScheduleError("walk segment must be nonempty")


@dataclass(frozen=True)
class DoTask:
    vertex: int


@dataclass(frozen=True)
class Schedule:
    robot: int  # robot id
    segments: tuple


@dataclass(frozen=True)
class WalkRep:
    start: int
    moves: tuple  # one (u, v) per timestep

    def __len__(self):
        return len(self.moves)

    def positions(self):
        """Vertex occupied at timesteps 0..len, starting vertex first."""
        out = [self.start]
        out.extend(v for _, v in self.moves)
        return out


@dataclass(frozen=True)
class ScheduleSet:
    schedules: tuple  # one Schedule per robot, in robot-id order

    def __iter__(self):
        return iter(self.schedules)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple
    span: int


def _robot_by_id(inst, robot_id):
    for r in inst.robots:
        if r.id == robot_id:
            return r
    raise MalformedScheduleError(f"no robot with id {robot_id}")


def walk_representation(schedule, inst):
    """Flatten a schedule into one move per timestep.

    Raises UnknownTaskError for a DoTask on a vertex with no task, and
    MalformedScheduleError for broken chaining, non-edge moves, or a first
    position that is not the robot's start vertex.
    """
    robot = _robot_by_id(inst, schedule.robot)
    pos = robot.start
    moves = []
    for seg in schedule.segments:
        if isinstance(seg, Walk):
            for u, v in seg.moves:
                if u != pos:
                    raise MalformedScheduleError(
                        f"robot {robot.id}: move ({u},{v}) does not chain from {pos}"
                    )
                if not inst.graph.is_legal_move(u, v):
                    raise MalformedScheduleError(
                        f"robot {robot.id}: ({u},{v}) is not an edge or self-loop"
                    )
                moves.append((u, v))
                pos = v
        elif isinstance(seg, DoTask):
            if seg.vertex != pos:
                raise MalformedScheduleError(
                    f"robot {robot.id}: task at v{seg.vertex} but robot is at v{pos}"
                )
            task = inst.task_at(seg.vertex)
            if task is None:
                raise UnknownTaskError(f"no task on vertex {seg.vertex}")
            moves.extend((pos, pos) for _ in range(task.duration))
        else:
            raise MalformedScheduleError(f"unknown segment type {type(seg)!r}")
    return WalkRep(start=robot.start, moves=tuple(moves))


def schedule_span(schedule, inst):
    return len(walk_representation(schedule, inst))


def time_span(schedule_set, inst):
    """Max over robots of the schedule length; 0 for an all-empty set."""
    spans = [len(walk_representation(c, inst)) for c in schedule_set]
    return max(spans, default=0)


def pad_to(rep, span):
    """Append self-loops at the final vertex until the rep has length span."""
    if span < len(rep):
        raise MalformedScheduleError(f"cannot pad length {len(rep)} down to {span}")
    last = rep.moves[-1][1] if rep.moves else rep.start
    extra = tuple((last, last) for _ in range(span - len(rep)))
    return WalkRep(start=rep.start, moves=rep.moves + extra)


def _task_coverage(schedule_set, inst, violations):
    """Check every task is one contiguous DoTask in exactly one schedule."""
    owners = {t.vertex: [] for t in inst.tasks}
    for c in schedule_set:
        for seg in c.segments:
            if isinstance(seg, DoTask):
                if seg.vertex not in owners:
                    violations.append(
                        f"robot {c.robot} works at v{seg.vertex} where no task exists"
                    )
                else:
                    owners[seg.vertex].append(c.robot)
    for t in inst.tasks:
        who = owners[t.vertex]
        if not who:
            violations.append(f"task at v{t.vertex} is never completed")
        elif len(who) > 1:
            violations.append(
                f"task at v{t.vertex} appears in schedules of robots {sorted(who)}"
            )


def validate_set(schedule_set, inst):
    """Task-completing + collision-free verdict for a set of schedules.

    Collision rule per timestep s on padded reps: targets differ, origins
    differ, and no pair swaps an edge in opposite directions.
    """
    violations = []
    if len(schedule_set.schedules) != inst.k:
        violations.append(
            f"expected {inst.k} schedules, got {len(schedule_set.schedules)}"
        )
        return Verdict(valid=False, violations=tuple(violations), span=0)

    reps = []
    for c in schedule_set:
        try:
            reps.append(walk_representation(c, inst))
        except (MalformedScheduleError, UnknownTaskError) as exc:
            violations.append(str(exc))
    if violations:
        return Verdict(valid=False, violations=tuple(violations), span=0)

    _task_coverage(schedule_set, inst, violations)

    span = max((len(r) for r in reps), default=0)
    padded = [pad_to(r, span) for r in reps]

    starts = [r.start for r in reps]
    for i in range(len(starts)):
        for j in range(i + 1, len(starts)):
            if starts[i] == starts[j]:
                violations.append(
                    f"robots {i + 1} and {j + 1} share start vertex {starts[i]}"
                )

    for s in range(span):
        for i in range(len(padded)):
            vi, ui = padded[i].moves[s]
            for j in range(i + 1, len(padded)):
                vj, uj = padded[j].moves[s]
                if ui == uj:
                    violations.append(
                        f"timestep {s + 1}: robots {i + 1} and {j + 1} "
                        f"both occupy vertex {ui}"
                    )
                elif vi == vj:
                    violations.append(
                        f"timestep {s + 1}: robots {i + 1} and {j + 1} "
                        f"both depart vertex {vi}"
                    )
                elif (vi, ui) == (uj, vj):
                    violations.append(
                        f"timestep {s + 1}: robots {i + 1} and {j + 1} "
                        f"swap edge ({vi},{ui})"
                    )
    return Verdict(valid=not violations, violations=tuple(violations), span=span)


def gantt(schedule_set, inst):
    """One text row per robot: vertex per timestep, '*' marks task work.

    Byte-stable for golden tests; an empty set yields an empty string.
    """
    if not schedule_set.schedules:
        return ""
    reps = [walk_representation(c, inst) for c in schedule_set]
    span = max((len(r) for r in reps), default=0)
    work = []
    for c in schedule_set:
        marks = []
        for seg in c.segments:
            if isinstance(seg, Walk):
                marks.extend(False for _ in seg.moves)
            else:
                task = inst.task_at(seg.vertex)
                marks.extend(True for _ in range(task.duration))
        work.append(marks)
    width = max(len(str(v)) for v in range(1, inst.n + 1)) + 1
    lines = []
    for c, rep, marks in zip(schedule_set, reps, work):
        cells = []
        positions = pad_to(rep, span).positions()
        for s, v in enumerate(positions):
            mark = "*" if 1 <= s <= len(marks) and marks[s - 1] else " "
            cells.append(f"{v}{mark}".rjust(width + 1))
        lines.append(f"R{c.robot}:" + "".join(cells))
    return "\n".join(lines) + "\n"


def segments_from_actions(robot_id, start, actions, inst):
    """Build a Schedule from per-timestep actions.

    Actions are ('m', u, v) moves (self-loops included) and ('w', v) work
    steps. Contiguous work runs become DoTask segments; trailing self-loops
    are trimmed.
    """
    trimmed = list(actions)
    while trimmed and trimmed[-1][0] == "m" and trimmed[-1][1] == trimmed[-1][2]:
        trimmed.pop()
    segments = []
    walk = []
    i = 0
    while i < len(trimmed):
        act = trimmed[i]
        if act[0] == "m":
            walk.append((act[1], act[2]))
            i += 1
        else:
            if walk:
                segments.append(Walk(moves=tuple(walk)))
                walk = []
            v = act[1]
            run = 0
            while i < len(trimmed) and trimmed[i][0] == "w" and trimmed[i][1] == v:
                run += 1
                i += 1
            task = inst.task_at(v)
            if task is None or task.duration != run:
                raise MalformedScheduleError(
                    f"work run of {run} steps at v{v} does not match a task"
                )
            segments.append(DoTask(vertex=v))
    if walk:
        segments.append(Walk(moves=tuple(walk)))
    return Schedule(robot=robot_id, segments=tuple(segments))
