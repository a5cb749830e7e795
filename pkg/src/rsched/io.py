"""Canonical JSON formats for instances and schedule sets.

Key order is fixed by construction order, so serializing the same object
twice gives identical bytes and parse/serialize round-trips are stable.
"""
from __future__ import annotations

import json

from .errors import MalformedScheduleError, TopologyError
from .model import (
    CYCLE,
    GENERAL,
    PATH,
    TADPOLE,
    build_cycle,
    build_general,
    build_path,
    build_tadpole,
    make_instance,
)
from .schedule import DoTask, Schedule, ScheduleSet, Walk


def graph_to_obj(graph):
    if graph.kind == PATH:
        return {"type": "path", "n": graph.n}
    if graph.kind == CYCLE:
        return {"type": "cycle", "n": graph.n}
    if graph.kind == TADPOLE:
        return {"type": "tadpole", "cycle": graph.cycle_len, "path": graph.path_len}
    return {"type": "general", "n": graph.n, "edges": [list(e) for e in graph.edges]}


def graph_from_obj(obj):
    kind = obj.get("type")
    if kind == "path":
        return build_path(obj["n"])
    if kind == "cycle":
        return build_cycle(obj["n"])
    if kind == "tadpole":
        return build_tadpole(obj["cycle"], obj["path"])
    if kind == "general":
        return build_general(obj["n"], [tuple(e) for e in obj["edges"]])
    raise TopologyError(f"unknown graph type {kind!r}")


def instance_to_json(inst):
    obj = {
        "graph": graph_to_obj(inst.graph),
        "tasks": [{"vertex": t.vertex, "duration": t.duration} for t in inst.tasks],
        "robots": [{"start": r.start} for r in inst.robots],
    }
    return json.dumps(obj)


def instance_from_json(text):
    obj = json.loads(text)
    graph = graph_from_obj(obj["graph"])
    tasks = [(t["vertex"], t["duration"]) for t in obj.get("tasks", [])]
    starts = [r["start"] for r in obj.get("robots", [])]
    return make_instance(graph, tasks, starts)


def schedule_set_to_json(schedule_set):
    schedules = []
    for c in schedule_set:
        segments = []
        for seg in c.segments:
            if isinstance(seg, Walk):
                segments.append({"walk": [list(mv) for mv in seg.moves]})
            elif isinstance(seg, DoTask):
                segments.append({"task": seg.vertex})
            else:
                raise MalformedScheduleError(f"unknown segment type {type(seg)!r}")
        schedules.append({"robot": c.robot, "segments": segments})
    return json.dumps({"schedules": schedules})


def schedule_set_from_json(text):
    obj = json.loads(text)
    schedules = []
    for c in obj.get("schedules", []):
        segments = []
        for seg in c["segments"]:
            if "walk" in seg:
                segments.append(Walk(moves=tuple(tuple(mv) for mv in seg["walk"])))
            elif "task" in seg:
                segments.append(DoTask(vertex=seg["task"]))
            else:
                raise MalformedScheduleError(f"unknown segment object {seg!r}")
        schedules.append(Schedule(robot=c["robot"], segments=tuple(segments)))
    return ScheduleSet(schedules=tuple(schedules))


def load_instance(path):
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_json(fh.read())


def save_instance(inst, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(instance_to_json(inst) + "\n")


def load_schedule_set(path):
    with open(path, "r", encoding="utf-8") as fh:
        return schedule_set_from_json(fh.read())


def save_schedule_set(schedule_set, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(schedule_set_to_json(schedule_set) + "\n")
