"""Hardness gadgets: instance generators whose makespan threshold decides
a source problem, plus desk-scale equivalence checks.

Three constructions: number partitioning into k parts on a complete graph,
2-partition on a star, and Hamiltonian path on an arbitrary connected
graph (planarity matters for the hardness claim only, so it is not
verified here). check_reduction compares the oracle's feasibility answer
with an independently brute-forced source answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .model import build_general, make_instance
from .oracle import feasible_within


@dataclass(frozen=True)
class GadgetResult:
    instance: object
    threshold: int


def _complete_edges(n):
    return [(u, v) for u, v in combinations(range(1, n + 1), 2)]


def gadget_complete(values, k):
    """Complete-graph gadget: m task vertices then k robot vertices.

    Task i gets duration s_i - 1; a schedule finishing by sum(s)/k exists
    exactly when the values split into k parts of equal sum.
    """
    values = list(values)
    if any(s < 2 for s in values):
        raise PreconditionError("complete-graph gadget needs every value >= 2")
    if k < 1:
        raise PreconditionError(f"need at least one part, got k={k}")
    total = sum(values)
    if total % k:
        raise PreconditionError(f"sum {total} not divisible by k={k}")
    m = len(values)
    graph = build_general(m + k, _complete_edges(m + k))
    tasks = [(i + 1, s - 1) for i, s in enumerate(values)]
    starts = [m + j for j in range(1, k + 1)]
    inst = make_instance(graph, tasks, starts)
    return GadgetResult(instance=inst, threshold=total // k)


def gadget_star(values):
    """Star gadget for 2-partition: task leaves 1..m, robot leaves m+1 and
    m+2, center m+3. Task i gets duration 2*s_i - 2; threshold 1 + sum(s)."""
    values = list(values)
    if any(s < 2 for s in values):
        raise PreconditionError("star gadget needs every value >= 2")
    m = len(values)
    center = m + 3
    edges = [(i, center) for i in range(1, m + 3)]
    graph = build_general(center, edges)
    tasks = [(i + 1, 2 * s - 2) for i, s in enumerate(values)]
    inst = make_instance(graph, tasks, [m + 1, m + 2])
    return GadgetResult(instance=inst, threshold=1 + sum(values))


def _connected(graph):
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == graph.n


def gadget_planar(graph, start):
    """Hamiltonian-path gadget: a duration-1 task on every vertex, one
    robot; threshold 2n - 1 (work, move, work, ... along a spanning path)."""
    if not _connected(graph):
        raise PreconditionError("gadget needs a connected graph")
    if not (1 <= start <= graph.n):
        raise PreconditionError(f"start {start} outside 1..{graph.n}")
    tasks = [(v, 1) for v in graph.vertices()]
    inst = make_instance(graph, tasks, [start])
    return GadgetResult(instance=inst, threshold=2 * graph.n - 1)


def partition_exists(values, k):
    """Exhaustive check: can the values split into k parts of equal sum?"""
    values = sorted(values, reverse=True)
    total = sum(values)
    if k < 1 or total % k:
        return False
    target = total // k
    sums = [0] * k

    def place(i):
        if i == len(values):
            return True
        tried = set()
        for j in range(k):
            if sums[j] in tried or sums[j] + values[i] > target:
                continue
            tried.add(sums[j])
            sums[j] += values[i]
            if place(i + 1):
                return True
            sums[j] -= values[i]
        return False

    return place(0)


def hamiltonian_path_from(graph, start):
    """Exhaustive DFS: does a Hamiltonian path rooted at start exist?"""
    n = graph.n
    visited = {start}

    def extend(v):
        if len(visited) == n:
            return True
        for w in sorted(graph.neighbors(v)):
            if w not in visited:
                visited.add(w)
                if extend(w):
                    return True
                visited.remove(w)
        return False

    return extend(start)


@dataclass(frozen=True)
class ReductionVerdict:
    feasible: bool
    source_answer: bool
    match: bool


def check_reduction(gadget, source_answer):
    """Compare feasibility at the gadget threshold with the independently
    computed source-problem answer."""
    feasible = feasible_within(gadget.instance, gadget.threshold)
    return ReductionVerdict(
        feasible=feasible,
        source_answer=bool(source_answer),
        match=feasible == bool(source_answer),
    )
