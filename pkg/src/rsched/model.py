"""Graph topologies, tasks, robots and problem instances.

Vertex ids are 1-based everywhere (files included) so instances can be read
off the figures of a paper-and-pencil drawing directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InvalidInstanceError,
    InvalidRangeError,
    InvalidSizeError,
    TopologyError,
)

PATH = "path"
CYCLE = "cycle"
TADPOLE = "tadpole"
GENERAL = "general"


def _normalize_edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GraphTopology:
    """An undirected graph with a named shape.

    ``cycle_len``/``path_len`` are only meaningful for tadpoles, where
    vertices ``1..cycle_len`` form the cycle (vertex 1 carries the bridge)
    and ``cycle_len+1..cycle_len+path_len`` form the tail path.
    """

    kind: str
    n: int
    edges: tuple  # sorted tuple of (u, v) with u < v
    cycle_len: int = 0
    path_len: int = 0
    _adjacency: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(
            self, "_adjacency", {v: frozenset(ns) for v, ns in adj.items()}
        )

    def neighbors(self, v):
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def has_edge(self, u, v):
        return _normalize_edge(u, v) in self._edge_set

    @property
    def _edge_set(self):
        return frozenset(self.edges)

    def vertices(self):
        return range(1, self.n + 1)

    def is_legal_move(self, u, v):
        """Self-loops are legal moves even though they are not edges."""
        return u == v or self.has_edge(u, v)


def build_path(n):
    """Path with vertices 1..n and edges (i, i+1)."""
    if n < 1:
        raise InvalidSizeError(f"path needs at least 1 vertex, got {n}")
    edges = tuple((i, i + 1) for i in range(1, n))
    return GraphTopology(kind=PATH, n=n, edges=edges)


def build_cycle(n):
    """Cycle with vertices 1..n; edge (n, 1) closes it."""
    if n < 3:
        raise InvalidSizeError(f"cycle needs at least 3 vertices, got {n}")
    edges = tuple((i, i + 1) for i in range(1, n)) + ((1, n),)
    return GraphTopology(kind=CYCLE, n=n, edges=edges)


def build_tadpole(m, n):
    """Cycle of m vertices with an n-vertex tail attached at vertex 1.

    Vertices 1..m are the cycle, m+1..m+n the tail; the single bridge edge
    is (1, m+1), making vertex 1 the only degree-3 vertex.
    """
    if m < 3:
        raise InvalidSizeError(f"tadpole cycle needs at least 3 vertices, got {m}")
    if n < 1:
        raise InvalidSizeError(f"tadpole tail needs at least 1 vertex, got {n}")
    edges = [(i, i + 1) for i in range(1, m)] + [(1, m)]
    edges.append((1, m + 1))
    edges.extend((i, i + 1) for i in range(m + 1, m + n))
    return GraphTopology(
        kind=TADPOLE, n=m + n, edges=tuple(sorted(edges)), cycle_len=m, path_len=n
    )


def build_general(n, edges):
    """Arbitrary undirected graph on vertices 1..n."""
    if n < 1:
        raise InvalidSizeError(f"graph needs at least 1 vertex, got {n}")
    seen = set()
    for u, v in edges:
        if u == v:
            raise InvalidSizeError(f"self-edge ({u}, {v}) not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidSizeError(f"edge ({u}, {v}) out of range 1..{n}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise InvalidSizeError(f"duplicate edge {e}")
        seen.add(e)
    return GraphTopology(kind=GENERAL, n=n, edges=tuple(sorted(seen)))


def subpath(p, i, j):
    """Induced path on vertices i..j of a path graph.

    Returns (path, offset) where original vertex v maps to v - offset in the
    subpath, so solutions can be mapped back by adding the offset.
    """
    if p.kind != PATH:
        raise TopologyError(f"subpath needs a path topology, got {p.kind}")
    if not (1 <= i <= p.n and 1 <= j <= p.n):
        raise InvalidRangeError(f"range {i}..{j} outside 1..{p.n}")
    if i > j:
        raise InvalidRangeError(f"empty range {i}..{j}")
    return build_path(j - i + 1), i - 1


@dataclass(frozen=True)
class Task:
    vertex: int
    duration: int


@dataclass(frozen=True)
class Robot:
    id: int
    start: int


@dataclass(frozen=True)
class Instance:
    graph: GraphTopology
    tasks: tuple  # Task, sorted by vertex
    robots: tuple  # Robot, ids 1..k in construction order

    @property
    def k(self):
        return len(self.robots)

    @property
    def m(self):
        return len(self.tasks)

    @property
    def n(self):
        return self.graph.n

    def task_at(self, vertex):
        for t in self.tasks:
            if t.vertex == vertex:
                return t
        return None

    def total_duration(self):
        return sum(t.duration for t in self.tasks)


def instance_violations(graph, tasks, robots):
    """All broken Instance invariants, as human-readable strings."""
    violations = []
    seen_vertices = set()
    for t in tasks:
        if not (1 <= t.vertex <= graph.n):
            violations.append(f"task vertex {t.vertex} outside 1..{graph.n}")
        if t.duration < 1:
            violations.append(f"task at v{t.vertex} has duration {t.duration} < 1")
        if t.vertex in seen_vertices:
            violations.append(f"two tasks on vertex {t.vertex}")
        seen_vertices.add(t.vertex)
    if not robots:
        violations.append("instance needs at least one robot")
    starts = set()
    for r in robots:
        if not (1 <= r.start <= graph.n):
            violations.append(f"robot start {r.start} outside 1..{graph.n}")
        if r.start in starts:
            violations.append(f"duplicate robot start vertex {r.start}")
        starts.add(r.start)
    return violations


def make_instance(graph, tasks, starts):
    """Build an Instance from (vertex, duration) pairs and start vertices.

    Tasks are sorted by vertex; robots get ids 1..k in the given order.
    Raises InvalidInstanceError when any invariant is broken.
    """
    task_objs = tuple(
        sorted((Task(vertex=v, duration=d) for v, d in tasks), key=lambda t: t.vertex)
    )
    robot_objs = tuple(Robot(id=i + 1, start=s) for i, s in enumerate(starts))
    violations = instance_violations(graph, task_objs, robot_objs)
    if violations:
        raise InvalidInstanceError(violations)
    return Instance(graph=graph, tasks=task_objs, robots=robot_objs)


def validate_instance(inst):
    """Every violated invariant of an already-built instance; [] means ok."""
    return instance_violations(inst.graph, inst.tasks, inst.robots)
